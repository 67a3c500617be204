#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "kvb/var.hpp"

namespace kvb {

// A Laurent monomial: sorted (variable, nonzero exponent) pairs.
class Monomial {
public:
    using Entry = std::pair<Var, int>;
    using Storage = boost::container::small_vector<Entry, 6>;

    Monomial() = default;
    static Monomial var(Var v, int e = 1);
    // Sorts, merges repeated variables and drops zero exponents.
    static Monomial from_entries(Storage entries);

    const Storage& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    int exponent(Var v) const;
    int degree() const;

    Monomial operator*(const Monomial& o) const;
    Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
    Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }
    Monomial inverse() const;
    Monomial pow(int e) const;

    // Parts consisting of formal variables (z, w) and of everything else.
    Monomial formal_part() const;
    Monomial non_formal_part() const;

    // Exponentwise minimum; a variable absent from one side counts as 0.
    static Monomial gcd_lower(const Monomial& a, const Monomial& b);
    bool is_nonnegative() const;
    // a divides b as ordinary monomials with nonnegative exponents.
    bool divides(const Monomial& b) const;

    // True when m is the chosen representative of {m, 1/m}: positive degree,
    // or degree zero with a positive exponent on the first variable.
    bool is_canonical_root() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }

    template <typename H>
    friend H AbslHashValue(H h, const Monomial& m) {
        for (const auto& [v, e] : m.entries_) h = H::combine(std::move(h), v.code(), e);
        return H::combine(std::move(h), m.entries_.size());
    }

private:
    Storage entries_;
};

// Graded lexicographic order with variables ordered by their code.
std::strong_ordering grlex(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) > 0; }
};

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) < 0; }
};

// A multiplicative substitution v -> monomial; unlisted variables are fixed.
class VarSubstitution {
public:
    void set(Var v, Monomial image);
    void rename(Var from, Var to) { set(from, Monomial::var(to)); }
    bool empty() const { return map_.empty(); }
    const Monomial* find(Var v) const;
    Monomial apply(const Monomial& m) const;
    // this after other: apply(other.apply(m)).
    VarSubstitution after(const VarSubstitution& other) const;

private:
    std::vector<std::pair<Var, Monomial>> map_;
};

}  // namespace kvb
