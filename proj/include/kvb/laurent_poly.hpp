#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <boost/multiprecision/cpp_int.hpp>

#include "kvb/monomial.hpp"

namespace kvb {

using Integer = boost::multiprecision::cpp_int;

// Finite Z-linear combination of Laurent monomials.
class LaurentPoly {
public:
    using Map = absl::flat_hash_map<Monomial, Integer>;
    using Term = std::pair<Monomial, Integer>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: integers convert implicitly
    LaurentPoly(const Integer& c);  // NOLINT
    static LaurentPoly monomial(const Monomial& m, const Integer& c = 1);
    static LaurentPoly var(Var v, int e = 1) { return monomial(Monomial::var(v, e)); }
    // 1 - m
    static LaurentPoly one_minus(const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    // Terms in decreasing graded lexicographic order.
    std::vector<Term> sorted_terms() const;
    Integer coefficient(const Monomial& m) const;
    // The constant if this is a constant, otherwise nullopt.
    std::optional<Integer> constant() const;
    // The monomial and coefficient if this has a single term.
    std::optional<Term> single_term() const;

    void add_term(const Monomial& m, const Integer& c);
    void add_term(Monomial&& m, Integer&& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const Monomial& m);
    LaurentPoly& operator*=(const Integer& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Monomial& m) { return a *= m; }
    LaurentPoly operator-() const;
    LaurentPoly pow(unsigned k) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly substitute(const VarSubstitution& s) const;
    // Applies a monoid morphism f to every monomial.
    template <typename F>
    LaurentPoly transform(F f) const {
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) r.add_term(f(m), c);
        return r;
    }
    // Exact division of every coefficient; nullopt if some coefficient is not divisible.
    std::optional<LaurentPoly> divide_exact(const Integer& c) const;
    // Exact division in the Laurent polynomial ring; nullopt if d does not divide.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;
    // Exponentwise minimum over all terms (absent variables count as 0).
    Monomial lower_monomial() const;
    bool contains_formal() const;
    // Drops terms whose monomial fails the predicate.
    template <typename Pred>
    LaurentPoly filter(Pred keep) const {
        LaurentPoly r;
        for (const auto& [m, c] : terms_)
            if (keep(m)) r.terms_.emplace(m, c);
        return r;
    }

private:
    Map terms_;
};

std::string to_string(const LaurentPoly& p, const VarTable& vars);

}  // namespace kvb
