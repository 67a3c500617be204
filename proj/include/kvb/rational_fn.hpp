#pragma once

#include <map>
#include <string>

#include "kvb/laurent_poly.hpp"

namespace kvb {

// coeff * prod_m (1 - m)^{k_m}, each m a canonical root (see
// Monomial::is_canonical_root), k_m a nonzero integer. Every rational
// function in this library has a denominator of this shape.
class RationalFn {
public:
    using Factors = std::map<Monomial, int, GrlexLess>;

    RationalFn() = default;
    RationalFn(LaurentPoly p) : coeff_(std::move(p)) {}  // NOLINT
    RationalFn(long c) : coeff_(c) {}                     // NOLINT
    // (1 - m)^k; throws DegenerateKernelError if m == 1 and k < 0.
    static RationalFn binomial(const Monomial& m, int k);

    const LaurentPoly& coeff() const { return coeff_; }
    const Factors& factors() const { return factors_; }
    bool is_zero() const { return coeff_.is_zero(); }

    // Expanded numerator and denominator with no common factor among the
    // recorded binomials.
    LaurentPoly numerator() const;
    LaurentPoly denominator() const;

    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator*=(const LaurentPoly& p);
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    // Requires o to be a monomial times binomial factors.
    RationalFn& operator/=(const RationalFn& o);
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
    RationalFn inverse() const;
    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend bool operator==(const RationalFn& a, const RationalFn& b);

    // Cancels negative factors against the coefficient where exact.
    RationalFn& reduce();
    // The Laurent polynomial if, after reduction, no denominator remains.
    std::optional<LaurentPoly> as_polynomial() const;

    RationalFn substitute(const VarSubstitution& s) const;
    // Applies a monoid morphism f to every monomial, factors included.
    template <typename F>
    RationalFn transform(F f) const {
        RationalFn r(coeff_.transform(f));
        for (const auto& [m, k] : factors_) r.multiply_binomial(f(m), k);
        if (r.coeff_.is_zero()) r.factors_.clear();
        return r;
    }

    // Sum with one common denominator and a single final reduction.
    static RationalFn sum(const std::vector<RationalFn>& terms);

private:
    void multiply_binomial(const Monomial& m, int k);

    LaurentPoly coeff_;
    Factors factors_;
};

std::string to_string(const RationalFn& r, const VarTable& vars);

}  // namespace kvb
