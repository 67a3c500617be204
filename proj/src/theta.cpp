#include "kvb/theta.hpp"

#include "kvb/errors.hpp"

namespace kvb {

void ThetaProduct::add(const Monomial& formal, const Monomial& root, int k) {
    if (k == 0) return;
    Monomial full = formal * root;
    Key key{full.formal_part(), full.non_formal_part()};
    int& e = factors_[key];
    e += k;
    if (e == 0) factors_.erase(key);
}

ThetaProduct ThetaProduct::operator*(const ThetaProduct& o) const {
    ThetaProduct r = *this;
    for (const auto& [key, k] : o.factors_) r.add(key.first, key.second, k);
    return r;
}

ThetaProduct ThetaProduct::inverse() const {
    ThetaProduct r;
    for (const auto& [key, k] : factors_) r.factors_[key] = -k;
    return r;
}

RationalFn ThetaProduct::to_rational() const {
    RationalFn r(1);
    for (const auto& [key, k] : factors_) r *= RationalFn::binomial(key.first * key.second, k);
    return r;
}

std::string ThetaProduct::to_string(const VarTable& vars) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [key, k] : factors_) {
        if (!out.empty()) out += " * ";
        out += "(" + kvb::to_string(LaurentPoly::one_minus(key.first * key.second), vars) + ")";
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

ThetaProduct theta(const Quiver& q, const DimVector& alpha, Tag a, const DimVector& beta, Tag b, const Monomial& t) {
    ThetaProduct th;
    SignedRoots e = bilinear_class(q, alpha, a, beta, b);
    for (const auto& [m, k] : e.roots()) th.add(t, m.inverse(), k);
    return th;
}

FormalSeries theta_expand(const ThetaProduct& t, int window_low) {
    LaurentPoly exact(1);
    FormalSeries s = FormalSeries::from_poly(LaurentPoly(1));
    for (const auto& [key, k] : t.factors()) {
        if (k > 0) {
            exact *= LaurentPoly::one_minus(key.first * key.second).pow(unsigned(k));
        } else if (key.first.is_one()) {
            throw WindowError("theta factor without a formal variable cannot be inverted as a series");
        } else {
            s *= expand_factor(key.first, key.second, k, window_low);
        }
    }
    return s * FormalSeries::from_poly(exact);
}

RationalFn kernel_at_one(const Quiver& q, const DimVector& alpha, Tag a, const DimVector& beta, Tag b) {
    ThetaProduct th = theta(q, alpha, a, beta, b, Monomial());
    for (const auto& [key, k] : th.factors()) {
        if ((key.first * key.second).is_one())
            throw DegenerateKernelError("kernel has a trivial root", "1");
    }
    return th.to_rational().inverse();
}

BraidingFactor braiding_factor(const Quiver& q, const DimVector& alpha, Tag a, const DimVector& beta, Tag b,
                               const Monomial& t) {
    return {theta(q, beta, b, alpha, a, t), theta(q, alpha, a, beta, b, t.inverse())};
}

}  // namespace kvb
