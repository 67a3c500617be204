#include "kvb/vertex.hpp"

#include "kvb/errors.hpp"

namespace kvb {

namespace {

Monomial retag_one(const Monomial& m, Tag from, Tag to) {
    TagMap map = identity_tags();
    map[from] = to;
    return retag(m, map);
}

ThetaProduct formal_factors(const ThetaProduct& t, ThetaProduct* scalars) {
    ThetaProduct out;
    for (const auto& [key, k] : t.factors()) {
        if (key.first.is_one() && scalars)
            scalars->add(key.first, key.second, k);
        else
            out.add(key.first, key.second, k);
    }
    return out;
}

}  // namespace

FormalSeries ThetaExpr::expand(int window_low) const {
    return theta_expand(theta, window_low) * FormalSeries::from_poly(poly);
}

ModSeries ThetaExpr::expand(int window_low, const Evaluator& ev) const {
    ThetaProduct scalars;
    ThetaProduct formal = formal_factors(theta, &scalars);
    ModSeries s = ModSeries::constant(ev.value(scalars.to_rational()));
    for (const auto& [key, k] : formal.factors()) {
        if (k > 0) {
            LaurentPoly f = LaurentPoly::one_minus(key.first * key.second).pow(unsigned(k));
            s *= ModSeries::evaluate(FormalSeries::from_poly(f), ev);
        } else {
            s *= ModSeries::evaluate(expand_factor(key.first, key.second, k, window_low), ev);
        }
    }
    return s * ModSeries::evaluate(FormalSeries::from_poly(poly), ev);
}

ThetaExpr coproduct_expr(const Quiver& q, const ThetaExpr& x, Tag src, const DimVector& alpha, Tag a,
                         const DimVector& beta, Tag b, const Monomial& t) {
    std::vector<SlotPart> parts{{alpha, a}, {beta, b}};
    ThetaExpr y = x.transform([&](const Monomial& m) { return scale_tag(split_slots(m, src, parts), a, t); });
    y.theta = y.theta * theta(q, alpha, a, beta, b, t);
    return y;
}

ThetaExpr braiding_expr(const Quiver& q, const ThetaExpr& x, const DimVector& alpha, Tag a, const DimVector& beta,
                        Tag b, const Monomial& t) {
    ThetaExpr y = x;
    y.theta = y.theta * braiding_factor(q, alpha, a, beta, b, t).ratio();
    TagMap swap = swap_tags(a, b);
    return y.transform([&](const Monomial& m) { return retag(m, swap); });
}

FormalSeries apply_coproduct(const Quiver& q, const FormalSeries& x, Tag src, const DimVector& alpha, Tag a,
                             const DimVector& beta, Tag b, const Monomial& t, int window_low) {
    std::vector<SlotPart> parts{{alpha, a}, {beta, b}};
    FormalSeries split = x.map_monomials([&](const Monomial& m) { return scale_tag(split_slots(m, src, parts), a, t); });
    return theta_expand(theta(q, alpha, a, beta, b, t), window_low) * split;
}

FormalSeries apply_braiding(const Quiver& q, const FormalSeries& x, const DimVector& alpha, Tag a,
                            const DimVector& beta, Tag b, const Monomial& t, int window_low) {
    FormalSeries y = braiding_factor(q, alpha, a, beta, b, t).series(window_low) * x;
    TagMap swap = swap_tags(a, b);
    return y.map_monomials([&](const Monomial& m) { return retag(m, swap); });
}

RationalFn coproduct_rational(const Quiver& q, const RationalFn& x, Tag src, const DimVector& alpha, Tag a,
                              const DimVector& beta, Tag b, const Monomial& t) {
    std::vector<SlotPart> parts{{alpha, a}, {beta, b}};
    RationalFn split = x.transform([&](const Monomial& m) { return scale_tag(split_slots(m, src, parts), a, t); });
    return theta(q, alpha, a, beta, b, t).to_rational() * split;
}

RationalFn braiding_rational(const Quiver& q, const RationalFn& x, const DimVector& alpha, Tag a,
                             const DimVector& beta, Tag b, const Monomial& t) {
    RationalFn y = braiding_factor(q, alpha, a, beta, b, t).rational() * x;
    TagMap swap = swap_tags(a, b);
    return y.transform([&](const Monomial& m) { return retag(m, swap); });
}

CoproductValue vertex_coproduct(const Quiver& q, const KClass& h, const DimVector& alpha, const DimVector& beta,
                                const Monomial& t, int window_low) {
    if (h.dim != alpha + beta) throw StructuralError("coproduct dimensions do not add up to the class dimension");
    // Work from a scratch tag so that h may live on A or B.
    constexpr Tag scratch = 20;
    ThetaExpr x{{}, h.value.transform([&](const Monomial& m) { return retag_one(m, h.tag, scratch); })};
    return {alpha, beta, coproduct_expr(q, x, scratch, alpha, kTagA, beta, kTagB, t).expand(window_low)};
}

KClass translation(const KClass& h, Var formal, int exponent) {
    Monomial f = Monomial::var(formal, exponent);
    return {h.dim, h.tag, h.value.transform([&](const Monomial& m) { return scale_slots(m, f); })};
}

BraidedPair braiding_apply(const Quiver& q, const KClass& u, const KClass& v, const Monomial& t, int window_low) {
    LaurentPoly a = u.value.transform([&](const Monomial& m) { return retag_one(m, u.tag, kTagA); });
    LaurentPoly b = v.value.transform([&](const Monomial& m) { return retag_one(m, v.tag, kTagB); });
    ThetaExpr x{{}, a * b};
    return {u.dim, v.dim, braiding_expr(q, x, u.dim, kTagA, v.dim, kTagB, t).expand(window_low)};
}

LaurentPoly covacuum_apply(const GradedElement& x) {
    for (const auto& [d, p] : x)
        if (d.total() == 0) return p;
    return LaurentPoly();
}

}  // namespace kvb
