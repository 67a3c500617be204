#pragma once

#include <map>

#include "kvb/formal_series.hpp"
#include "kvb/kclasses.hpp"
#include "kvb/modular.hpp"
#include "kvb/quiver.hpp"
#include "kvb/rational_fn.hpp"
#include "kvb/theta.hpp"

namespace kvb {

inline constexpr int kDefaultWindow = -8;

// Y_{alpha,beta}(z)h with alpha on tag A and beta on tag B.
struct CoproductValue {
    DimVector alpha;
    DimVector beta;
    FormalSeries series;
};

// Output frame of the braiding: beta on tag A, alpha on tag B.
struct BraidedPair {
    DimVector alpha;
    DimVector beta;
    FormalSeries series;
};

// theta * poly, where every theta factor is expanded in the regime z, w -> oo.
// Operators act on both parts by monoid morphisms, so a chain of operators can
// be assembled symbolically and expanded once at the end.
struct ThetaExpr {
    ThetaProduct theta;
    LaurentPoly poly = LaurentPoly(1);

    template <typename F>
    ThetaExpr transform(F f) const {
        return {theta.transform(f), poly.transform(f)};
    }
    ThetaExpr operator*(const ThetaExpr& o) const { return {theta * o.theta, poly * o.poly}; }

    FormalSeries expand(int window_low) const;
    // Expansion pushed through ev; factors free of z and w are evaluated as
    // scalars instead of being rejected.
    ModSeries expand(int window_low, const Evaluator& ev) const;
    RationalFn rational() const { return theta.to_rational() * RationalFn(poly); }
};

ThetaExpr coproduct_expr(const Quiver& q, const ThetaExpr& x, Tag src, const DimVector& alpha, Tag a,
                         const DimVector& beta, Tag b, const Monomial& t);
ThetaExpr braiding_expr(const Quiver& q, const ThetaExpr& x, const DimVector& alpha, Tag a, const DimVector& beta,
                        Tag b, const Monomial& t);

// The same operators on already expanded series whose coefficients may carry
// further tags.

// Y_{alpha,beta}(t) on the slots of tag src: splits them into a (alpha) and
// b (beta), scales the a slots by t and multiplies by Theta_{alpha,beta}(t).
FormalSeries apply_coproduct(const Quiver& q, const FormalSeries& x, Tag src, const DimVector& alpha, Tag a,
                             const DimVector& beta, Tag b, const Monomial& t, int window_low);
// Braiding on the pair (a: alpha, b: beta): multiplies by S_{beta,alpha}(t) and
// swaps the tags, leaving beta on a and alpha on b.
FormalSeries apply_braiding(const Quiver& q, const FormalSeries& x, const DimVector& alpha, Tag a,
                            const DimVector& beta, Tag b, const Monomial& t, int window_low);

// Rational counterparts.
RationalFn coproduct_rational(const Quiver& q, const RationalFn& x, Tag src, const DimVector& alpha, Tag a,
                              const DimVector& beta, Tag b, const Monomial& t);
RationalFn braiding_rational(const Quiver& q, const RationalFn& x, const DimVector& alpha, Tag a,
                             const DimVector& beta, Tag b, const Monomial& t);

CoproductValue vertex_coproduct(const Quiver& q, const KClass& h, const DimVector& alpha, const DimVector& beta,
                                const Monomial& t = Monomial::var(kZ), int window_low = kDefaultWindow);

// D(t)^exponent: every slot variable scaled by t^exponent.
KClass translation(const KClass& h, Var formal, int exponent = 1);

// u on tag A and v on tag B (v is retagged if needed).
BraidedPair braiding_apply(const Quiver& q, const KClass& u, const KClass& v, const Monomial& t = Monomial::var(kZ),
                           int window_low = kDefaultWindow);

// A graded element as a map from dimension vector to component.
using GradedElement = std::map<DimVector, LaurentPoly>;
LaurentPoly covacuum_apply(const GradedElement& x);

}  // namespace kvb
