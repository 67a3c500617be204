#pragma once

#include <map>
#include <string>
#include <utility>

#include "kvb/formal_series.hpp"
#include "kvb/kclasses.hpp"
#include "kvb/quiver.hpp"
#include "kvb/rational_fn.hpp"

namespace kvb {

// prod (1 - t * root)^k over a multiset of (t, root), where t is a monomial
// in z, w (possibly 1) and root is free of z, w.
class ThetaProduct {
public:
    using Key = std::pair<Monomial, Monomial>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            if (auto c = grlex(a.first, b.first); c != 0) return c < 0;
            return grlex(a.second, b.second) < 0;
        }
    };
    using Map = std::map<Key, int, KeyLess>;

    // Adds (1 - formal * root)^k, renormalizing the formal part.
    void add(const Monomial& formal, const Monomial& root, int k);
    const Map& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    ThetaProduct operator*(const ThetaProduct& o) const;
    ThetaProduct inverse() const;
    friend bool operator==(const ThetaProduct& a, const ThetaProduct& b) { return a.factors_ == b.factors_; }

    // Applies a monoid morphism to every t * root.
    template <typename F>
    ThetaProduct transform(F f) const {
        ThetaProduct r;
        for (const auto& [key, k] : factors_) r.add(Monomial(), f(key.first * key.second), k);
        return r;
    }

    RationalFn to_rational() const;
    std::string to_string(const VarTable& vars) const;

private:
    Map factors_;
};

// Theta_{alpha,beta}(t) = wedge_{-t}(E^vee): the factor (1 - t/m)^sign for each
// root m of E_{alpha,beta} (alpha on tag a, beta on tag b).
ThetaProduct theta(const Quiver& q, const DimVector& alpha, Tag a, const DimVector& beta, Tag b, const Monomial& t);

// Product of the expansions of all factors, every factor in the regime where
// its formal monomial goes to infinity. window_low bounds the truncation.
FormalSeries theta_expand(const ThetaProduct& t, int window_low);

// 1 / Theta_{alpha,beta}(1); throws DegenerateKernelError on a trivial root.
RationalFn kernel_at_one(const Quiver& q, const DimVector& alpha, Tag a, const DimVector& beta, Tag b);

// S_{beta,alpha}(t) = Theta_{beta,alpha}(t) / Theta_{alpha,beta}(1/t), written
// with alpha on tag a and beta on tag b.
struct BraidingFactor {
    ThetaProduct numerator;
    ThetaProduct denominator;

    ThetaProduct ratio() const { return numerator * denominator.inverse(); }
    RationalFn rational() const { return ratio().to_rational(); }
    FormalSeries series(int window_low) const { return theta_expand(ratio(), window_low); }
};

BraidingFactor braiding_factor(const Quiver& q, const DimVector& alpha, Tag a, const DimVector& beta, Tag b,
                               const Monomial& t);

}  // namespace kvb
