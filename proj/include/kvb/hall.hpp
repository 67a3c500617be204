#pragma once

#include <optional>

#include "kvb/kclasses.hpp"
#include "kvb/quiver.hpp"
#include "kvb/report.hpp"
#include "kvb/theta.hpp"

namespace kvb {

// Full: (1/alpha!beta!) sum over S(alpha+beta) with kernel 1/Theta_{alpha,beta}(1).
// Coset: sum over shuffles with kernel wedge(T_i^vee)/wedge(sum_i V_{A,i}^vee V_{B,i}),
// T_i = sum_e weight(e) V_{A,src}^vee V_{B,dst}.
enum class HallForm { Coset, Full };

enum class TwistOrientation { AB, BA };

struct ShuffleResult {
    KClass value;
    HallForm form = HallForm::Coset;
    // Number of group or coset elements summed.
    size_t terms = 0;
    // Binomial factors of the common denominator that divided out exactly.
    size_t divided_factors = 0;
};

// The kernel that multiplies the integrand, alpha on tag a, beta on tag b.
RationalFn hall_kernel(const Quiver& q, const DimVector& alpha, Tag a, const DimVector& beta, Tag b, HallForm form);

// det of the off-diagonal block: prod over i, k, l of
// hbar^-1 s(a,i,k)^-1 s(b,i,l) (AB) or hbar^-1 s(a,i,k) s(b,i,l)^-1 (BA).
Monomial twist_monomial(const DimVector& alpha, Tag a, const DimVector& beta, Tag b, TwistOrientation o);

// Shuffle product of an element p of K(alpha) (x) K(beta), written in tags a
// and b, landing in tag out. Other tags in p are carried along untouched.
// Throws CancellationError if the sum is not a Laurent polynomial.
LaurentPoly shuffle(const Quiver& q, const LaurentPoly& p, const DimVector& alpha, Tag a, const DimVector& beta,
                    Tag b, Tag out, HallForm form, std::optional<TwistOrientation> twist = std::nullopt,
                    ShuffleResult* diagnostics = nullptr);

ShuffleResult hall_product(const Quiver& q, const KClass& f, const KClass& g, HallForm form = HallForm::Coset,
                           Tag out = kTagA);

ShuffleResult twisted_product(const Quiver& q, const KClass& f, const KClass& g, TwistOrientation o,
                              HallForm form = HallForm::Coset, Tag out = kTagA);

// Kernel: the substitution families obtained from the literal ones by
// a_e -> hbar/a_e, which are the ones the default kernel preserves.
// Literal: a_e s_{i,k1} = hbar s_{j,k2} = hbar a_e s_{i,k3} and
// s_{j,k1} = a_e s_{i,k2} = hbar s_{j,k3}.
enum class WheelConvention { Kernel, Literal };

const char* to_string(WheelConvention c);
WheelConvention wheel_convention_from_string(const std::string& s);

// Requires a tripled quiver. Vacuous loci pass.
CheckReport wheel_check(const Quiver& q, const KClass& f, WheelConvention c = WheelConvention::Kernel);

}  // namespace kvb
