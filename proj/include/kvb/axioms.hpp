#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kvb/hall.hpp"
#include "kvb/quiver.hpp"
#include "kvb/report.hpp"
#include "kvb/vertex.hpp"

namespace kvb {

enum class Axiom { Covacuum, SkewSymmetry, WeakCoassoc, YangBaxter, Translation, Colocality, Unitarity };

const char* to_string(Axiom a);
Axiom axiom_from_string(const std::string& s);
// Number of dimension vectors the check takes.
size_t axiom_arity(Axiom a);
const std::vector<Axiom>& all_axioms();

// Exact expands both sides over Z. Modular pushes both expansions through
// the same point evaluation into F_p: a mismatch there is a genuine
// counterexample, agreement holds up to probability deg/p. Auto picks Exact
// when the expansions are small.
enum class SeriesMode { Auto, Exact, Modular };

const char* to_string(SeriesMode m);
SeriesMode series_mode_from_string(const std::string& s);

struct CheckOptions {
    int window_low = kDefaultWindow;
    SeriesMode mode = SeriesMode::Auto;
    // Salt of the evaluation point in modular mode. Fixed, not tied to --seed.
    uint64_t salt = 0x6b7662;
    // Auto uses exact arithmetic up to this many inverted binomials in total.
    unsigned exact_limit = 4;
};

// Checks one axiom on the test classes of the given dimensions:
// covacuum (alpha), skew-symmetry (alpha, beta), weak-coassoc (alpha, beta,
// gamma), yang-baxter (alpha, beta, gamma), translation (alpha, beta),
// colocality (alpha, beta, gamma), unitarity (alpha, beta).
CheckReport check_coalgebra_axiom(Axiom a, const Quiver& q, const std::vector<DimVector>& dims,
                                  const CheckOptions& opts = {});

// Y(f * g) against the sum over four-part splittings of
// (* (x) *) o S^(23) o (Y (x) Y)(f (x) g) in the graded piece (gamma1, gamma2).
CheckReport check_bialgebra_square(const Quiver& q, const KClass& f, const KClass& g, const DimVector& gamma1,
                                   const DimVector& gamma2, const CheckOptions& opts = {});
// All graded pieces and the test classes of alpha and beta.
CheckReport check_bialgebra_square(const Quiver& q, const DimVector& alpha, const DimVector& beta,
                                   const CheckOptions& opts = {});

// (a) E_{g1,g2} - T = E_{b1,a2} - E_{a2,b1} + E_{a1,a2} + E_{b1,b2} with
//     T = E_{a,b} restricted to the splitting minus E_{a1,b1} - E_{a2,b2},
//     and T = E_{a1,b2} + E_{a2,b1};
// (b) every root of T has z-weight +-1 when the a1 and b1 slots carry z;
// (c) Theta_{g1,g2}(z) / wedge(z^deg T^vee) = S_{b1,a2}(z) Theta_{a1,a2}(z) Theta_{b1,b2}(z),
//     both as theta multisets and as rational functions.
CheckReport check_kernel_identity(const Quiver& q, const FourSplit& s);

// (1 - t1 t2) - (1 - t2) - t2 (1 - t1) = 0 and its specializations.
CheckReport knorrer_identity_check();

// Randomized ring axioms for Laurent polynomials and rational functions.
// The seed only drives these tests.
CheckReport ring_axiom_check(uint64_t seed, unsigned trials = 200);

// Coset form against full form, polynomiality and unit laws for f * g.
CheckReport check_shuffle_product(const Quiver& q, const KClass& f, const KClass& g);
// (f * g) * h == f * (g * h), optionally twisted.
CheckReport check_associativity(const Quiver& q, const KClass& f, const KClass& g, const KClass& h,
                                std::optional<TwistOrientation> twist = std::nullopt);

// A symmetric class satisfying the wheel condition: the product over base
// edges e: i -> j and slots (k, l) of (s_{i,k} - c_e s_{j,l}), skipping k = l
// on loops, with c_e = a_e for the kernel families and hbar / a_e for the
// literal ones.
KClass wheel_class(const Quiver& q, const DimVector& d, WheelConvention c = WheelConvention::Kernel);

struct SuiteOptions {
    unsigned max_component = 2;
    unsigned max_total = 5;
    unsigned jobs = 1;
    CheckOptions check;
};

// Edgeless one-vertex, Jordan and A2 quivers in plain, doubled and tripled kinds.
std::vector<Quiver> test_quivers();

CheckReport coalgebra_suite(const Quiver& q, const SuiteOptions& opts = {});
// |alpha|, |beta| <= 2.
CheckReport bialgebra_suite(const Quiver& q, const SuiteOptions& opts = {});
// Product forms, unit laws and associativity for |alpha| + |beta| + |gamma| <= 4.
CheckReport shuffle_suite(const Quiver& q, const SuiteOptions& opts = {});
// Tripled quivers only. Products are checked in the kernel convention.
CheckReport wheel_suite(const Quiver& q, const SuiteOptions& opts = {});
// Every four-part splitting with |gamma1 + gamma2| <= max_total.
CheckReport kernel_identity_suite(const Quiver& q, unsigned max_total = 4);
// Associativity of both twisted products; passes when one orientation does
// and records the passing orientations in params.
CheckReport twist_suite(const Quiver& q, const SuiteOptions& opts = {});

// Runs jobs on up to n threads and returns the reports in input order.
std::vector<CheckReport> run_jobs(const std::vector<std::function<CheckReport()>>& jobs, unsigned n);

}  // namespace kvb
