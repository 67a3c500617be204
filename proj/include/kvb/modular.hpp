#pragma once

#include <array>
#include <cstdint>
#include <map>

#include <absl/container/flat_hash_map.h>

#include "kvb/formal_series.hpp"
#include "kvb/rational_fn.hpp"

namespace kvb {

// Arithmetic in F_p, p = 2^61 - 1.
namespace modp {
inline constexpr uint64_t kP = (uint64_t(1) << 61) - 1;
uint64_t add(uint64_t a, uint64_t b);
uint64_t sub(uint64_t a, uint64_t b);
uint64_t mul(uint64_t a, uint64_t b);
uint64_t pow(uint64_t a, uint64_t e);
uint64_t inv(uint64_t a);
uint64_t from_integer(const Integer& x);
}  // namespace modp

// A ring homomorphism Z[vars^+-] -> F_p fixing z and w: every other variable
// goes to a nonzero pseudo-random residue determined by (variable, salt).
class Evaluator {
public:
    explicit Evaluator(uint64_t salt = 0) : salt_(salt) {}
    uint64_t value(Var v) const;
    // Value of the part of m free of z and w.
    uint64_t value(const Monomial& m) const;
    uint64_t value(const LaurentPoly& p) const;
    // Throws StructuralError if the point is a pole.
    uint64_t value(const RationalFn& r) const;

private:
    uint64_t salt_;
    // Not synchronized: use one evaluator per thread.
    mutable absl::flat_hash_map<uint32_t, uint64_t> cache_;
};

// Image of a FormalSeries under an Evaluator, with the same window rules.
class ModSeries {
public:
    using Key = FormalSeries::Key;
    static constexpr int kNegInf = FormalSeries::kNegInf;

    ModSeries() = default;
    static ModSeries constant(uint64_t c);
    static ModSeries evaluate(const FormalSeries& s, const Evaluator& ev);

    const std::map<Key, uint64_t>& coeffs() const { return coeffs_; }
    int low(int var) const { return low_[var]; }
    int upper(int var) const { return upper_[var]; }
    uint64_t coefficient(int a, int b) const;

    ModSeries& operator+=(const ModSeries& o);
    friend ModSeries operator*(const ModSeries& a, const ModSeries& b);
    ModSeries& operator*=(const ModSeries& o) { return *this = *this * o; }
    ModSeries& scale(uint64_t c);

private:
    void drop_below_window();

    std::map<Key, uint64_t> coeffs_;
    std::array<int, 2> low_{kNegInf, kNegInf};
    std::array<int, 2> upper_{kNegInf, kNegInf};
};

SeriesComparison compare(const ModSeries& a, const ModSeries& b);

}  // namespace kvb
