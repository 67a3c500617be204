#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "kvb/laurent_poly.hpp"
#include "kvb/rational_fn.hpp"

namespace kvb {

// Truncated series in the formal variables z and w with Laurent polynomial
// coefficients (free of z and w). For each variable the series records
//   low:   coefficients at exponents >= low are exact,
//   upper: no term of the untruncated series has exponent > upper.
// A variable with low == kNegInf is not truncated.
class FormalSeries {
public:
    using Key = std::pair<int, int>;  // (z exponent, w exponent)
    static constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

    FormalSeries() = default;
    // Exact series of a Laurent polynomial that may contain z and w.
    static FormalSeries from_poly(const LaurentPoly& p);

    const std::map<Key, LaurentPoly>& coeffs() const { return coeffs_; }
    int low(int var) const { return low_[var]; }
    int upper(int var) const { return upper_[var]; }
    void set_low(int var, int low);
    void set_upper(int var, int upper) { upper_[var] = upper; }
    bool is_exact() const { return low_[0] == kNegInf && low_[1] == kNegInf; }

    LaurentPoly coefficient(int a, int b) const;
    void add_term(int a, int b, const LaurentPoly& c);

    FormalSeries& operator+=(const FormalSeries& o);
    FormalSeries& operator-=(const FormalSeries& o);
    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
    FormalSeries& operator*=(const FormalSeries& o) { return *this = *this * o; }
    FormalSeries& operator*=(const LaurentPoly& p);

    // Coefficientwise substitution; images may contain z and w. The shift
    // of each truncated variable is bounded using the stored terms, which
    // is sound when the truncated tail moves downward under the shift.
    FormalSeries substitute(const VarSubstitution& s) const;
    // Same, for a monoid morphism f applied to every coefficient monomial.
    template <typename F>
    FormalSeries map_monomials(F f) const {
        FormalSeries r;
        std::array<int, 2> dmax{kNegInf, kNegInf};
        for (const auto& [k, c] : coeffs_)
            for (const auto& [m, x] : c.terms()) {
                Monomial img = f(m);
                int da = img.exponent(kZ), db = img.exponent(kW);
                dmax[0] = std::max(dmax[0], da);
                dmax[1] = std::max(dmax[1], db);
                r.coeffs_[{k.first + da, k.second + db}].add_term(img.non_formal_part(), x);
            }
        r.finish_shift(*this, dmax);
        return r;
    }
    // Applies f to every coefficient, keeping the window.
    template <typename F>
    FormalSeries map_coeffs(F f) const {
        FormalSeries r;
        r.low_ = low_;
        r.upper_ = upper_;
        for (const auto& [k, c] : coeffs_) r.add_term(k.first, k.second, f(c));
        return r;
    }

    // Sum of c * z^a * w^b over stored terms, as a Laurent polynomial.
    LaurentPoly to_poly() const;

private:
    void drop_below_window();
    void finish_shift(const FormalSeries& src, std::array<int, 2> dmax);

    std::map<Key, LaurentPoly> coeffs_;
    std::array<int, 2> low_{kNegInf, kNegInf};
    std::array<int, 2> upper_{kNegInf, kNegInf};
};

enum class Verdict { Pass, Fail, Inconclusive };

const char* to_string(Verdict v);

struct SeriesComparison {
    Verdict verdict = Verdict::Inconclusive;
    std::array<int, 2> low{FormalSeries::kNegInf, FormalSeries::kNegInf};
    std::array<int, 2> upper{FormalSeries::kNegInf, FormalSeries::kNegInf};
    size_t compared_terms = 0;
    // First differing key when the verdict is Fail.
    FormalSeries::Key witness{0, 0};
};

// Compares a and b on the intersection of their valid windows. The result
// is Inconclusive when the intersection contains no possible term.
SeriesComparison compare(const FormalSeries& a, const FormalSeries& b);

// Expansion of (1 - t*m)^sign with t = z^e w^f: sign +1 is exact; sign -1
// is expanded around t -> infinity when e, f >= 0 and around t -> 0 when
// e, f <= 0. The first variable with nonzero exponent is truncated at
// window_low; mixed-sign t cannot be expanded and throws WindowError.
FormalSeries expand_factor(const Monomial& t, const Monomial& m, int sign, int window_low);

// Checks that s agrees with r, as in s * denominator(r) == numerator(r) on
// the valid window of the left side. The denominator of r must only
// involve binomials whose series expansion is exact.
SeriesComparison agrees(const FormalSeries& s, const RationalFn& r);

std::string to_string(const FormalSeries& s, const VarTable& vars);

}  // namespace kvb
