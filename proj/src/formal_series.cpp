#include "kvb/formal_series.hpp"

#include <algorithm>

#include "kvb/errors.hpp"

namespace kvb {

namespace {

constexpr int kNegInf = FormalSeries::kNegInf;

int sat_add(int a, int b) { return (a <= kNegInf || b <= kNegInf) ? kNegInf : a + b; }

std::pair<int, int> formal_exponents(const Monomial& m) { return {m.exponent(kZ), m.exponent(kW)}; }

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

FormalSeries FormalSeries::from_poly(const LaurentPoly& p) {
    FormalSeries s;
    for (const auto& [m, c] : p.terms()) {
        auto [a, b] = formal_exponents(m);
        s.coeffs_[{a, b}].add_term(m.non_formal_part(), c);
    }
    std::erase_if(s.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [k, c] : s.coeffs_) {
        s.upper_[0] = std::max(s.upper_[0], k.first);
        s.upper_[1] = std::max(s.upper_[1], k.second);
    }
    return s;
}

void FormalSeries::set_low(int var, int low) {
    low_[var] = low;
    drop_below_window();
}

void FormalSeries::drop_below_window() {
    std::erase_if(coeffs_, [this](const auto& kv) {
        return kv.first.first < low_[0] || kv.first.second < low_[1] || kv.second.is_zero();
    });
}

LaurentPoly FormalSeries::coefficient(int a, int b) const {
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? LaurentPoly() : it->second;
}

void FormalSeries::add_term(int a, int b, const LaurentPoly& c) {
    if (c.contains_formal()) throw StructuralError("series coefficient contains a formal variable");
    if (a < low_[0] || b < low_[1] || c.is_zero()) return;
    auto& slot = coeffs_[{a, b}];
    slot += c;
    if (slot.is_zero()) coeffs_.erase({a, b});
    upper_[0] = std::max(upper_[0], a);
    upper_[1] = std::max(upper_[1], b);
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
    for (int v = 0; v < 2; ++v) {
        low_[v] = std::max(low_[v], o.low_[v]);
        upper_[v] = std::max(upper_[v], o.upper_[v]);
    }
    for (const auto& [k, c] : o.coeffs_) {
        auto& slot = coeffs_[k];
        slot += c;
    }
    drop_below_window();
    return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
    for (int v = 0; v < 2; ++v) {
        low_[v] = std::max(low_[v], o.low_[v]);
        upper_[v] = std::max(upper_[v], o.upper_[v]);
    }
    for (const auto& [k, c] : o.coeffs_) coeffs_[k] -= c;
    drop_below_window();
    return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries r;
    for (int v = 0; v < 2; ++v) {
        r.low_[v] = std::max(sat_add(a.low_[v], b.upper_[v]), sat_add(b.low_[v], a.upper_[v]));
        r.upper_[v] = sat_add(a.upper_[v], b.upper_[v]);
    }
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) {
            int x = ka.first + kb.first, y = ka.second + kb.second;
            if (x < r.low_[0] || y < r.low_[1]) continue;
            r.coeffs_[{x, y}] += ca * cb;
        }
    std::erase_if(r.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

FormalSeries& FormalSeries::operator*=(const LaurentPoly& p) { return *this = *this * from_poly(p); }

FormalSeries FormalSeries::substitute(const VarSubstitution& s) const {
    return map_monomials([&](const Monomial& m) { return s.apply(m); });
}

void FormalSeries::finish_shift(const FormalSeries& src, std::array<int, 2> dmax) {
    for (int v = 0; v < 2; ++v) {
        if (dmax[v] == kNegInf) dmax[v] = 0;
        low_[v] = sat_add(src.low_[v], dmax[v]);
        upper_[v] = sat_add(src.upper_[v], dmax[v]);
    }
    drop_below_window();
}

LaurentPoly FormalSeries::to_poly() const {
    LaurentPoly out;
    for (const auto& [k, c] : coeffs_) {
        Monomial t = Monomial::var(kZ, k.first) * Monomial::var(kW, k.second);
        out += c * t;
    }
    return out;
}

SeriesComparison compare(const FormalSeries& a, const FormalSeries& b) {
    SeriesComparison cmp;
    for (int v = 0; v < 2; ++v) {
        cmp.low[v] = std::max(a.low(v), b.low(v));
        cmp.upper[v] = std::max(a.upper(v), b.upper(v));
        if (cmp.low[v] != kNegInf && cmp.low[v] > cmp.upper[v]) {
            cmp.verdict = Verdict::Inconclusive;
            return cmp;
        }
    }
    auto in_window = [&](const FormalSeries::Key& k) { return k.first >= cmp.low[0] && k.second >= cmp.low[1]; };
    std::map<FormalSeries::Key, bool> keys;
    for (const auto& [k, c] : a.coeffs())
        if (in_window(k)) keys[k] = true;
    for (const auto& [k, c] : b.coeffs())
        if (in_window(k)) keys[k] = true;
    for (const auto& [k, unused] : keys) {
        ++cmp.compared_terms;
        if (a.coefficient(k.first, k.second) != b.coefficient(k.first, k.second)) {
            cmp.verdict = Verdict::Fail;
            cmp.witness = k;
            return cmp;
        }
    }
    cmp.verdict = Verdict::Pass;
    return cmp;
}

FormalSeries expand_factor(const Monomial& t, const Monomial& m, int sign, int window_low) {
    for (const auto& [v, e] : m.entries())
        if (v.is_formal()) throw StructuralError("root of an expanded factor contains a formal variable");
    if (sign == 0) return FormalSeries::from_poly(LaurentPoly(1));
    if (sign > 0) return FormalSeries::from_poly(LaurentPoly::one_minus(t * m).pow(unsigned(sign)));
    if (sign < -1) {
        FormalSeries one = expand_factor(t, m, -1, window_low), r = one;
        for (int i = 1; i < -sign; ++i) r *= one;
        return r;
    }
    int e = t.exponent(kZ), f = t.exponent(kW);
    if (e == 0 && f == 0) throw WindowError("cannot expand a factor without a formal variable");
    if ((e > 0 && f < 0) || (e < 0 && f > 0)) throw WindowError("cannot expand a factor in a mixed-sign formal monomial");
    int v0 = e != 0 ? 0 : 1;
    int e0 = v0 == 0 ? e : f;
    FormalSeries s;
    if (e0 > 0) {
        // (1 - t m)^-1 = -sum_{k>=1} t^-k m^-k
        int n = window_low < 0 ? -window_low / e0 : 0;
        Monomial ti = t.inverse(), mi = m.inverse(), tk, mk;
        for (int k = 1; k <= n; ++k) {
            tk *= ti;
            mk *= mi;
            s.add_term(tk.exponent(kZ), tk.exponent(kW), LaurentPoly::monomial(mk, -1));
        }
        s.set_upper(0, -e);
        s.set_upper(1, -f);
        s.set_low(v0, -(n + 1) * e0 + 1);
    } else {
        // (1 - t m)^-1 = sum_{k>=0} t^k m^k
        int n = window_low < 0 ? window_low / e0 : 0;
        Monomial tk, mk;
        for (int k = 0; k <= n; ++k) {
            s.add_term(tk.exponent(kZ), tk.exponent(kW), LaurentPoly::monomial(mk));
            tk *= t;
            mk *= m;
        }
        s.set_upper(0, 0);
        s.set_upper(1, 0);
        s.set_low(v0, (n + 1) * e0 + 1);
    }
    return s;
}

SeriesComparison agrees(const FormalSeries& s, const RationalFn& r) {
    FormalSeries lhs = s;
    LaurentPoly rhs = r.coeff();
    for (const auto& [m, k] : r.factors()) {
        LaurentPoly b = LaurentPoly::one_minus(m).pow(unsigned(std::abs(k)));
        if (k < 0)
            lhs *= b;
        else
            rhs *= b;
    }
    return compare(lhs, FormalSeries::from_poly(rhs));
}

std::string to_string(const FormalSeries& s, const VarTable& vars) {
    std::string out;
    for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(it->second, vars) + ")";
        if (it->first.first != 0) out += "*z^" + std::to_string(it->first.first);
        if (it->first.second != 0) out += "*w^" + std::to_string(it->first.second);
    }
    if (out.empty()) out = "0";
    auto bound = [](int x) { return x == FormalSeries::kNegInf ? std::string("-inf") : std::to_string(x); };
    out += "  [z >= " + bound(s.low(0)) + ", w >= " + bound(s.low(1)) + "]";
    return out;
}

}  // namespace kvb
