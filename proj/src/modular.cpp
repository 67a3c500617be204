#include "kvb/modular.hpp"

#include <algorithm>

#include "kvb/errors.hpp"

namespace kvb {

namespace modp {

uint64_t add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s >= kP ? s - kP : s;
}

uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kP - b; }

uint64_t mul(uint64_t a, uint64_t b) {
    unsigned __int128 x = (unsigned __int128)a * b;
    uint64_t lo = uint64_t(x & kP), hi = uint64_t(x >> 61);
    return add(lo, hi);
}

uint64_t pow(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t inv(uint64_t a) {
    if (a == 0) throw StructuralError("division by zero in F_p");
    return pow(a, kP - 2);
}

uint64_t from_integer(const Integer& x) {
    Integer r = x % Integer(kP);
    if (r < 0) r += kP;
    return r.convert_to<uint64_t>();
}

}  // namespace modp

namespace {

uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

int sat_add(int a, int b) { return (a <= ModSeries::kNegInf || b <= ModSeries::kNegInf) ? ModSeries::kNegInf : a + b; }

}  // namespace

uint64_t Evaluator::value(Var v) const {
    if (v.is_formal()) throw StructuralError("the evaluator does not assign formal variables");
    auto it = cache_.find(v.code());
    if (it != cache_.end()) return it->second;
    uint64_t x = splitmix(splitmix(salt_) ^ v.code()) % modp::kP;
    if (x == 0) x = 1;
    cache_.emplace(v.code(), x);
    return x;
}

uint64_t Evaluator::value(const Monomial& m) const {
    uint64_t r = 1;
    for (const auto& [v, e] : m.entries()) {
        if (v.is_formal()) continue;
        uint64_t x = value(v);
        r = modp::mul(r, modp::pow(e >= 0 ? x : modp::inv(x), uint64_t(std::abs(e))));
    }
    return r;
}

uint64_t Evaluator::value(const LaurentPoly& p) const {
    uint64_t r = 0;
    for (const auto& [m, c] : p.terms()) r = modp::add(r, modp::mul(modp::from_integer(c), value(m)));
    return r;
}

uint64_t Evaluator::value(const RationalFn& f) const {
    uint64_t r = value(f.coeff());
    for (const auto& [m, k] : f.factors()) {
        uint64_t b = modp::sub(1, value(m));
        if (b == 0) throw StructuralError("evaluation point is a pole of the rational function");
        r = modp::mul(r, modp::pow(k >= 0 ? b : modp::inv(b), uint64_t(std::abs(k))));
    }
    return r;
}

ModSeries ModSeries::constant(uint64_t c) {
    ModSeries s;
    if (c) s.coeffs_[{0, 0}] = c;
    s.upper_ = {0, 0};
    return s;
}

ModSeries ModSeries::evaluate(const FormalSeries& s, const Evaluator& ev) {
    ModSeries r;
    for (int v = 0; v < 2; ++v) {
        r.low_[v] = s.low(v);
        r.upper_[v] = s.upper(v);
    }
    for (const auto& [k, c] : s.coeffs())
        if (uint64_t x = ev.value(c)) r.coeffs_[k] = x;
    return r;
}

uint64_t ModSeries::coefficient(int a, int b) const {
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? 0 : it->second;
}

void ModSeries::drop_below_window() {
    std::erase_if(coeffs_, [this](const auto& kv) {
        return kv.first.first < low_[0] || kv.first.second < low_[1] || kv.second == 0;
    });
}

ModSeries& ModSeries::operator+=(const ModSeries& o) {
    for (int v = 0; v < 2; ++v) {
        low_[v] = std::max(low_[v], o.low_[v]);
        upper_[v] = std::max(upper_[v], o.upper_[v]);
    }
    for (const auto& [k, c] : o.coeffs_) coeffs_[k] = modp::add(coeffs_[k], c);
    drop_below_window();
    return *this;
}

ModSeries operator*(const ModSeries& a, const ModSeries& b) {
    ModSeries r;
    for (int v = 0; v < 2; ++v) {
        r.low_[v] = std::max(sat_add(a.low_[v], b.upper_[v]), sat_add(b.low_[v], a.upper_[v]));
        r.upper_[v] = sat_add(a.upper_[v], b.upper_[v]);
    }
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) {
            int x = ka.first + kb.first, y = ka.second + kb.second;
            if (x < r.low_[0] || y < r.low_[1]) continue;
            auto& slot = r.coeffs_[{x, y}];
            slot = modp::add(slot, modp::mul(ca, cb));
        }
    r.drop_below_window();
    return r;
}

ModSeries& ModSeries::scale(uint64_t c) {
    for (auto& [k, x] : coeffs_) x = modp::mul(x, c);
    drop_below_window();
    return *this;
}

SeriesComparison compare(const ModSeries& a, const ModSeries& b) {
    SeriesComparison cmp;
    for (int v = 0; v < 2; ++v) {
        cmp.low[v] = std::max(a.low(v), b.low(v));
        cmp.upper[v] = std::max(a.upper(v), b.upper(v));
        if (cmp.low[v] != ModSeries::kNegInf && cmp.low[v] > cmp.upper[v]) return cmp;
    }
    auto in_window = [&](const ModSeries::Key& k) { return k.first >= cmp.low[0] && k.second >= cmp.low[1]; };
    std::map<ModSeries::Key, bool> keys;
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

}  // namespace kvb
