#include "kvb/rational_fn.hpp"

#include "kvb/errors.hpp"

namespace kvb {

namespace {

LaurentPoly expand_factors(const RationalFn::Factors& f, bool positive) {
    LaurentPoly out(1);
    for (const auto& [m, k] : f)
        if ((k > 0) == positive) out *= LaurentPoly::one_minus(m).pow(unsigned(positive ? k : -k));
    return out;
}

}  // namespace

void RationalFn::multiply_binomial(const Monomial& m, int k) {
    if (k == 0) return;
    if (m.is_one()) {
        if (k < 0) throw DegenerateKernelError("factor (1 - 1)^-1", "1");
        coeff_ = LaurentPoly();
        factors_.clear();
        return;
    }
    Monomial root = m;
    if (!m.is_canonical_root()) {
        // (1 - m)^k = (-m)^k (1 - 1/m)^k
        root = m.inverse();
        coeff_ *= m.pow(k);
        if (k % 2 != 0) coeff_ *= Integer(-1);
    }
    int& e = factors_[root];
    e += k;
    if (e == 0) factors_.erase(root);
}

RationalFn RationalFn::binomial(const Monomial& m, int k) {
    RationalFn r(1);
    r.multiply_binomial(m, k);
    return r;
}

LaurentPoly RationalFn::numerator() const { return coeff_ * expand_factors(factors_, true); }

LaurentPoly RationalFn::denominator() const { return expand_factors(factors_, false); }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    coeff_ *= o.coeff_;
    for (const auto& [m, k] : o.factors_) multiply_binomial(m, k);
    if (coeff_.is_zero()) factors_.clear();
    return *this;
}

RationalFn& RationalFn::operator*=(const LaurentPoly& p) {
    coeff_ *= p;
    if (coeff_.is_zero()) factors_.clear();
    return *this;
}

RationalFn RationalFn::inverse() const {
    auto t = coeff_.single_term();
    if (!t || (t->second != 1 && t->second != -1))
        throw StructuralError("inverse of a rational function with a non-unit coefficient");
    RationalFn r(LaurentPoly::monomial(t->first.inverse(), t->second));
    for (const auto& [m, k] : factors_) r.factors_[m] = -k;
    return r;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.coeff_ = -r.coeff_;
    return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) { return RationalFn::sum({a, b}); }

RationalFn RationalFn::sum(const std::vector<RationalFn>& terms) {
    // Common factor exponent: the minimum over terms (0 where absent).
    Factors common;
    bool first = true;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        if (first) {
            common = t.factors_;
            for (auto it = common.begin(); it != common.end();) it = it->second > 0 ? common.erase(it) : std::next(it);
            first = false;
            // Positive factors shared by every term could be kept; the
            // sums in this library do not need that.
            continue;
        }
        for (auto& [m, k] : common) {
            auto it = t.factors_.find(m);
            k = std::min(k, it == t.factors_.end() ? 0 : std::min(it->second, 0));
        }
        for (const auto& [m, k] : t.factors_)
            if (k < 0) {
                auto [it, ins] = common.try_emplace(m, k);
                if (!ins) it->second = std::min(it->second, k);
            }
    }
    for (auto it = common.begin(); it != common.end();) it = it->second == 0 ? common.erase(it) : std::next(it);

    RationalFn r;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        LaurentPoly n = t.coeff_;
        for (const auto& [m, k] : t.factors_) {
            auto it = common.find(m);
            int excess = k - (it == common.end() ? 0 : it->second);
            if (excess > 0) n *= LaurentPoly::one_minus(m).pow(unsigned(excess));
        }
        for (const auto& [m, k] : common)
            if (!t.factors_.count(m)) n *= LaurentPoly::one_minus(m).pow(unsigned(-k));
        r.coeff_ += n;
    }
    if (r.coeff_.is_zero()) return RationalFn();
    r.factors_ = std::move(common);
    r.reduce();
    return r;
}

bool operator==(const RationalFn& a, const RationalFn& b) {
    if (a.factors_ == b.factors_) return a.coeff_ == b.coeff_;
    // Cross-multiply by the factors each side lacks relative to the other.
    LaurentPoly lhs = a.coeff_, rhs = b.coeff_;
    RationalFn::Factors all = a.factors_;
    for (const auto& [m, k] : b.factors_) all.try_emplace(m, 0);
    for (const auto& [m, unused] : all) {
        auto ia = a.factors_.find(m);
        auto ib = b.factors_.find(m);
        int ka = ia == a.factors_.end() ? 0 : ia->second;
        int kb = ib == b.factors_.end() ? 0 : ib->second;
        int t = std::min(ka, kb);
        if (ka > t) lhs *= LaurentPoly::one_minus(m).pow(unsigned(ka - t));
        if (kb > t) rhs *= LaurentPoly::one_minus(m).pow(unsigned(kb - t));
    }
    return lhs == rhs;
}

RationalFn& RationalFn::reduce() {
    if (coeff_.is_zero()) {
        factors_.clear();
        return *this;
    }
    for (auto it = factors_.begin(); it != factors_.end();) {
        LaurentPoly b = LaurentPoly::one_minus(it->first);
        while (it->second < 0) {
            auto q = coeff_.divide_exact(b);
            if (!q) break;
            coeff_ = std::move(*q);
            ++it->second;
        }
        if (it->second > 0) {
            coeff_ *= b.pow(unsigned(it->second));
            it->second = 0;
        }
        it = it->second == 0 ? factors_.erase(it) : std::next(it);
    }
    return *this;
}

std::optional<LaurentPoly> RationalFn::as_polynomial() const {
    RationalFn r = *this;
    r.reduce();
    if (!r.factors_.empty()) return std::nullopt;
    return r.coeff_;
}

RationalFn RationalFn::substitute(const VarSubstitution& s) const {
    RationalFn r(coeff_.substitute(s));
    for (const auto& [m, k] : factors_) r.multiply_binomial(s.apply(m), k);
    if (r.coeff_.is_zero()) r.factors_.clear();
    return r;
}

std::string to_string(const RationalFn& r, const VarTable& vars) {
    RationalFn c = r;
    c.reduce();
    std::string out = "(" + to_string(c.coeff(), vars) + ")";
    for (const auto& [m, k] : c.factors())
        out += " * (" + to_string(LaurentPoly::one_minus(m), vars) + ")^" + std::to_string(k);
    return out;
}

}  // namespace kvb
