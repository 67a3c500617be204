#include "kvb/laurent_poly.hpp"

#include <algorithm>
#include <map>

#include "kvb/errors.hpp"

namespace kvb {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace(Monomial(), Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Integer& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

LaurentPoly LaurentPoly::one_minus(const Monomial& m) {
    LaurentPoly p(1);
    p.add_term(m, Integer(-1));
    return p;
}

std::vector<LaurentPoly::Term> LaurentPoly::sorted_terms() const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return grlex(a.first, b.first) > 0; });
    return out;
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<Integer> LaurentPoly::constant() const {
    if (terms_.empty()) return Integer(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
    return std::nullopt;
}

std::optional<LaurentPoly::Term> LaurentPoly::single_term() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::add_term(Monomial&& m, Integer&& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Integer(-c));
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Monomial& m) {
    if (m.is_one()) return *this;
    Map out;
    out.reserve(terms_.size());
    for (auto& [n, c] : terms_) out.emplace(n * m, std::move(c));
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, d] : terms_) d *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.size() < b.size()) return b * a;
    LaurentPoly r;
    if (b.is_zero()) return r;
    if (b.size() == 1 && b.terms_.begin()->first.is_one()) {
        r = a;
        return r *= b.terms_.begin()->second;
    }
    r.terms_.reserve(a.size() * b.size());
    Integer prod;
    for (const auto& [mb, cb] : b.terms_)
        for (const auto& [ma, ca] : a.terms_) {
            prod = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(ma * mb, prod);
            if (!inserted) it->second += prod;
        }
    absl::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result(1), base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute(const VarSubstitution& s) const {
    if (s.empty()) return *this;
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.add_term(s.apply(m), c);
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const Integer& c) const {
    if (c == 0) throw CancellationError("division by zero");
    LaurentPoly r = *this;
    for (auto& [m, d] : r.terms_) {
        Integer q, rem;
        boost::multiprecision::divide_qr(d, c, q, rem);
        if (rem != 0) return std::nullopt;
        d = std::move(q);
    }
    return r;
}

Monomial LaurentPoly::lower_monomial() const {
    if (terms_.empty()) return {};
    Monomial low = terms_.begin()->first;
    for (const auto& [m, c] : terms_) low = Monomial::gcd_lower(low, m);
    return low;
}

bool LaurentPoly::contains_formal() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.entries())
            if (v.is_formal()) return true;
    return false;
}

namespace {

// p / (1 - m). Terms fall into chains u m^k; on each chain the quotient
// coefficients are the prefix sums, and the division is exact iff every
// chain sums to zero.
std::optional<LaurentPoly> divide_one_minus(const LaurentPoly::Map& terms, const Monomial& m) {
    const auto [v, e] = m.entries().front();
    const int f = std::abs(e);
    absl::flat_hash_map<Monomial, std::vector<std::pair<int, const Integer*>>> chains;
    for (const auto& [u, c] : terms) {
        int x = u.exponent(v);
        int fl = x >= 0 ? x / f : -((-x + f - 1) / f);
        int k = e > 0 ? fl : -fl;
        chains[u * m.pow(-k)].emplace_back(k, &c);
    }
    LaurentPoly q;
    for (auto& [rep, chain] : chains) {
        std::sort(chain.begin(), chain.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Integer run = 0;
        Monomial at = rep * m.pow(chain.front().first);
        size_t i = 0;
        for (int k = chain.front().first; k < chain.back().first; ++k, at *= m) {
            while (i < chain.size() && chain[i].first == k) run += *chain[i++].second;
            if (run != 0) q.add_term(at, run);
        }
        run += *chain.back().second;
        if (run != 0) return std::nullopt;
    }
    return q;
}

}  // namespace

// Shift both sides into the polynomial ring and run leading-term division.
// A single divisor is a Groebner basis of its ideal, so the division is
// exact iff every leading term along the way is divisible.
std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw CancellationError("division by zero polynomial");
    if (is_zero()) return LaurentPoly();
    if (auto t = d.single_term()) {
        auto q = divide_exact(t->second);
        if (!q) return std::nullopt;
        return *q * t->first.inverse();
    }
    if (d.size() == 2) {
        // c m1 - c m2 = c m1 (1 - m2/m1), the shape of every kernel factor.
        auto it = d.terms_.begin();
        const auto& [m1, c1] = *it++;
        const auto& [m2, c2] = *it;
        if (c1 == -c2) {
            auto q = divide_one_minus(terms_, m2 / m1);
            if (!q) return std::nullopt;
            auto r = q->divide_exact(c1);
            if (!r) return std::nullopt;
            return *r * m1.inverse();
        }
    }
    Monomial shift_f = lower_monomial().inverse();
    Monomial shift_d = d.lower_monomial().inverse();

    std::map<Monomial, Integer, GrlexGreater> rem;
    for (const auto& [m, c] : terms_) rem.emplace(m * shift_f, c);
    std::vector<Term> div;
    for (const auto& [m, c] : d.terms_) div.emplace_back(m * shift_d, c);
    std::sort(div.begin(), div.end(), [](const Term& a, const Term& b) { return grlex(a.first, b.first) > 0; });
    const auto& [lead_m, lead_c] = div.front();

    LaurentPoly q;
    Integer qc, r;
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!lead_m.divides(top->first)) return std::nullopt;
        boost::multiprecision::divide_qr(top->second, lead_c, qc, r);
        if (r != 0) return std::nullopt;
        Monomial qm = top->first / lead_m;
        for (size_t i = 1; i < div.size(); ++i) {
            Monomial m = qm * div[i].first;
            Integer c = -(qc * div[i].second);
            auto [it, inserted] = rem.try_emplace(std::move(m), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) rem.erase(it);
            }
        }
        rem.erase(top);
        q.add_term(qm, qc);
    }
    return q * (shift_d / shift_f);
}

std::string to_string(const LaurentPoly& p, const VarTable& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.sorted_terms()) {
        Integer a = abs(c);
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        first = false;
        bool unit = a == 1 && !m.is_one();
        if (!unit) out += a.str();
        for (const auto& [v, e] : m.entries()) {
            if (!unit) out += "*";
            unit = false;
            out += vars.name(v);
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace kvb
