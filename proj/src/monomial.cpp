#include "kvb/monomial.hpp"

#include <algorithm>

namespace kvb {

Monomial Monomial::var(Var v, int e) {
    Monomial m;
    if (e != 0) m.entries_.emplace_back(v, e);
    return m;
}

Monomial Monomial::from_entries(Storage entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : entries) {
        if (!m.entries_.empty() && m.entries_.back().first == v)
            m.entries_.back().second += e;
        else
            m.entries_.emplace_back(v, e);
        if (m.entries_.back().second == 0) m.entries_.pop_back();
    }
    return m;
}

int Monomial::exponent(Var v) const {
    for (const auto& [u, e] : entries_)
        if (u == v) return e;
    return 0;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin(), ae = entries_.end();
    auto b = o.entries_.begin(), be = o.entries_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            r.entries_.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
            r.entries_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) r.entries_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& [v, e] : r.entries_) e = -e;
    return r;
}

Monomial Monomial::pow(int k) const {
    if (k == 0) return {};
    Monomial r = *this;
    for (auto& [v, e] : r.entries_) e *= k;
    return r;
}

Monomial Monomial::formal_part() const {
    Monomial r;
    for (const auto& en : entries_)
        if (en.first.is_formal()) r.entries_.push_back(en);
    return r;
}

Monomial Monomial::non_formal_part() const {
    Monomial r;
    for (const auto& en : entries_)
        if (!en.first.is_formal()) r.entries_.push_back(en);
    return r;
}

Monomial Monomial::gcd_lower(const Monomial& a, const Monomial& b) {
    Storage out;
    auto x = a.entries_.begin(), xe = a.entries_.end();
    auto y = b.entries_.begin(), ye = b.entries_.end();
    while (x != xe || y != ye) {
        if (y == ye || (x != xe && x->first < y->first)) {
            if (x->second < 0) out.push_back(*x);
            ++x;
        } else if (x == xe || y->first < x->first) {
            if (y->second < 0) out.push_back(*y);
            ++y;
        } else {
            int e = std::min(x->second, y->second);
            if (e != 0) out.emplace_back(x->first, e);
            ++x;
            ++y;
        }
    }
    Monomial m;
    m.entries_ = std::move(out);
    return m;
}

bool Monomial::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& en) { return en.second > 0; });
}

bool Monomial::divides(const Monomial& b) const {
    for (const auto& [v, e] : entries_)
        if (b.exponent(v) < e) return false;
    return true;
}

bool Monomial::is_canonical_root() const {
    int d = degree();
    if (d != 0) return d > 0;
    return !entries_.empty() && entries_.front().second > 0;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    const auto& x = a.entries();
    const auto& y = b.entries();
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) return x[i].second <=> 0;
        if (i == x.size() || y[j].first < x[i].first) return 0 <=> y[j].second;
        if (x[i].second != y[j].second) return x[i].second <=> y[j].second;
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

void VarSubstitution::set(Var v, Monomial image) {
    auto it = std::lower_bound(map_.begin(), map_.end(), v, [](const auto& p, Var u) { return p.first < u; });
    if (it != map_.end() && it->first == v)
        it->second = std::move(image);
    else
        map_.emplace(it, v, std::move(image));
}

const Monomial* VarSubstitution::find(Var v) const {
    auto it = std::lower_bound(map_.begin(), map_.end(), v, [](const auto& p, Var u) { return p.first < u; });
    if (it != map_.end() && it->first == v) return &it->second;
    return nullptr;
}

Monomial VarSubstitution::apply(const Monomial& m) const {
    Monomial::Storage out;
    bool touched = false;
    for (const auto& [v, e] : m.entries()) {
        if (const Monomial* img = find(v)) {
            touched = true;
            for (const auto& [u, f] : img->entries()) out.emplace_back(u, f * e);
        } else {
            out.emplace_back(v, e);
        }
    }
    if (!touched) return m;
    return Monomial::from_entries(std::move(out));
}

VarSubstitution VarSubstitution::after(const VarSubstitution& other) const {
    VarSubstitution r;
    for (const auto& [v, img] : other.map_) r.set(v, apply(img));
    for (const auto& [v, img] : map_)
        if (!other.find(v)) r.set(v, img);
    return r;
}

}  // namespace kvb
