#include "kvb/kclasses.hpp"

#include <cstdlib>

#include "kvb/errors.hpp"

namespace kvb {

void SignedRoots::add(const Monomial& m, int count) {
    if (count == 0) return;
    int& k = roots_[m];
    k += count;
    if (k == 0) roots_.erase(m);
}

size_t SignedRoots::size() const {
    size_t n = 0;
    for (const auto& [m, k] : roots_) n += size_t(std::abs(k));
    return n;
}

SignedRoots SignedRoots::operator+(const SignedRoots& o) const {
    SignedRoots r = *this;
    for (const auto& [m, k] : o.roots_) r.add(m, k);
    return r;
}

SignedRoots SignedRoots::operator-(const SignedRoots& o) const {
    SignedRoots r = *this;
    for (const auto& [m, k] : o.roots_) r.add(m, -k);
    return r;
}

SignedRoots SignedRoots::dual() const {
    return transform([](const Monomial& m) { return m.inverse(); });
}

LaurentPoly SignedRoots::character() const {
    LaurentPoly p;
    for (const auto& [m, k] : roots_) p.add_term(m, Integer(k));
    return p;
}

std::string SignedRoots::to_string(const VarTable& vars) const {
    std::string out = "{";
    bool first = true;
    for (const auto& [m, k] : roots_) {
        out += first ? "" : ", ";
        first = false;
        out += (k > 0 ? "+" : "-");
        if (std::abs(k) != 1) out += std::to_string(std::abs(k)) + "x";
        out += kvb::to_string(LaurentPoly::monomial(m), vars);
    }
    return out + "}";
}

std::optional<Monomial> first_difference(const SignedRoots& a, const SignedRoots& b) {
    SignedRoots d = a - b;
    if (d.empty()) return std::nullopt;
    return d.roots().begin()->first;
}

SignedRoots bilinear_class(const Quiver& q, const DimVector& alpha, Tag a, const DimVector& beta, Tag b) {
    if (alpha.size() != q.num_vertices() || beta.size() != q.num_vertices())
        throw StructuralError("dimension vector does not match the quiver");
    int edge_sign = q.convention() == SignConvention::VertexMinusEdge ? -1 : 1;
    SignedRoots r;
    for (const auto& e : q.edges())
        for (unsigned k = 0; k < alpha[e.src]; ++k)
            for (unsigned l = 0; l < beta[e.dst]; ++l)
                r.add(e.weight * Monomial::var(Var::slot(a, e.src, k), -1) * Monomial::var(Var::slot(b, e.dst, l)),
                      edge_sign);
    for (unsigned i = 0; i < q.num_vertices(); ++i)
        for (unsigned k = 0; k < alpha[i]; ++k)
            for (unsigned l = 0; l < beta[i]; ++l)
                r.add(Monomial::var(Var::slot(a, i, k), -1) * Monomial::var(Var::slot(b, i, l)), -edge_sign);
    return r;
}

LaurentPoly tautological(const DimVector& d, unsigned vertex, Tag tag) {
    LaurentPoly p;
    for (unsigned k = 0; k < d[vertex]; ++k) p += LaurentPoly::var(Var::slot(tag, vertex, k));
    return p;
}

Monomial split_slots(const Monomial& m, Tag src, const std::vector<SlotPart>& parts) {
    Monomial::Storage out;
    bool touched = false;
    for (const auto& [v, e] : m.entries()) {
        if (!v.is_slot() || v.tag() != src) {
            out.emplace_back(v, e);
            continue;
        }
        touched = true;
        unsigned k = v.slot_index(), i = v.vertex();
        bool placed = false;
        for (const auto& p : parts) {
            if (i >= p.dim.size()) throw StructuralError("slot variable on a vertex outside the dimension vector");
            if (k < p.dim[i]) {
                out.emplace_back(Var::slot(p.tag, i, k), e);
                placed = true;
                break;
            }
            k -= p.dim[i];
        }
        if (!placed) throw StructuralError("slot overflow while splitting variables");
    }
    if (!touched) return m;
    return Monomial::from_entries(std::move(out));
}

Monomial merge_slots(const Monomial& m, const std::vector<SlotPart>& parts, Tag dst) {
    Monomial::Storage out;
    for (const auto& [v, e] : m.entries()) {
        if (!v.is_slot()) {
            out.emplace_back(v, e);
            continue;
        }
        unsigned offset = 0;
        bool placed = false;
        for (const auto& p : parts) {
            if (v.tag() == p.tag) {
                if (v.vertex() >= p.dim.size() || v.slot_index() >= p.dim[v.vertex()])
                    throw StructuralError("slot overflow while merging variables");
                out.emplace_back(Var::slot(dst, v.vertex(), offset + v.slot_index()), e);
                placed = true;
                break;
            }
            offset += p.dim[v.vertex()];
        }
        if (!placed) out.emplace_back(v, e);
    }
    return Monomial::from_entries(std::move(out));
}

Monomial scale_tag(const Monomial& m, Tag tag, const Monomial& factor) {
    int d = 0;
    for (const auto& [v, e] : m.entries())
        if (v.is_slot() && v.tag() == tag) d += e;
    return d == 0 ? m : m * factor.pow(d);
}

Monomial scale_slots(const Monomial& m, const Monomial& factor) {
    int d = 0;
    for (const auto& [v, e] : m.entries())
        if (v.is_slot()) d += e;
    return d == 0 ? m : m * factor.pow(d);
}

TagMap identity_tags() {
    TagMap t{};
    for (Tag i = 0; i < kMaxTags; ++i) t[i] = i;
    return t;
}

TagMap swap_tags(Tag a, Tag b) {
    TagMap t = identity_tags();
    std::swap(t[a], t[b]);
    return t;
}

Monomial retag(const Monomial& m, const TagMap& map) {
    Monomial::Storage out;
    for (const auto& [v, e] : m.entries())
        out.emplace_back(v.is_slot() ? v.with_tag(map[v.tag()]) : v, e);
    return Monomial::from_entries(std::move(out));
}

LaurentPoly split_embed(const LaurentPoly& h, Tag src, const DimVector& alpha, const DimVector& beta, Tag a, Tag b) {
    std::vector<SlotPart> parts{{alpha, a}, {beta, b}};
    return h.transform([&](const Monomial& m) { return split_slots(m, src, parts); });
}

LaurentPoly merge_embed(const LaurentPoly& p, const DimVector& alpha, Tag a, const DimVector& beta, Tag b, Tag dst) {
    std::vector<SlotPart> parts{{alpha, a}, {beta, b}};
    return p.transform([&](const Monomial& m) { return merge_slots(m, parts, dst); });
}

LaurentPoly deg_substitute(const LaurentPoly& p, Tag tag, Var formal, int exponent) {
    Monomial f = Monomial::var(formal, exponent);
    return p.transform([&](const Monomial& m) { return scale_tag(m, tag, f); });
}

SignedRoots deg_substitute(const SignedRoots& r, Tag tag, Var formal, int exponent) {
    Monomial f = Monomial::var(formal, exponent);
    return r.transform([&](const Monomial& m) { return scale_tag(m, tag, f); });
}

SymGroupAction symmetry_group(const DimVector& d, Tag tag) {
    std::vector<SlotBlock> blocks;
    for (unsigned i = 0; i < d.size(); ++i) blocks.push_back({tag, i, d[i], 0});
    return SymGroupAction(blocks);
}

bool is_symmetric(const KClass& f) { return is_invariant(f.value, symmetry_group(f.dim, f.tag)); }

std::vector<LaurentPoly> test_classes(const DimVector& d, Tag tag) {
    std::vector<LaurentPoly> out{LaurentPoly(1)};
    for (unsigned i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        LaurentPoly m1, m2, m11, mneg;
        for (unsigned k = 0; k < d[i]; ++k) {
            Var v = Var::slot(tag, i, k);
            m1 += LaurentPoly::var(v);
            m2 += LaurentPoly::var(v, 2);
            mneg += LaurentPoly::var(v, -1);
            for (unsigned l = k + 1; l < d[i]; ++l) m11 += LaurentPoly::monomial(Monomial::var(v) * Monomial::var(Var::slot(tag, i, l)));
        }
        out.push_back(m1);
        out.push_back(m2);
        if (!m11.is_zero()) out.push_back(m11);
        out.push_back(mneg);
    }
    return out;
}

nlohmann::json dims_json(const DimVector& d) { return d.dims(); }

CheckReport check_bilinearity(const Quiver& q, const DimVector& alpha, const DimVector& beta, const DimVector& gamma) {
    CheckReport rep("bilinearity", {{"alpha", dims_json(alpha)}, {"beta", dims_json(beta)}, {"gamma", dims_json(gamma)}});
    const VarTable& vars = q.vars();
    auto compare = [&](const char* what, const SignedRoots& lhs, const SignedRoots& rhs) {
        auto diff = first_difference(lhs, rhs);
        rep.record(diff ? Verdict::Fail : Verdict::Pass,
                   diff ? std::string(what) + ": multiplicity differs at " + to_string(LaurentPoly::monomial(*diff), vars)
                        : "");
    };
    // First argument: E_{alpha+beta, gamma} restricted along the split.
    {
        std::vector<SlotPart> parts{{alpha, kTagA}, {beta, kTagB}};
        SignedRoots whole = bilinear_class(q, alpha + beta, kTagD, gamma, kTagC);
        SignedRoots lhs = whole.transform([&](const Monomial& m) { return split_slots(m, kTagD, parts); });
        compare("first argument", lhs, bilinear_class(q, alpha, kTagA, gamma, kTagC) + bilinear_class(q, beta, kTagB, gamma, kTagC));
    }
    {
        std::vector<SlotPart> parts{{alpha, kTagB}, {beta, kTagC}};
        SignedRoots whole = bilinear_class(q, gamma, kTagA, alpha + beta, kTagD);
        SignedRoots lhs = whole.transform([&](const Monomial& m) { return split_slots(m, kTagD, parts); });
        compare("second argument", lhs, bilinear_class(q, gamma, kTagA, alpha, kTagB) + bilinear_class(q, gamma, kTagA, beta, kTagC));
    }
    // Weights -1 and +1 in the two factors.
    SignedRoots e = bilinear_class(q, alpha, kTagA, beta, kTagB);
    Monomial zi = Monomial::var(kZ, -1), z = Monomial::var(kZ);
    compare("first factor weight", deg_substitute(e, kTagA, kZ, 1), e.transform([&](const Monomial& m) { return m * zi; }));
    compare("second factor weight", deg_substitute(e, kTagB, kZ, 1), e.transform([&](const Monomial& m) { return m * z; }));
    return rep;
}

}  // namespace kvb
