#include "kvb/hall.hpp"

#include "kvb/errors.hpp"

namespace kvb {

namespace {

// Scratch tags for the two factors of a product.
constexpr Tag kLeft = 23;
constexpr Tag kRight = 24;

Integer factorial_product(const DimVector& d) {
    Integer n = 1;
    for (unsigned x : d.dims())
        for (unsigned k = 2; k <= x; ++k) n *= k;
    return n;
}

Monomial slot(Tag t, unsigned i, unsigned k, int e = 1) { return Monomial::var(Var::slot(t, i, k), e); }

}  // namespace

RationalFn hall_kernel(const Quiver& q, const DimVector& alpha, Tag a, const DimVector& beta, Tag b, HallForm form) {
    if (form == HallForm::Full) return kernel_at_one(q, alpha, a, beta, b);
    RationalFn k(1);
    for (const auto& e : q.edges())
        for (unsigned x = 0; x < alpha[e.src]; ++x)
            for (unsigned y = 0; y < beta[e.dst]; ++y)
                k *= RationalFn::binomial((e.weight * slot(a, e.src, x, -1) * slot(b, e.dst, y)).inverse(), 1);
    for (unsigned i = 0; i < q.num_vertices(); ++i)
        for (unsigned x = 0; x < alpha[i]; ++x)
            for (unsigned y = 0; y < beta[i]; ++y) k *= RationalFn::binomial(slot(b, i, y, -1) * slot(a, i, x), -1);
    return k;
}

Monomial twist_monomial(const DimVector& alpha, Tag a, const DimVector& beta, Tag b, TwistOrientation o) {
    int sa = o == TwistOrientation::AB ? -1 : 1;
    Monomial w;
    for (unsigned i = 0; i < alpha.size(); ++i)
        for (unsigned x = 0; x < alpha[i]; ++x)
            for (unsigned y = 0; y < beta[i]; ++y)
                w *= Monomial::var(kHbar, -1) * slot(a, i, x, sa) * slot(b, i, y, -sa);
    return w;
}

LaurentPoly shuffle(const Quiver& q, const LaurentPoly& p, const DimVector& alpha, Tag a, const DimVector& beta,
                    Tag b, Tag out, HallForm form, std::optional<TwistOrientation> twist, ShuffleResult* diagnostics) {
    if (alpha.size() != q.num_vertices() || beta.size() != q.num_vertices())
        throw StructuralError("dimension vector does not match the quiver");
    RationalFn integrand = hall_kernel(q, alpha, a, beta, b, form);
    integrand *= p;
    if (twist) integrand *= LaurentPoly::monomial(twist_monomial(alpha, a, beta, b, *twist));

    std::vector<SlotPart> parts{{alpha, a}, {beta, b}};
    integrand = integrand.transform([&](const Monomial& m) { return merge_slots(m, parts, out); });

    DimVector gamma = alpha + beta;
    SymGroupAction g = symmetry_group(gamma, out);
    std::vector<RationalFn> terms;
    if (form == HallForm::Full) {
        g.for_each([&](const VarSubstitution& s) { terms.push_back(integrand.substitute(s)); });
    } else {
        std::vector<std::vector<unsigned>> split;
        for (unsigned i = 0; i < gamma.size(); ++i)
            if (gamma[i] > 0) split.push_back({alpha[i], beta[i]});
        for (const auto& s : g.coset_representatives(split)) terms.push_back(integrand.substitute(s));
    }
    RationalFn total = RationalFn::sum(terms);
    size_t before = 0;
    for (const auto& t : terms) before = std::max(before, t.factors().size());
    auto poly = total.as_polynomial();
    if (!poly) throw CancellationError("shuffle product left a nonzero remainder: the sum is not a Laurent polynomial");
    if (form == HallForm::Full) {
        auto scaled = poly->divide_exact(factorial_product(alpha) * factorial_product(beta));
        if (!scaled) throw CancellationError("full-form shuffle sum is not divisible by alpha! beta!");
        poly = std::move(scaled);
    }
    if (diagnostics) {
        diagnostics->form = form;
        diagnostics->terms = terms.size();
        diagnostics->divided_factors = before;
    }
    return *poly;
}

namespace {

ShuffleResult product(const Quiver& q, const KClass& f, const KClass& g, HallForm form,
                      std::optional<TwistOrientation> twist, Tag out) {
    TagMap lf = identity_tags(), rg = identity_tags();
    lf[f.tag] = kLeft;
    rg[g.tag] = kRight;
    LaurentPoly p = f.value.transform([&](const Monomial& m) { return retag(m, lf); }) *
                    g.value.transform([&](const Monomial& m) { return retag(m, rg); });
    ShuffleResult r;
    r.value.dim = f.dim + g.dim;
    r.value.tag = out;
    r.value.value = shuffle(q, p, f.dim, kLeft, g.dim, kRight, out, form, twist, &r);
    return r;
}

}  // namespace

ShuffleResult hall_product(const Quiver& q, const KClass& f, const KClass& g, HallForm form, Tag out) {
    return product(q, f, g, form, std::nullopt, out);
}

ShuffleResult twisted_product(const Quiver& q, const KClass& f, const KClass& g, TwistOrientation o, HallForm form,
                              Tag out) {
    if (q.kind() != QuiverKind::Tripled) throw StructuralError("the twisted product needs a tripled quiver");
    return product(q, f, g, form, o, out);
}

const char* to_string(WheelConvention c) { return c == WheelConvention::Kernel ? "kernel" : "literal"; }

WheelConvention wheel_convention_from_string(const std::string& s) {
    if (s == "kernel") return WheelConvention::Kernel;
    if (s == "literal") return WheelConvention::Literal;
    throw StructuralError("unknown wheel convention '" + s + "'");
}

CheckReport wheel_check(const Quiver& q, const KClass& f, WheelConvention c) {
    if (q.kind() != QuiverKind::Tripled) throw StructuralError("the wheel condition needs a tripled quiver");
    CheckReport rep("wheel", {{"alpha", dims_json(f.dim)}, {"convention", to_string(c)}});
    const Monomial hbar = Monomial::var(kHbar);
    const VarTable& vars = q.vars();
    for (size_t ei = 0; ei < q.base_edges().size(); ++ei) {
        const Edge& e = q.base_edges()[ei];
        Monomial a = c == WheelConvention::Literal ? e.weight : hbar / e.weight;
        // Family 1: outer slots at the source, middle slot at the target;
        // family 2: outer slots at the target, middle slot at the source.
        for (int family = 1; family <= 2; ++family) {
            unsigned outer = family == 1 ? e.src : e.dst;
            unsigned middle = family == 1 ? e.dst : e.src;
            Monomial r1 = family == 1 ? hbar / a : a;        // s_{outer,k1} = r1 * t
            Monomial r3 = family == 1 ? a.inverse() : a / hbar;  // s_{outer,k3} = r3 * t
            for (unsigned k1 = 0; k1 < f.dim[outer]; ++k1)
                for (unsigned k3 = 0; k3 < f.dim[outer]; ++k3) {
                    if (k1 == k3) continue;
                    for (unsigned k2 = 0; k2 < f.dim[middle]; ++k2) {
                        if (outer == middle && (k2 == k1 || k2 == k3)) continue;
                        Var t = Var::slot(f.tag, middle, k2);
                        VarSubstitution s;
                        s.set(Var::slot(f.tag, outer, k1), r1 * Monomial::var(t));
                        s.set(Var::slot(f.tag, outer, k3), r3 * Monomial::var(t));
                        LaurentPoly v = f.value.substitute(s);
                        std::string where = "edge " + std::to_string(ei + 1) + " family " + std::to_string(family) +
                                            " slots (" + std::to_string(k1 + 1) + "," + std::to_string(k2 + 1) + "," +
                                            std::to_string(k3 + 1) + ")";
                        rep.record(v.is_zero() ? Verdict::Pass : Verdict::Fail,
                                   where + " leaves " + to_string(v, vars));
                    }
                }
        }
    }
    return rep;
}

}  // namespace kvb
