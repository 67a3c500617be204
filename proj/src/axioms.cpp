#include "kvb/axioms.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "kvb/errors.hpp"

namespace kvb {

namespace {

// Scratch tags. The vertex module reserves 20, the Hall module 23 and 24.
constexpr Tag kSrc = kTagD;
constexpr Tag kTagE = 4;
constexpr Tag kTagF = 5;
constexpr Tag kTagP = 4, kTagQ = 5, kTagR = 6, kTagS = 7;
constexpr Tag kTagA1 = 4, kTagA2 = 5, kTagB1 = 6, kTagB2 = 7, kTagG1 = 8, kTagG2 = 9;
constexpr Tag kTagF0 = 10, kTagG0 = 11;

const Monomial kMz = Monomial::var(kZ);
const Monomial kMw = Monomial::var(kW);

Monomial retag_one(const Monomial& m, Tag from, Tag to) {
    if (from == to) return m;
    TagMap map = identity_tags();
    map[from] = to;
    return retag(m, map);
}

LaurentPoly on_tag(const LaurentPoly& p, Tag from, Tag to) {
    return p.transform([&](const Monomial& m) { return retag_one(m, from, to); });
}

ThetaExpr expr(const LaurentPoly& p) { return {ThetaProduct(), p}; }

ThetaExpr retag_expr(const ThetaExpr& x, const TagMap& map) {
    return x.transform([&](const Monomial& m) { return retag(m, map); });
}

ThetaExpr scale_expr(const ThetaExpr& x, Tag tag, const Monomial& f) {
    return x.transform([&](const Monomial& m) { return scale_tag(m, tag, f); });
}

// Inverted binomials that carry a formal variable.
size_t series_weight(const ThetaExpr& x) {
    size_t n = 0;
    for (const auto& [key, k] : x.theta.factors())
        if (k < 0 && !key.first.is_one()) n += size_t(-k);
    return n;
}

std::string key_string(const FormalSeries::Key& k) {
    return "z^" + std::to_string(k.first) + " w^" + std::to_string(k.second);
}

std::string window_string(const SeriesComparison& c) {
    auto bound = [](int x) { return x == FormalSeries::kNegInf ? std::string("-inf") : std::to_string(x); };
    return "window z>=" + bound(c.low[0]) + ", w>=" + bound(c.low[1]);
}

// Per-check bookkeeping: verdicts plus the comparison methods used.
struct Tally {
    CheckReport& rep;
    const VarTable& vars;
    std::map<std::string, size_t> methods;

    void note(const std::string& method) { ++methods[method]; }
    void finish() {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [m, n] : methods) j[m] = n;
        rep.params["methods"] = j;
    }
};

bool use_exact(const CheckOptions& o, size_t weight) {
    switch (o.mode) {
        case SeriesMode::Exact: return true;
        case SeriesMode::Modular: return false;
        case SeriesMode::Auto: return weight <= o.exact_limit;
    }
    return false;
}

// Series comparison of two expressions on the common valid window.
void compare_series(Tally& t, const std::string& what, const ThetaExpr& lhs, const ThetaExpr& rhs,
                    const CheckOptions& o) {
    try {
        if (use_exact(o, series_weight(lhs) + series_weight(rhs))) {
            t.note("exact");
            FormalSeries l = lhs.expand(o.window_low), r = rhs.expand(o.window_low);
            SeriesComparison c = compare(l, r);
            std::string w;
            if (c.verdict == Verdict::Fail) {
                LaurentPoly d = l.coefficient(c.witness.first, c.witness.second) -
                                r.coefficient(c.witness.first, c.witness.second);
                w = what + ": coefficient of " + key_string(c.witness) + " differs by " + to_string(d, t.vars);
            } else if (c.verdict == Verdict::Inconclusive) {
                w = what + ": empty " + window_string(c);
            }
            t.rep.record(c.verdict, w);
        } else {
            t.note("modular");
            Evaluator ev(o.salt);
            SeriesComparison c = compare(lhs.expand(o.window_low, ev), rhs.expand(o.window_low, ev));
            std::string w;
            if (c.verdict == Verdict::Fail)
                w = what + ": coefficient of " + key_string(c.witness) + " differs at the evaluation point";
            else if (c.verdict == Verdict::Inconclusive)
                w = what + ": empty " + window_string(c);
            t.rep.record(c.verdict, w);
        }
    } catch (const WindowError& e) {
        t.rep.record(Verdict::Inconclusive, what + ": " + e.what());
    }
}

void compare_rational(Tally& t, const std::string& what, const ThetaExpr& lhs, const ThetaExpr& rhs) {
    t.note("rational");
    if (lhs.theta == rhs.theta && lhs.poly == rhs.poly) {
        t.rep.record(Verdict::Pass);
        return;
    }
    RationalFn l = lhs.rational(), r = rhs.rational();
    if (l == r)
        t.rep.record(Verdict::Pass);
    else
        t.rep.record(Verdict::Fail, what + ": " + to_string(l, t.vars) + " != " + to_string(r, t.vars));
}

const LaurentPoly& first_nonconstant(const std::vector<LaurentPoly>& cs) { return cs.size() > 1 ? cs[1] : cs[0]; }

// (x, 1) for every x, (1, y) for every y, and one pair of nonconstant classes.
std::vector<std::pair<LaurentPoly, LaurentPoly>> pair_family(const std::vector<LaurentPoly>& xs,
                                                             const std::vector<LaurentPoly>& ys) {
    std::vector<std::pair<LaurentPoly, LaurentPoly>> out;
    for (const auto& x : xs) out.emplace_back(x, LaurentPoly(1));
    for (size_t i = 1; i < ys.size(); ++i) out.emplace_back(LaurentPoly(1), ys[i]);
    if (xs.size() > 1 && ys.size() > 1) out.emplace_back(xs[1], ys[1]);
    return out;
}

std::string class_string(const LaurentPoly& p, const VarTable& vars) { return to_string(p, vars); }

void check_covacuum(Tally& t, const Quiver& q, const DimVector& alpha, const CheckOptions& o) {
    const DimVector zero = DimVector::zero(alpha.size());
    for (const auto& h : test_classes(alpha, kSrc)) {
        const std::string hs = " on h = " + class_string(h, t.vars);
        ThetaExpr x = expr(h);
        compare_series(t, "(vac x id)Y(z) = id" + hs, coproduct_expr(q, x, kSrc, zero, kTagA, alpha, kTagB, kMz),
                       expr(on_tag(h, kSrc, kTagB)), o);

        ThetaExpr y = coproduct_expr(q, x, kSrc, alpha, kTagA, zero, kTagB, kMz);
        t.rep.record(series_weight(y) == 0 ? Verdict::Pass : Verdict::Fail,
                     "(id x vac)Y(z) is not a Laurent polynomial in z" + hs);
        LaurentPoly dz = on_tag(h, kSrc, kTagA).transform([](const Monomial& m) { return scale_slots(m, kMz); });
        compare_series(t, "(id x vac)Y(z) = D(z)" + hs, y, expr(dz), o);
        compare_rational(t, "(id x vac)Y(1) = id" + hs,
                         coproduct_expr(q, x, kSrc, alpha, kTagA, zero, kTagB, Monomial()),
                         expr(on_tag(h, kSrc, kTagA)));
    }
    for (const auto& v : test_classes(alpha, kTagB)) {
        const std::string vs = " on " + class_string(v, t.vars);
        compare_series(t, "(vac x id)S(z) = id x vac" + vs, braiding_expr(q, expr(v), zero, kTagA, alpha, kTagB, kMz),
                       expr(on_tag(v, kTagB, kTagA)), o);
        LaurentPoly u = on_tag(v, kTagB, kTagA);
        compare_series(t, "(id x vac)S(z) = vac x id" + vs, braiding_expr(q, expr(u), alpha, kTagA, zero, kTagB, kMz),
                       expr(v), o);
    }
}

void check_skew(Tally& t, const Quiver& q, const DimVector& alpha, const DimVector& beta, const CheckOptions& o) {
    const Monomial zi = kMz.inverse();
    for (const auto& h : test_classes(alpha + beta, kSrc)) {
        const std::string hs = " on h = " + class_string(h, t.vars);
        ThetaExpr x = expr(h);
        ThetaExpr lhs = braiding_expr(q, coproduct_expr(q, x, kSrc, alpha, kTagA, beta, kTagB, kMz), alpha, kTagA,
                                      beta, kTagB, zi);
        ThetaExpr dz = x.transform([](const Monomial& m) { return scale_slots(m, kMz); });
        ThetaExpr rhs = coproduct_expr(q, dz, kSrc, beta, kTagA, alpha, kTagB, zi);
        compare_rational(t, "S(1/z)Y(z) = Y(1/z)D(z)" + hs, lhs, rhs);
        // Both sides expanded in the common regime z -> oo.
        compare_series(t, "S(1/z)Y(z) = Y(1/z)D(z) as series" + hs, lhs, rhs, o);
    }
}

void check_weak_coassoc(Tally& t, const Quiver& q, const DimVector& alpha, const DimVector& beta,
                        const DimVector& gamma, const CheckOptions& o) {
    const Monomial zw = kMz * kMw;
    for (const auto& h : test_classes(alpha + beta + gamma, kSrc)) {
        ThetaExpr x = expr(h);
        ThetaExpr lhs = coproduct_expr(q, coproduct_expr(q, x, kSrc, alpha + beta, kTagE, gamma, kTagC, kMw), kTagE,
                                       alpha, kTagA, beta, kTagB, kMz);
        ThetaExpr rhs = coproduct_expr(q, coproduct_expr(q, x, kSrc, alpha, kTagA, beta + gamma, kTagF, zw), kTagF,
                                       beta, kTagB, gamma, kTagC, kMw);
        compare_series(t, "(Y(z) x id)Y(w) = (id x Y(w))Y(zw) on h = " + class_string(h, t.vars), lhs, rhs, o);
    }
}

void check_yang_baxter(Tally& t, const Quiver& q, const DimVector& alpha, const DimVector& beta,
                       const DimVector& gamma, const CheckOptions& o) {
    const Monomial zw = kMz * kMw;

    // Braid relation on u (x) v (x) x.
    auto us = test_classes(alpha, kTagA), vs = test_classes(beta, kTagB), xs = test_classes(gamma, kTagC);
    std::vector<LaurentPoly> inputs{LaurentPoly(1), first_nonconstant(us) * first_nonconstant(vs) * first_nonconstant(xs)};
    if (inputs[1] == inputs[0]) inputs.pop_back();
    for (const auto& in : inputs) {
        ThetaExpr x = expr(in);
        ThetaExpr lhs = braiding_expr(q, x, alpha, kTagA, beta, kTagB, kMw);
        lhs = braiding_expr(q, lhs, alpha, kTagB, gamma, kTagC, zw);
        lhs = braiding_expr(q, lhs, beta, kTagA, gamma, kTagB, kMz);
        ThetaExpr rhs = braiding_expr(q, x, beta, kTagB, gamma, kTagC, kMz);
        rhs = braiding_expr(q, rhs, alpha, kTagA, gamma, kTagB, zw);
        rhs = braiding_expr(q, rhs, alpha, kTagB, beta, kTagC, kMw);
        compare_series(t, "braid relation on " + class_string(in, t.vars), lhs, rhs, o);
    }

    // (Y(z) x id)S(w) = (id x S(w))(S(zw) x id)(id x Y(z)) on u (x) h, u of
    // dimension gamma on A and h of dimension alpha + beta on B.
    auto gs = test_classes(gamma, kTagA);
    std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs;
    for (const auto& h : test_classes(alpha + beta, kTagB)) pairs.emplace_back(LaurentPoly(1), h);
    if (gs.size() > 1) pairs.emplace_back(gs[1], first_nonconstant(test_classes(alpha + beta, kTagB)));
    TagMap to_dc = identity_tags();
    to_dc[kTagA] = kSrc;
    to_dc[kTagB] = kTagC;
    TagMap b_to_d = identity_tags();
    b_to_d[kTagB] = kSrc;
    for (const auto& [u, h] : pairs) {
        ThetaExpr x = expr(u * h);
        ThetaExpr lhs = retag_expr(braiding_expr(q, x, gamma, kTagA, alpha + beta, kTagB, kMw), to_dc);
        lhs = coproduct_expr(q, lhs, kSrc, alpha, kTagA, beta, kTagB, kMz);
        ThetaExpr rhs = coproduct_expr(q, retag_expr(x, b_to_d), kSrc, alpha, kTagB, beta, kTagC, kMz);
        rhs = braiding_expr(q, rhs, gamma, kTagA, alpha, kTagB, zw);
        rhs = braiding_expr(q, rhs, gamma, kTagB, beta, kTagC, kMw);
        compare_series(t, "(Y(z) x id)S(w) relation on " + class_string(u * h, t.vars), lhs, rhs, o);
    }
}

void check_translation(Tally& t, const Quiver& q, const DimVector& alpha, const DimVector& beta,
                       const CheckOptions& o) {
    const Monomial zw = kMz * kMw;
    for (const auto& h : test_classes(alpha + beta, kSrc)) {
        const std::string hs = " on h = " + class_string(h, t.vars);
        ThetaExpr x = expr(h);
        ThetaExpr dw = x.transform([](const Monomial& m) { return scale_slots(m, kMw); });
        compare_series(t, "Y(z)D(w) = (id x D(w))Y(zw)" + hs,
                       coproduct_expr(q, dw, kSrc, alpha, kTagA, beta, kTagB, kMz),
                       scale_expr(coproduct_expr(q, x, kSrc, alpha, kTagA, beta, kTagB, zw), kTagB, kMw), o);
        compare_series(t, "(D(z) x id)Y(w) = Y(zw)" + hs,
                       scale_expr(coproduct_expr(q, x, kSrc, alpha, kTagA, beta, kTagB, kMw), kTagA, kMz),
                       coproduct_expr(q, x, kSrc, alpha, kTagA, beta, kTagB, zw), o);
    }
}

void check_colocality(Tally& t, const Quiver& q, const DimVector& alpha, const DimVector& beta,
                      const DimVector& gamma) {
    // S(w/z) mixes the two regimes, so this identity is compared rationally.
    const Monomial wz = kMw / kMz;
    for (const auto& h : test_classes(alpha + beta + gamma, kSrc)) {
        ThetaExpr x = expr(h);
        ThetaExpr lhs = coproduct_expr(q, x, kSrc, beta, kTagA, alpha + gamma, kTagF, kMz);
        lhs = coproduct_expr(q, lhs, kTagF, alpha, kTagB, gamma, kTagC, kMw);
        lhs = braiding_expr(q, lhs, beta, kTagA, alpha, kTagB, wz);
        ThetaExpr rhs = coproduct_expr(q, x, kSrc, alpha, kTagA, beta + gamma, kTagF, kMw);
        rhs = coproduct_expr(q, rhs, kTagF, beta, kTagB, gamma, kTagC, kMz);
        compare_rational(t, "(S(w/z) x id)(id x Y(w))Y(z) = (id x Y(z))Y(w) on h = " + class_string(h, t.vars), lhs,
                         rhs);
    }
}

void check_unitarity(Tally& t, const Quiver& q, const DimVector& alpha, const DimVector& beta) {
    for (const auto& [u, v] : pair_family(test_classes(alpha, kTagA), test_classes(beta, kTagB))) {
        ThetaExpr x = expr(u * v);
        ThetaExpr lhs = braiding_expr(q, braiding_expr(q, x, alpha, kTagA, beta, kTagB, kMz), beta, kTagA, alpha,
                                      kTagB, kMz.inverse());
        compare_rational(t, "S(1/z)S(z) = id on " + class_string(u * v, t.vars), lhs, x);
    }
}

nlohmann::json dims_list(const std::vector<DimVector>& dims) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& d : dims) j.push_back(dims_json(d));
    return j;
}

Integer factorial(const DimVector& d) {
    Integer r = 1;
    for (unsigned x : d.dims())
        for (unsigned k = 2; k <= x; ++k) r *= k;
    return r;
}

// The integrand of the right path for one splitting, before the two
// products: (P: alpha1, Q: beta1, R: alpha2, S: beta2).
ThetaExpr bialgebra_integrand(const Quiver& q, const ThetaExpr& x, const FourSplit& s) {
    ThetaExpr e = coproduct_expr(q, x, kTagF0, s.alpha1, kTagP, s.alpha2, kTagQ, kMz);
    e = coproduct_expr(q, e, kTagG0, s.beta1, kTagR, s.beta2, kTagS, kMz);
    return braiding_expr(q, e, s.alpha2, kTagQ, s.beta1, kTagR, kMz);
}

}  // namespace

const char* to_string(Axiom a) {
    switch (a) {
        case Axiom::Covacuum: return "covacuum";
        case Axiom::SkewSymmetry: return "skew-symmetry";
        case Axiom::WeakCoassoc: return "weak-coassoc";
        case Axiom::YangBaxter: return "yang-baxter";
        case Axiom::Translation: return "translation";
        case Axiom::Colocality: return "colocality";
        case Axiom::Unitarity: return "unitarity";
    }
    return "?";
}

const std::vector<Axiom>& all_axioms() {
    static const std::vector<Axiom> all{Axiom::Covacuum,    Axiom::SkewSymmetry, Axiom::WeakCoassoc, Axiom::YangBaxter,
                                        Axiom::Translation, Axiom::Colocality,   Axiom::Unitarity};
    return all;
}

Axiom axiom_from_string(const std::string& s) {
    for (Axiom a : all_axioms())
        if (s == to_string(a)) return a;
    throw StructuralError("unknown axiom '" + s + "'");
}

size_t axiom_arity(Axiom a) {
    switch (a) {
        case Axiom::Covacuum: return 1;
        case Axiom::SkewSymmetry:
        case Axiom::Translation:
        case Axiom::Unitarity: return 2;
        case Axiom::WeakCoassoc:
        case Axiom::YangBaxter:
        case Axiom::Colocality: return 3;
    }
    return 0;
}

const char* to_string(SeriesMode m) {
    switch (m) {
        case SeriesMode::Auto: return "auto";
        case SeriesMode::Exact: return "exact";
        case SeriesMode::Modular: return "modular";
    }
    return "?";
}

SeriesMode series_mode_from_string(const std::string& s) {
    if (s == "auto") return SeriesMode::Auto;
    if (s == "exact") return SeriesMode::Exact;
    if (s == "modular") return SeriesMode::Modular;
    throw StructuralError("unknown series mode '" + s + "'");
}

CheckReport check_coalgebra_axiom(Axiom a, const Quiver& q, const std::vector<DimVector>& dims,
                                  const CheckOptions& opts) {
    if (dims.size() != axiom_arity(a))
        throw StructuralError(std::string(to_string(a)) + " takes " + std::to_string(axiom_arity(a)) +
                              " dimension vectors");
    for (const auto& d : dims)
        if (d.size() != q.num_vertices()) throw StructuralError("dimension vector " + d.str() + " does not fit the quiver");
    CheckReport rep(to_string(a), {{"dims", dims_list(dims)}, {"window", opts.window_low}});
    Tally t{rep, q.vars(), {}};
    switch (a) {
        case Axiom::Covacuum: check_covacuum(t, q, dims[0], opts); break;
        case Axiom::SkewSymmetry: check_skew(t, q, dims[0], dims[1], opts); break;
        case Axiom::WeakCoassoc: check_weak_coassoc(t, q, dims[0], dims[1], dims[2], opts); break;
        case Axiom::YangBaxter: check_yang_baxter(t, q, dims[0], dims[1], dims[2], opts); break;
        case Axiom::Translation: check_translation(t, q, dims[0], dims[1], opts); break;
        case Axiom::Colocality: check_colocality(t, q, dims[0], dims[1], dims[2]); break;
        case Axiom::Unitarity: check_unitarity(t, q, dims[0], dims[1]); break;
    }
    t.finish();
    return rep;
}

CheckReport check_bialgebra_square(const Quiver& q, const KClass& f, const KClass& g, const DimVector& gamma1,
                                   const DimVector& gamma2, const CheckOptions& opts) {
    const DimVector& alpha = f.dim;
    const DimVector& beta = g.dim;
    if (alpha + beta != gamma1 + gamma2) throw StructuralError("graded piece does not match the product dimension");
    CheckReport rep("bialgebra",
                    {{"alpha", dims_json(alpha)}, {"beta", dims_json(beta)}, {"gamma1", dims_json(gamma1)},
                     {"gamma2", dims_json(gamma2)}, {"window", opts.window_low}});
    const VarTable& vars = q.vars();
    const std::string what = "Y(f * g) in (" + gamma1.str() + ", " + gamma2.str() + ") for f = " +
                             to_string(f.value, vars) + ", g = " + to_string(g.value, vars);

    LaurentPoly fg;
    try {
        fg = hall_product(q, f, g, HallForm::Coset, kSrc).value.value;
    } catch (const CancellationError& e) {
        rep.record(Verdict::Fail, what + ": f * g is not a Laurent polynomial: " + e.what());
        return rep;
    }
    ThetaExpr lhs = coproduct_expr(q, expr(fg), kSrc, gamma1, kTagA, gamma2, kTagB, kMz);
    ThetaExpr x = expr(on_tag(f.value, f.tag, kTagF0) * on_tag(g.value, g.tag, kTagG0));
    std::vector<FourSplit> splits = splittings(alpha, beta, gamma1, gamma2);

    size_t weight = series_weight(lhs);
    std::vector<ThetaExpr> integrands;
    for (const auto& s : splits) {
        integrands.push_back(bialgebra_integrand(q, x, s));
        weight += series_weight(integrands.back());
    }

    try {
        if (use_exact(opts, weight)) {
            rep.params["method"] = "exact";
            FormalSeries rhs;
            bool first = true;
            for (size_t i = 0; i < splits.size(); ++i) {
                const FourSplit& s = splits[i];
                FormalSeries term = integrands[i].expand(opts.window_low).map_coeffs([&](const LaurentPoly& c) {
                    LaurentPoly a = shuffle(q, c, s.alpha1, kTagP, s.beta1, kTagQ, kTagA, HallForm::Coset);
                    return shuffle(q, a, s.alpha2, kTagR, s.beta2, kTagS, kTagB, HallForm::Coset);
                });
                if (first) rhs = term, first = false;
                else rhs += term;
            }
            FormalSeries l = lhs.expand(opts.window_low);
            SeriesComparison c = compare(l, rhs);
            std::string w;
            if (c.verdict == Verdict::Fail)
                w = what + ": coefficient of " + key_string(c.witness) + " differs by " +
                    to_string(l.coefficient(c.witness.first, c.witness.second) -
                                  rhs.coefficient(c.witness.first, c.witness.second),
                              vars);
            else if (c.verdict == Verdict::Inconclusive)
                w = what + ": empty " + window_string(c);
            rep.record(c.verdict, w);
        } else {
            // Full-form products evaluated at permuted points: the symmetrizer
            // commutes with the evaluation because it only permutes slots.
            rep.params["method"] = "modular";
            Evaluator ev(opts.salt);
            std::vector<SlotBlock> blocks = symmetry_group(gamma1, kTagA).blocks();
            SymGroupAction second = symmetry_group(gamma2, kTagB);
            for (const auto& b : second.blocks()) blocks.push_back(b);
            SymGroupAction group(blocks);
            ModSeries rhs;
            bool first = true;
            for (size_t i = 0; i < splits.size(); ++i) {
                const FourSplit& s = splits[i];
                ThetaExpr j = integrands[i];
                j.theta = j.theta * theta(q, s.alpha1, kTagP, s.beta1, kTagQ, Monomial()).inverse() *
                          theta(q, s.alpha2, kTagR, s.beta2, kTagS, Monomial()).inverse();
                std::vector<SlotPart> left{{s.alpha1, kTagP}, {s.beta1, kTagQ}};
                std::vector<SlotPart> right{{s.alpha2, kTagR}, {s.beta2, kTagS}};
                j = j.transform(
                    [&](const Monomial& m) { return merge_slots(merge_slots(m, left, kTagA), right, kTagB); });
                ModSeries sum;
                bool first_sigma = true;
                group.for_each([&](const VarSubstitution& sigma) {
                    ModSeries v = j.transform([&](const Monomial& m) { return sigma.apply(m); })
                                      .expand(opts.window_low, ev);
                    if (first_sigma) sum = v, first_sigma = false;
                    else sum += v;
                });
                Integer denom = factorial(s.alpha1) * factorial(s.beta1) * factorial(s.alpha2) * factorial(s.beta2);
                sum.scale(modp::inv(modp::from_integer(denom)));
                if (first) rhs = sum, first = false;
                else rhs += sum;
            }
            SeriesComparison c = compare(lhs.expand(opts.window_low, ev), rhs);
            std::string w;
            if (c.verdict == Verdict::Fail)
                w = what + ": coefficient of " + key_string(c.witness) + " differs at the evaluation point";
            else if (c.verdict == Verdict::Inconclusive)
                w = what + ": empty " + window_string(c);
            rep.record(c.verdict, w);
        }
    } catch (const WindowError& e) {
        rep.record(Verdict::Inconclusive, what + ": " + e.what());
    } catch (const CancellationError& e) {
        rep.record(Verdict::Fail, what + ": " + e.what());
    }
    return rep;
}

CheckReport check_bialgebra_square(const Quiver& q, const DimVector& alpha, const DimVector& beta,
                                   const CheckOptions& opts) {
    CheckReport rep("bialgebra", {{"alpha", dims_json(alpha)}, {"beta", dims_json(beta)}, {"window", opts.window_low}});
    auto pieces = splittings(alpha + beta);
    for (const auto& [f, g] : pair_family(test_classes(alpha, kTagA), test_classes(beta, kTagB))) {
        KClass fc{alpha, kTagA, f}, gc{beta, kTagB, g};
        for (const auto& [g1, g2] : pieces) rep.absorb(check_bialgebra_square(q, fc, gc, g1, g2, opts));
    }
    return rep;
}

CheckReport check_kernel_identity(const Quiver& q, const FourSplit& s) {
    const DimVector alpha = s.alpha1 + s.alpha2, beta = s.beta1 + s.beta2;
    const DimVector gamma1 = s.alpha1 + s.beta1, gamma2 = s.alpha2 + s.beta2;
    CheckReport rep("kernel-identity", {{"alpha1", dims_json(s.alpha1)},
                                        {"alpha2", dims_json(s.alpha2)},
                                        {"beta1", dims_json(s.beta1)},
                                        {"beta2", dims_json(s.beta2)}});
    const VarTable& vars = q.vars();
    auto E = [&](const DimVector& x, Tag a, const DimVector& y, Tag b) { return bilinear_class(q, x, a, y, b); };

    // alpha on G1 split into (A1, A2), beta on G2 split into (B1, B2);
    // gamma1 on G1 split into (A1, B1), gamma2 on G2 split into (A2, B2).
    std::vector<SlotPart> pa{{s.alpha1, kTagA1}, {s.alpha2, kTagA2}}, pb{{s.beta1, kTagB1}, {s.beta2, kTagB2}};
    std::vector<SlotPart> p1{{s.alpha1, kTagA1}, {s.beta1, kTagB1}}, p2{{s.alpha2, kTagA2}, {s.beta2, kTagB2}};
    auto split_ab = [&](const Monomial& m) { return split_slots(split_slots(m, kTagG1, pa), kTagG2, pb); };
    auto split_12 = [&](const Monomial& m) { return split_slots(split_slots(m, kTagG1, p1), kTagG2, p2); };

    SignedRoots T = E(alpha, kTagG1, beta, kTagG2).transform(split_ab) - E(s.alpha1, kTagA1, s.beta1, kTagB1) -
                    E(s.alpha2, kTagA2, s.beta2, kTagB2);
    auto multiset = [&](const char* what, const SignedRoots& l, const SignedRoots& r) {
        auto d = first_difference(l, r);
        rep.record(d ? Verdict::Fail : Verdict::Pass,
                   d ? std::string(what) + ": multiplicities differ at " + to_string(LaurentPoly::monomial(*d), vars) : std::string());
    };
    multiset("T = E(a1,b2) + E(a2,b1)", T, E(s.alpha1, kTagA1, s.beta2, kTagB2) + E(s.alpha2, kTagA2, s.beta1, kTagB1));
    SignedRoots lhs = E(gamma1, kTagG1, gamma2, kTagG2).transform(split_12) - T;
    SignedRoots rhs = E(s.beta1, kTagB1, s.alpha2, kTagA2) - E(s.alpha2, kTagA2, s.beta1, kTagB1) +
                      E(s.alpha1, kTagA1, s.alpha2, kTagA2) + E(s.beta1, kTagB1, s.beta2, kTagB2);
    multiset("E(g1,g2) - T = E(b1,a2) - E(a2,b1) + E(a1,a2) + E(b1,b2)", lhs, rhs);

    auto zdeg = [&](const Monomial& m) { return scale_tag(scale_tag(m, kTagA1, kMz), kTagB1, kMz); };
    std::set<int> weights;
    for (const auto& [m, k] : T.roots()) {
        int w = zdeg(m).exponent(kZ);
        weights.insert(w);
        if (w == 1 || w == -1)
            rep.record(Verdict::Pass);
        else
            rep.record(Verdict::Fail, "root " + to_string(LaurentPoly::monomial(m), vars) + " of T has z-weight " +
                                          std::to_string(w));
    }
    rep.params["z_weights"] = weights;

    ThetaProduct wedge;
    for (const auto& [m, k] : T.roots()) wedge.add(Monomial(), zdeg(m.inverse()), k);
    ThetaProduct left = theta(q, gamma1, kTagG1, gamma2, kTagG2, kMz).transform(split_12) * wedge.inverse();
    ThetaProduct right = braiding_factor(q, s.alpha2, kTagA2, s.beta1, kTagB1, kMz).ratio() *
                         theta(q, s.alpha1, kTagA1, s.alpha2, kTagA2, kMz) *
                         theta(q, s.beta1, kTagB1, s.beta2, kTagB2, kMz);
    if (left == right)
        rep.record(Verdict::Pass);
    else
        rep.record(Verdict::Fail, "theta products differ: " + left.to_string(vars) + " vs " + right.to_string(vars));
    RationalFn lr = left.to_rational(), rr = right.to_rational();
    if (lr == rr)
        rep.record(Verdict::Pass);
    else
        rep.record(Verdict::Fail, "kernel comparison fails: " + to_string(lr, vars) + " != " + to_string(rr, vars));
    return rep;
}

CheckReport knorrer_identity_check() {
    CheckReport rep("knorrer");
    VarTable vars;
    Var t1 = vars.add_param("t1"), t2 = vars.add_param("t2");
    Monomial m1 = Monomial::var(t1), m2 = Monomial::var(t2), kappa = m1 * m2;
    LaurentPoly w = LaurentPoly::one_minus(kappa);
    LaurentPoly x0 = LaurentPoly::monomial(m2) * LaurentPoly::one_minus(m1);
    LaurentPoly y0 = LaurentPoly::one_minus(m2);
    LaurentPoly rel = w - y0 - x0;
    rep.record(rel.is_zero() ? Verdict::Pass : Verdict::Fail, "relation leaves " + to_string(rel, vars));
    VarSubstitution at1;
    at1.set(t2, Monomial());
    LaurentPoly at_one = rel.substitute(at1);
    rep.record(at_one.is_zero() && y0.substitute(at1).is_zero() &&
                       x0.substitute(at1) == LaurentPoly::one_minus(m1)
                   ? Verdict::Pass
                   : Verdict::Fail,
               "specialization t2 = 1 leaves " + to_string(at_one, vars));
    rep.record(w == LaurentPoly(1) - LaurentPoly::monomial(kappa) && w == y0 + x0 ? Verdict::Pass : Verdict::Fail,
               "generator of O_W is not 1 - kappa");
    return rep;
}

CheckReport ring_axiom_check(uint64_t seed, unsigned trials) {
    CheckReport rep("ring-axioms", {{"seed", seed}, {"trials", trials}});
    std::mt19937_64 rng(seed);
    const VarTable vars({"1"});
    const std::vector<Var> xs{kHbar, Var::slot(kTagA, 0, 0), Var::slot(kTagA, 0, 1), Var::slot(kTagB, 0, 0)};
    std::uniform_int_distribution<int> exponent(-2, 2), coef(-6, 6), nterms(1, 4);
    auto poly = [&] {
        LaurentPoly p;
        for (int t = nterms(rng); t > 0; --t) {
            Monomial::Storage e;
            for (Var v : xs)
                if (int x = exponent(rng)) e.emplace_back(v, x);
            p.add_term(Monomial::from_entries(std::move(e)), Integer(coef(rng)));
        }
        return p;
    };
    auto mono = [&] {
        Monomial::Storage e;
        for (Var v : xs)
            if (int x = exponent(rng)) e.emplace_back(v, x);
        return Monomial::from_entries(std::move(e));
    };
    for (unsigned i = 0; i < trials; ++i) {
        LaurentPoly a = poly(), b = poly(), c = poly();
        const std::string at = " at a = " + to_string(a, vars) + ", b = " + to_string(b, vars);
        rep.record((a * b) * c == a * (b * c) ? Verdict::Pass : Verdict::Fail, "product not associative" + at);
        rep.record(a * b == b * a ? Verdict::Pass : Verdict::Fail, "product not commutative" + at);
        rep.record(a * (b + c) == a * b + a * c ? Verdict::Pass : Verdict::Fail, "not distributive" + at);
        rep.record((a - a).is_zero() && a + LaurentPoly() == a && a * LaurentPoly(1) == a ? Verdict::Pass
                                                                                           : Verdict::Fail,
                   "unit laws fail" + at);
        if (!b.is_zero()) {
            auto q = (a * b).divide_exact(b);
            rep.record(q && *q == a ? Verdict::Pass : Verdict::Fail, "exact division does not undo the product" + at);
        }
        Monomial m = mono();
        if (m != Monomial()) {
            RationalFn r = RationalFn(a) * RationalFn::binomial(m, -1) * RationalFn::binomial(m, 1);
            rep.record(r == RationalFn(a) ? Verdict::Pass : Verdict::Fail, "binomial does not cancel its inverse" + at);
            RationalFn s = RationalFn(a) * RationalFn::binomial(m, -1) + RationalFn(b) * RationalFn::binomial(m, -1);
            rep.record(s == RationalFn(a + b) * RationalFn::binomial(m, -1) ? Verdict::Pass : Verdict::Fail,
                       "fraction sum is wrong" + at);
        }
    }
    return rep;
}

CheckReport check_shuffle_product(const Quiver& q, const KClass& f, const KClass& g) {
    const VarTable& vars = q.vars();
    CheckReport rep("shuffle-product", {{"alpha", dims_json(f.dim)}, {"beta", dims_json(g.dim)}});
    const std::string what = "f = " + to_string(f.value, vars) + ", g = " + to_string(g.value, vars);
    try {
        ShuffleResult coset = hall_product(q, f, g, HallForm::Coset);
        ShuffleResult full = hall_product(q, f, g, HallForm::Full);
        rep.record(coset.value.value == full.value.value ? Verdict::Pass : Verdict::Fail,
                   what + ": coset and full forms differ by " + to_string(coset.value.value - full.value.value, vars));
        rep.record(is_symmetric(coset.value) ? Verdict::Pass : Verdict::Fail, what + ": product is not symmetric");
    } catch (const CancellationError& e) {
        rep.record(Verdict::Fail, what + ": " + e.what());
    }
    const DimVector zero = DimVector::zero(f.dim.size());
    KClass one{zero, kTagB, LaurentPoly(1)};
    LaurentPoly fa = on_tag(f.value, f.tag, kTagA);
    rep.record(hall_product(q, f, one).value.value == fa ? Verdict::Pass : Verdict::Fail, what + ": f * 1 != f");
    rep.record(hall_product(q, KClass{zero, kTagA, LaurentPoly(1)}, f).value.value == fa ? Verdict::Pass
                                                                                        : Verdict::Fail,
               what + ": 1 * f != f");
    return rep;
}

CheckReport check_associativity(const Quiver& q, const KClass& f, const KClass& g, const KClass& h,
                                std::optional<TwistOrientation> twist) {
    const VarTable& vars = q.vars();
    CheckReport rep("associativity", {{"alpha", dims_json(f.dim)}, {"beta", dims_json(g.dim)}, {"gamma", dims_json(h.dim)}});
    if (twist) rep.params["twist"] = *twist == TwistOrientation::AB ? "AB" : "BA";
    auto mul = [&](const KClass& a, const KClass& b, Tag out) {
        return twist ? twisted_product(q, a, b, *twist, HallForm::Coset, out).value
                     : hall_product(q, a, b, HallForm::Coset, out).value;
    };
    const std::string what = "f = " + to_string(f.value, vars) + ", g = " + to_string(g.value, vars) +
                             ", h = " + to_string(h.value, vars);
    try {
        KClass fg = mul(f, g, kTagA), gh = mul(g, h, kTagB);
        KClass l = mul(fg, h, kTagA), r = mul(f, gh, kTagA);
        rep.record(l.value == r.value ? Verdict::Pass : Verdict::Fail,
                   what + ": (f*g)*h - f*(g*h) = " + to_string(l.value - r.value, vars));
    } catch (const CancellationError& e) {
        rep.record(Verdict::Fail, what + ": " + e.what());
    }
    return rep;
}

KClass wheel_class(const Quiver& q, const DimVector& d, WheelConvention c) {
    LaurentPoly p(1);
    const Monomial hbar = Monomial::var(kHbar);
    for (const Edge& e : q.base_edges()) {
        Monomial ce = c == WheelConvention::Kernel ? e.weight : hbar / e.weight;
        for (unsigned k = 0; k < d[e.src]; ++k)
            for (unsigned l = 0; l < d[e.dst]; ++l) {
                if (e.src == e.dst && k == l) continue;
                p *= LaurentPoly::var(Var::slot(kTagA, e.src, k)) -
                     LaurentPoly::monomial(ce * Monomial::var(Var::slot(kTagA, e.dst, l)));
            }
    }
    return {d, kTagA, p};
}

std::vector<Quiver> test_quivers() {
    std::vector<Quiver> out;
    for (const Quiver& base : {Quiver::edgeless(1), Quiver::jordan(), Quiver::a2()})
        for (QuiverKind k : {QuiverKind::Plain, QuiverKind::Doubled, QuiverKind::Tripled})
            out.push_back(k == QuiverKind::Plain ? base : base.extend(k));
    return out;
}

std::vector<CheckReport> run_jobs(const std::vector<std::function<CheckReport()>>& jobs, unsigned n) {
    std::vector<CheckReport> out(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < jobs.size();) {
            try {
                out[i] = jobs[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    n = std::max(1u, std::min<unsigned>(n, unsigned(jobs.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

namespace {

nlohmann::json suite_params(const Quiver& q, const SuiteOptions& o) {
    return {{"quiver", q.to_json()},
            {"kind", to_string(q.kind())},
            {"window", o.check.window_low},
            {"mode", to_string(o.check.mode)},
            {"max_component", o.max_component},
            {"max_total", o.max_total}};
}

CheckReport gather(CheckReport rep, const std::vector<std::function<CheckReport()>>& jobs, unsigned n) {
    for (const auto& r : run_jobs(jobs, n)) rep.absorb(r);
    return rep;
}

// {1} and m_(1) of every vertex block.
std::vector<LaurentPoly> small_classes(const DimVector& d, Tag tag) {
    std::vector<LaurentPoly> out{LaurentPoly(1)};
    for (unsigned i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        LaurentPoly m1;
        for (unsigned k = 0; k < d[i]; ++k) m1 += LaurentPoly::var(Var::slot(tag, i, k));
        out.push_back(m1);
    }
    return out;
}

struct Triple {
    KClass f, g, h;
};

std::vector<Triple> associativity_cases(const Quiver& q, unsigned max_component, unsigned max_total) {
    std::vector<Triple> out;
    auto dims = dims_up_to(q.num_vertices(), max_component, max_total);
    for (const auto& a : dims)
        for (const auto& b : dims)
            for (const auto& c : dims) {
                if (a.total() + b.total() + c.total() > max_total) continue;
                auto fs = small_classes(a, kTagA), gs = small_classes(b, kTagB), hs = small_classes(c, kTagC);
                std::vector<std::array<size_t, 3>> picks{{0, 0, 0}};
                for (size_t i = 1; i < fs.size(); ++i) picks.push_back({i, 0, 0});
                for (size_t i = 1; i < gs.size(); ++i) picks.push_back({0, i, 0});
                for (size_t i = 1; i < hs.size(); ++i) picks.push_back({0, 0, i});
                if (fs.size() > 1 && gs.size() > 1 && hs.size() > 1) picks.push_back({1, 1, 1});
                for (const auto& [i, j, k] : picks)
                    out.push_back({KClass{a, kTagA, fs[i]}, KClass{b, kTagB, gs[j]}, KClass{c, kTagC, hs[k]}});
            }
    return out;
}

}  // namespace

CheckReport coalgebra_suite(const Quiver& q, const SuiteOptions& o) {
    auto dims = dims_up_to(q.num_vertices(), o.max_component, o.max_total);
    std::vector<std::function<CheckReport()>> jobs;
    for (Axiom a : all_axioms()) {
        size_t n = axiom_arity(a);
        for (const auto& x : dims) {
            if (n == 1) {
                jobs.push_back([&q, a, x, &o] { return check_coalgebra_axiom(a, q, {x}, o.check); });
                continue;
            }
            for (const auto& y : dims) {
                if (x.total() + y.total() > o.max_total) continue;
                if (n == 2) {
                    jobs.push_back([&q, a, x, y, &o] { return check_coalgebra_axiom(a, q, {x, y}, o.check); });
                    continue;
                }
                for (const auto& z : dims) {
                    if (x.total() + y.total() + z.total() > o.max_total) continue;
                    jobs.push_back([&q, a, x, y, z, &o] { return check_coalgebra_axiom(a, q, {x, y, z}, o.check); });
                }
            }
        }
    }
    return gather(CheckReport("coalgebra", suite_params(q, o)), jobs, o.jobs);
}

CheckReport bialgebra_suite(const Quiver& q, const SuiteOptions& o) {
    auto dims = dims_up_to(q.num_vertices(), o.max_component, 2);
    std::vector<std::function<CheckReport()>> jobs;
    for (const auto& a : dims)
        for (const auto& b : dims) jobs.push_back([&q, a, b, &o] { return check_bialgebra_square(q, a, b, o.check); });
    CheckReport rep("bialgebra", suite_params(q, o));
    rep.params["max_total"] = 2;
    return gather(rep, jobs, o.jobs);
}

CheckReport shuffle_suite(const Quiver& q, const SuiteOptions& o) {
    const unsigned total = std::min(o.max_total, 4u);
    auto dims = dims_up_to(q.num_vertices(), o.max_component, total);
    std::vector<std::function<CheckReport()>> jobs;
    for (const auto& a : dims)
        for (const auto& b : dims) {
            if (a.total() + b.total() > total) continue;
            for (const auto& f : test_classes(a, kTagA))
                for (const auto& g : small_classes(b, kTagB))
                    jobs.push_back([&q, a, b, f, g] {
                        return check_shuffle_product(q, KClass{a, kTagA, f}, KClass{b, kTagB, g});
                    });
        }
    for (const auto& t : associativity_cases(q, o.max_component, total))
        jobs.push_back([&q, t] { return check_associativity(q, t.f, t.g, t.h); });
    CheckReport rep("shuffle", suite_params(q, o));
    rep.params["max_total"] = total;
    return gather(rep, jobs, o.jobs);
}

CheckReport wheel_suite(const Quiver& q, const SuiteOptions& o) {
    CheckReport rep("wheel", suite_params(q, o));
    if (q.kind() != QuiverKind::Tripled) throw StructuralError("the wheel suite needs a tripled quiver");
    const VarTable& vars = q.vars();
    // Three slots at a vertex are needed before a loop family is nonvacuous.
    auto dims = dims_up_to(q.num_vertices(), 3, 3);
    for (WheelConvention c : {WheelConvention::Kernel, WheelConvention::Literal}) {
        const std::string cs = std::string(" (") + to_string(c) + ")";
        for (const auto& d : dims) {
            if (d.is_zero()) continue;
            CheckReport w = wheel_check(q, wheel_class(q, d, c), c);
            w.name = "wheel class " + d.str() + cs;
            rep.absorb(w);
            CheckReport one = wheel_check(q, KClass{d, kTagA, LaurentPoly(1)}, c);
            bool vacuous = one.cases == 0;
            rep.record(vacuous == one.passed() ? Verdict::Pass : Verdict::Fail,
                       "constant 1 in " + d.str() + cs + (vacuous ? " fails on a vacuous locus" : " passes"));
        }
        // The literal loci are not preserved by the default product.
        if (c == WheelConvention::Literal) continue;
        for (const auto& a : dims)
            for (const auto& b : dims) {
                if (a.is_zero() || b.is_zero() || a.total() + b.total() > 3) continue;
                KClass p = hall_product(q, wheel_class(q, a, c), wheel_class(q, b, c)).value;
                CheckReport w = wheel_check(q, p, c);
                w.name = "product of wheel classes " + a.str() + " * " + b.str() + cs + " = " +
                         to_string(p.value, vars);
                rep.absorb(w);
            }
    }
    return rep;
}

CheckReport kernel_identity_suite(const Quiver& q, unsigned max_total) {
    CheckReport rep("kernel-identity", {{"quiver", q.to_json()}, {"kind", to_string(q.kind())}, {"max_total", max_total}});
    auto dims = dims_up_to(q.num_vertices(), max_total, max_total);
    for (const auto& a1 : dims)
        for (const auto& a2 : dims)
            for (const auto& b1 : dims)
                for (const auto& b2 : dims) {
                    if (a1.total() + a2.total() + b1.total() + b2.total() > max_total) continue;
                    rep.absorb(check_kernel_identity(q, FourSplit{a1, a2, b1, b2}));
                }
    return rep;
}

CheckReport twist_suite(const Quiver& q, const SuiteOptions& o) {
    if (q.kind() != QuiverKind::Tripled) throw StructuralError("the twisted product needs a tripled quiver");
    CheckReport rep("twist", suite_params(q, o));
    const unsigned total = std::min(o.max_total, 4u);
    rep.params["max_total"] = total;
    auto cases = associativity_cases(q, o.max_component, total);
    nlohmann::json passing = nlohmann::json::array();
    CheckReport worst("twist");
    worst.verdict = Verdict::Pass;
    for (TwistOrientation t : {TwistOrientation::AB, TwistOrientation::BA}) {
        std::vector<std::function<CheckReport()>> jobs;
        for (const auto& c : cases) jobs.push_back([&q, c, t] { return check_associativity(q, c.f, c.g, c.h, t); });
        CheckReport sub(t == TwistOrientation::AB ? "orientation AB" : "orientation BA");
        sub = gather(sub, jobs, o.jobs);
        rep.params[sub.name] = sub.to_json();
        if (sub.passed()) passing.push_back(t == TwistOrientation::AB ? "AB" : "BA");
        else worst.absorb(sub);
        rep.cases += sub.cases;
    }
    rep.params["passing_orientations"] = passing;
    if (passing.empty()) {
        rep.verdict = worst.verdict;
        rep.witness = worst.witness;
    }
    return rep;
}

}  // namespace kvb
