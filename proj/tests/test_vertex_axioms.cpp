#include <catch_amalgamated.hpp>

#include "kvb/axioms.hpp"
#include "kvb/errors.hpp"

using namespace kvb;

namespace {

Monomial sA(unsigned i = 0, unsigned k = 0, int e = 1) { return Monomial::var(Var::slot(kTagA, i, k), e); }
Monomial sB(unsigned i = 0, unsigned k = 0, int e = 1) { return Monomial::var(Var::slot(kTagB, i, k), e); }
const Monomial z = Monomial::var(kZ);
const Monomial w = Monomial::var(kW);

Quiver literal(Quiver q) { return q.with_convention(SignConvention::EdgeMinusVertex); }
Quiver jordan3() { return Quiver::jordan().extend(QuiverKind::Tripled); }

CheckOptions mode(SeriesMode m) {
    CheckOptions o;
    o.mode = m;
    return o;
}

LaurentPoly m1(Tag t, unsigned n) {
    LaurentPoly p;
    for (unsigned k = 0; k < n; ++k) p += LaurentPoly::var(Var::slot(t, 0, k));
    return p;
}

}  // namespace

TEST_CASE("coproduct: covacuum degenerations") {
    Quiver q = jordan3();
    DimVector zero({0}), two({2});
    KClass h{two, kTagA, m1(kTagA, 2) * m1(kTagA, 2)};
    auto left = vertex_coproduct(q, h, zero, two);
    CHECK(left.series.is_exact());
    CHECK(left.series.to_poly() == h.value.transform([](const Monomial& m) { return retag(m, swap_tags(kTagA, kTagB)); }));
    auto right = vertex_coproduct(q, h, two, zero);
    CHECK(right.series.is_exact());
    CHECK(right.series.to_poly() == translation(h, kZ).value);
    CHECK_THROWS_AS(vertex_coproduct(q, h, two, two), StructuralError);
}

TEST_CASE("coproduct: edgeless worked example") {
    DimVector one({1}), two({2});
    KClass h{two, kTagA, LaurentPoly(1)};
    // Literal sign: -sum_{k=1..8} z^-k (s_B/s_A)^k.
    auto lit = vertex_coproduct(literal(Quiver::edgeless()), h, one, one);
    REQUIRE(lit.series.coeffs().size() == 8);
    for (int k = 1; k <= 8; ++k)
        CHECK(lit.series.coefficient(-k, 0) == LaurentPoly::monomial((sB() * sA(0, 0, -1)).pow(k), -1));
    CHECK(lit.series.low(0) == -8);
    // Default sign: the inverse factor, which is a polynomial.
    auto def = vertex_coproduct(Quiver::edgeless(), h, one, one);
    CHECK(def.series.is_exact());
    CHECK(def.series.to_poly() == LaurentPoly::one_minus(z * sA() * sB(0, 0, -1)));
}

TEST_CASE("coproduct: series agree with the rational function") {
    for (const Quiver& q : test_quivers()) {
        DimVector a = q.dim(std::vector<unsigned>(q.num_vertices(), 1));
        KClass h{a + a, kTagA, test_classes(a + a, kTagA).back()};
        for (const Quiver& qq : {q, literal(q)}) {
            auto y = vertex_coproduct(qq, h, a, a);
            ThetaExpr x{{}, h.value.transform([](const Monomial& m) { return retag(m, swap_tags(kTagA, kTagD)); })};
            RationalFn r = coproduct_expr(qq, x, kTagD, a, kTagA, a, kTagB, z).rational();
            CHECK(agrees(y.series, r).verdict == Verdict::Pass);
        }
    }
}

TEST_CASE("translation operator") {
    DimVector two({2});
    KClass h{two, kTagA, LaurentPoly::var(Var::slot(kTagA, 0, 0), 2) - LaurentPoly::var(Var::slot(kTagA, 0, 1), -1)};
    KClass t = translation(h, kZ);
    CHECK(t.value == LaurentPoly::monomial(z.pow(2) * sA().pow(2)) - LaurentPoly::monomial(z.inverse() * sA(0, 1, -1)));
    // D(z) D(w) = D(zw).
    CHECK(translation(translation(h, kZ), kW).value ==
          h.value.transform([](const Monomial& m) { return scale_slots(m, z * w); }));
    CHECK(translation(translation(h, kZ, 1), kZ, -1).value == h.value);
}

TEST_CASE("braiding: trivial on the vacuum line, and the edgeless multiplier") {
    Quiver q = jordan3();
    DimVector zero({0}), one({1});
    KClass u{zero, kTagA, LaurentPoly(1)}, v{one, kTagB, LaurentPoly::monomial(sB().pow(3))};
    auto b = braiding_apply(q, u, v);
    CHECK(b.series.is_exact());
    CHECK(b.series.to_poly() == LaurentPoly::monomial(sA().pow(3)));

    for (const Quiver& e : {Quiver::edgeless(), literal(Quiver::edgeless())}) {
        KClass x{one, kTagA, LaurentPoly(1)}, y{one, kTagB, LaurentPoly(1)};
        auto s = braiding_apply(e, x, y);
        RationalFn expected = braiding_factor(e, one, kTagA, one, kTagB, z).rational().transform(
            [](const Monomial& m) { return retag(m, swap_tags(kTagA, kTagB)); });
        CHECK(agrees(s.series, expected).verdict == Verdict::Pass);
    }
}

TEST_CASE("covacuum projects to the zero-dimensional part") {
    LaurentPoly c = LaurentPoly(3) - LaurentPoly::var(kHbar);
    CHECK(covacuum_apply({{DimVector({0}), c}}) == c);
    CHECK(covacuum_apply({{DimVector({1}), LaurentPoly::monomial(sA())}}).is_zero());
    CHECK(covacuum_apply({{DimVector({1}), LaurentPoly::monomial(sA())}, {DimVector({0}), c}}) == c);
}

TEST_CASE("modular expansion is the image of the exact expansion") {
    Quiver q = Quiver::a2().extend(QuiverKind::Tripled);
    DimVector a({1, 0}), b({0, 1}), c({1, 0});
    ThetaExpr x{{}, test_classes(a + b + c, kTagD)[1]};
    ThetaExpr e = coproduct_expr(q, x, kTagD, a + b, 4, c, kTagC, w);
    e = coproduct_expr(q, e, 4, a, kTagA, b, kTagB, z);
    Evaluator ev(7);
    ModSeries direct = e.expand(-5, ev);
    ModSeries image = ModSeries::evaluate(e.expand(-5), ev);
    CHECK(direct.coeffs() == image.coeffs());
    CHECK(compare(direct, image).verdict == Verdict::Pass);
    CHECK(compare(direct, image).compared_terms > 0);
}

TEST_CASE("series operators agree with the symbolic chain") {
    Quiver q = jordan3();
    DimVector one({1}), two({2});
    LaurentPoly h = test_classes(DimVector({3}), kTagD)[1];
    // (Y(z) x id) Y(w) on a class of dimension 3.
    FormalSeries step = apply_coproduct(q, FormalSeries::from_poly(h), kTagD, two, 4, one, kTagC, w, -6);
    FormalSeries ops = apply_coproduct(q, step, 4, one, kTagA, one, kTagB, z, -6);
    ThetaExpr chain = coproduct_expr(q, coproduct_expr(q, ThetaExpr{{}, h}, kTagD, two, 4, one, kTagC, w), 4, one,
                                     kTagA, one, kTagB, z);
    auto cmp = compare(ops, chain.expand(-6));
    CHECK(cmp.verdict == Verdict::Pass);
    CHECK(cmp.compared_terms > 0);

    FormalSeries braided = apply_braiding(q, FormalSeries::from_poly(LaurentPoly::monomial(sA() * sB(0, 0, 2))), one,
                                          kTagA, one, kTagB, z, -6);
    ThetaExpr bchain = braiding_expr(q, ThetaExpr{{}, LaurentPoly::monomial(sA() * sB(0, 0, 2))}, one, kTagA, one,
                                     kTagB, z);
    CHECK(compare(braided, bchain.expand(-6)).verdict == Verdict::Pass);
}

TEST_CASE("comparison detects a wrong chain") {
    Quiver q = jordan3();
    DimVector one({1});
    ThetaExpr x{{}, LaurentPoly(1)};
    ThetaExpr lhs = coproduct_expr(q, coproduct_expr(q, x, kTagD, one + one, 4, one, kTagC, w), 4, one, kTagA, one,
                                   kTagB, z);
    // z and w exchanged on the right side.
    ThetaExpr rhs = coproduct_expr(q, coproduct_expr(q, x, kTagD, one, kTagA, one + one, 5, z * w), 5, one, kTagB, one,
                                   kTagC, z);
    CHECK(compare(lhs.expand(-6), rhs.expand(-6)).verdict == Verdict::Fail);
    Evaluator ev;
    CHECK(compare(lhs.expand(-6, ev), rhs.expand(-6, ev)).verdict == Verdict::Fail);
}

TEST_CASE("axioms: worked examples") {
    DimVector one({1}), zero({0});
    for (SeriesMode m : {SeriesMode::Exact, SeriesMode::Modular}) {
        CHECK(check_coalgebra_axiom(Axiom::WeakCoassoc, Quiver::edgeless(), {one, one, one}, mode(m)).passed());
        CHECK(check_coalgebra_axiom(Axiom::WeakCoassoc, literal(Quiver::edgeless()), {one, one, one}, mode(m))
                  .passed());
        CHECK(check_coalgebra_axiom(Axiom::YangBaxter, jordan3(), {one, one, one}, mode(m)).passed());
        CHECK(check_coalgebra_axiom(Axiom::SkewSymmetry, jordan3(), {DimVector({2}), zero}, mode(m)).passed());
    }
    CHECK_THROWS_AS(check_coalgebra_axiom(Axiom::YangBaxter, jordan3(), {one, one}), StructuralError);
    CHECK_THROWS_AS(check_coalgebra_axiom(Axiom::Covacuum, jordan3(), {DimVector({1, 0})}), StructuralError);
    CHECK(axiom_from_string("weak-coassoc") == Axiom::WeakCoassoc);
    CHECK_THROWS_AS(axiom_from_string("coassoc"), StructuralError);
}

TEST_CASE("axioms: every axiom on small dimensions, both arithmetic modes") {
    for (const Quiver& base : {jordan3(), Quiver::a2().extend(QuiverKind::Doubled)})
        for (const Quiver& q : {base, literal(base)}) {
            auto dims = dims_up_to(q.num_vertices(), 1, 1);
            for (Axiom a : all_axioms())
                for (SeriesMode m : {SeriesMode::Exact, SeriesMode::Modular}) {
                    std::vector<DimVector> args(axiom_arity(a), dims.back());
                    auto rep = check_coalgebra_axiom(a, q, args, mode(m));
                    INFO(to_string(a) << " " << rep.witness);
                    CHECK(rep.passed());
                    CHECK(rep.cases > 0);
                }
        }
}

TEST_CASE("axioms: a window that is too small is inconclusive, not a failure") {
    DimVector one({1});
    CheckOptions o = mode(SeriesMode::Exact);
    o.window_low = 0;
    auto rep = check_coalgebra_axiom(Axiom::WeakCoassoc, literal(Quiver::edgeless()), {one, one, one}, o);
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("bialgebra square: worked examples") {
    Quiver j3 = jordan3();
    DimVector one({1}), zero({0});
    KClass f{one, kTagA, LaurentPoly(1)}, g{one, kTagB, LaurentPoly(1)};
    for (SeriesMode m : {SeriesMode::Exact, SeriesMode::Modular}) {
        CheckOptions o = mode(m);
        o.window_low = -6;
        auto rep = check_bialgebra_square(j3, f, g, one, one, o);
        INFO(rep.witness);
        CHECK(rep.passed());
        CHECK(rep.params["method"] == to_string(m));
    }
    Quiver a2 = Quiver::a2();
    CHECK(check_bialgebra_square(a2, DimVector({1, 0}), DimVector({0, 1})).passed());
    // alpha = 0 reduces to Y(g) = Y(g).
    CHECK(check_bialgebra_square(j3, zero, DimVector({2})).passed());
    // Literal sign: f * g is not a Laurent polynomial.
    auto bad = check_bialgebra_square(literal(j3), f, g, one, one);
    CHECK(bad.verdict == Verdict::Fail);
    CHECK_FALSE(bad.witness.empty());
    CHECK_THROWS_AS(check_bialgebra_square(j3, f, g, one, zero), StructuralError);
}

TEST_CASE("bialgebra square: exact and modular agree on every piece") {
    Quiver q = Quiver::a2().extend(QuiverKind::Tripled);
    DimVector a({1, 0}), b({1, 1});
    KClass f{a, kTagA, test_classes(a, kTagA)[1]}, g{b, kTagB, LaurentPoly(1)};
    for (const auto& [g1, g2] : splittings(a + b)) {
        auto ex = check_bialgebra_square(q, f, g, g1, g2, mode(SeriesMode::Exact));
        auto mo = check_bialgebra_square(q, f, g, g1, g2, mode(SeriesMode::Modular));
        INFO(g1.str() << " " << g2.str() << " " << ex.witness << " " << mo.witness);
        CHECK(ex.passed());
        CHECK(mo.passed());
    }
}

TEST_CASE("kernel identity: worked examples") {
    DimVector one({1}), zero({0});
    Quiver j3 = jordan3();
    auto trivial = check_kernel_identity(j3, FourSplit{one, one, zero, zero});
    CHECK(trivial.passed());
    CHECK(trivial.params["z_weights"].empty());
    CHECK(check_kernel_identity(j3, FourSplit{one, zero, zero, one}).passed());
    Quiver a3 = Quiver::a2().extend(QuiverKind::Tripled);
    auto mixed = check_kernel_identity(a3, FourSplit{DimVector({1, 0}), DimVector({0, 1}), DimVector({0, 1}),
                                                     DimVector({1, 0})});
    CHECK(mixed.passed());
    for (int wt : mixed.params["z_weights"]) CHECK((wt == 1 || wt == -1));
    CHECK_FALSE(mixed.params["z_weights"].empty());
    // The identities are linear in E, so the literal sign satisfies them too.
    CHECK(kernel_identity_suite(literal(j3), 3).passed());
}

TEST_CASE("Knorrer relation") {
    auto rep = knorrer_identity_check();
    CHECK(rep.passed());
    CHECK(rep.cases == 3);
}

TEST_CASE("wheel classes") {
    Quiver j3 = jordan3();
    KClass w2 = wheel_class(j3, DimVector({2}));
    Monomial a = Monomial::var(*j3.vars().find_param("a"));
    LaurentPoly expected = (LaurentPoly::monomial(sA()) - LaurentPoly::monomial(a * sA(0, 1))) *
                           (LaurentPoly::monomial(sA(0, 1)) - LaurentPoly::monomial(a * sA()));
    CHECK(w2.value == expected);
    CHECK(is_symmetric(w2));
    Quiver a3 = Quiver::a2().extend(QuiverKind::Tripled);
    for (auto c : {WheelConvention::Kernel, WheelConvention::Literal}) {
        KClass wc = wheel_class(a3, DimVector({2, 1}), c);
        CHECK(wheel_check(a3, wc, c).passed());
        CHECK(wheel_check(j3, wheel_class(j3, DimVector({3}), c), c).passed());
    }
    CHECK(wheel_suite(j3).passed());
    CHECK_THROWS_AS(wheel_suite(Quiver::jordan()), StructuralError);
}

TEST_CASE("shuffle checks") {
    Quiver q = Quiver::a2().extend(QuiverKind::Doubled);
    DimVector a({1, 0}), b({1, 1});
    KClass f{a, kTagA, test_classes(a, kTagA)[1]}, g{b, kTagB, test_classes(b, kTagB)[2]};
    CHECK(check_shuffle_product(q, f, g).passed());
    KClass h{a, kTagC, LaurentPoly(1)};
    CHECK(check_associativity(q, f, g, h).passed());
    // Under the literal sign the product leaves poles.
    auto lit = check_shuffle_product(literal(jordan3()), KClass{DimVector({1}), kTagA, LaurentPoly(1)},
                                     KClass{DimVector({1}), kTagB, LaurentPoly(1)});
    CHECK(lit.verdict == Verdict::Fail);
}

TEST_CASE("twist suite records the passing orientations") {
    SuiteOptions o;
    o.max_total = 3;
    auto rep = twist_suite(jordan3(), o);
    CHECK(rep.passed());
    CHECK_FALSE(rep.params["passing_orientations"].empty());
    CHECK_THROWS_AS(twist_suite(Quiver::jordan(), o), StructuralError);
}

TEST_CASE("run_jobs keeps input order and rethrows") {
    std::vector<std::function<CheckReport()>> jobs;
    for (int i = 0; i < 20; ++i) jobs.push_back([i] { return CheckReport("job" + std::to_string(i)); });
    for (unsigned n : {1u, 4u}) {
        auto out = run_jobs(jobs, n);
        REQUIRE(out.size() == 20);
        for (int i = 0; i < 20; ++i) CHECK(out[size_t(i)].name == "job" + std::to_string(i));
    }
    jobs.push_back([]() -> CheckReport { throw StructuralError("bad job"); });
    CHECK_THROWS_AS(run_jobs(jobs, 3), StructuralError);
}

TEST_CASE("suites run with several workers give the same report") {
    SuiteOptions o;
    o.max_total = 3;
    Quiver q = jordan3();
    auto one = coalgebra_suite(q, o);
    o.jobs = 3;
    auto three = coalgebra_suite(q, o);
    CHECK(one.passed());
    CHECK(one.to_json() == three.to_json());
}
