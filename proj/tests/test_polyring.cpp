#include <catch_amalgamated.hpp>

#include "kvb/errors.hpp"
#include "kvb/formal_series.hpp"
#include "kvb/iota.hpp"
#include "kvb/poly_json.hpp"
#include "kvb/symmetrize.hpp"
#include "test_helpers.hpp"

using namespace kvb;
using kvb::testing::mono;
using kvb::testing::random_poly;

namespace {

const Var s1 = Var::slot(kTagA, 0, 0);
const Var s2 = Var::slot(kTagA, 0, 1);
const Var s3 = Var::slot(kTagA, 0, 2);
const Var sb = Var::slot(kTagB, 0, 0);

LaurentPoly v(Var x, int e = 1) { return LaurentPoly::var(x, e); }

}  // namespace

TEST_CASE("grlex orders by degree, then by the first variable") {
    CHECK(grlex(mono({{s1, 2}}), mono({{s1, 1}, {s2, 1}})) > 0);
    CHECK(grlex(mono({{s1, 1}}), mono({{s2, 1}})) > 0);
    CHECK(grlex(mono({{kHbar, 1}}), mono({{s1, 1}})) > 0);
    CHECK(grlex(mono({{s1, -1}}), Monomial()) < 0);
    CHECK(mono({{s1, 1}, {s2, -1}}).is_canonical_root());
    CHECK_FALSE(mono({{s1, -1}, {s2, 1}}).is_canonical_root());
}

TEST_CASE("variable names round-trip through the table") {
    VarTable t({"1", "2"});
    Var a = t.add_param("a");
    CHECK(t.name(a) == "a");
    CHECK(t.parse("hbar") == kHbar);
    CHECK(t.parse("s(B,2,3)") == Var::slot(kTagB, 1, 2));
    CHECK(t.parse("s(2,1)", kTagC) == Var::slot(kTagC, 1, 0));
    CHECK(t.name(Var::slot(kTagA, 0, 1)) == "s(A,1,2)");
    CHECK_THROWS_AS(t.parse("q"), StructuralError);
    CHECK_THROWS_AS(t.parse("s(A,3,1)"), StructuralError);
}

TEST_CASE("Laurent polynomials form a commutative ring") {
    std::mt19937 rng(7);
    std::vector<Var> vars{kHbar, s1, s2};
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_poly(rng, vars, 4, 2), b = random_poly(rng, vars, 3, 2), c = random_poly(rng, vars, 3, 1);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly());
        CHECK(a * LaurentPoly(1) == a);
    }
}

TEST_CASE("exact division agrees with multiplication") {
    std::mt19937 rng(11);
    std::vector<Var> vars{kHbar, s1, s2, sb};
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_poly(rng, vars, 5, 2);
        auto d = random_poly(rng, vars, 2, 2);
        if (d.is_zero()) continue;
        auto q = (p * d).divide_exact(d);
        REQUIRE(q);
        CHECK(*q == p);
    }
    LaurentPoly b = LaurentPoly::one_minus(mono({{s1, 1}, {s2, -1}}));
    CHECK_FALSE((b * b + LaurentPoly(1)).divide_exact(b));
    CHECK_FALSE(LaurentPoly(3).divide_exact(Integer(2)));
}

TEST_CASE("division by a binomial: chains and prefix sums") {
    std::mt19937 rng(17);
    std::vector<Var> vars{kHbar, s1, s2, sb};
    std::uniform_int_distribution<int> ex(-3, 3), co(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = random_poly(rng, vars, 6, 3);
        Monomial m = mono({{s1, ex(rng)}, {s2, ex(rng)}, {sb, ex(rng)}});
        if (m.is_one()) continue;
        Monomial u = mono({{kHbar, ex(rng)}, {s2, ex(rng)}});
        int c = co(rng);
        if (c == 0) continue;
        // c u - c u m, in either term order.
        LaurentPoly d = LaurentPoly::monomial(u, c) - LaurentPoly::monomial(u * m, c);
        for (const LaurentPoly& dd : {d, -d}) {
            auto q = (p * dd).divide_exact(dd);
            REQUIRE(q);
            CHECK(*q == p);
            CHECK_FALSE((p * dd + LaurentPoly::monomial(u)).divide_exact(dd));
        }
    }
    // Exponents of m that do not divide the chain position.
    Monomial m = mono({{s1, -2}, {s2, 3}});
    LaurentPoly p = v(s1, 5) + v(s1, -3) * v(s2, 7) - LaurentPoly(4);
    LaurentPoly d = LaurentPoly::one_minus(m);
    CHECK(*(p * d).divide_exact(d) == p);
    CHECK(*(p * d * d).divide_exact(d * d) == p);
    CHECK_FALSE(LaurentPoly::monomial(m).divide_exact(d));
    // 1 + m is not of the fast shape and takes the general route.
    LaurentPoly e = LaurentPoly(1) + LaurentPoly::monomial(m);
    CHECK(*(p * e).divide_exact(e) == p);
}

TEST_CASE("binomial factors are stored up to a unit") {
    Monomial m = mono({{s1, 1}, {s2, -1}});
    // 1 - 1/m = -(1/m)(1 - m)
    RationalFn lhs = RationalFn::binomial(m.inverse(), 1);
    RationalFn rhs = RationalFn(LaurentPoly::monomial(m.inverse(), -1)) * RationalFn::binomial(m, 1);
    CHECK(lhs == rhs);
    CHECK(lhs.numerator() == LaurentPoly::one_minus(m.inverse()));
    // 1/(1-m) + 1/(1-1/m) = 1
    RationalFn sum = RationalFn::binomial(m, -1) + RationalFn::binomial(m.inverse(), -1);
    REQUIRE(sum.as_polynomial());
    CHECK(*sum.as_polynomial() == LaurentPoly(1));
    CHECK_THROWS_AS(RationalFn::binomial(Monomial(), -1), DegenerateKernelError);
}

TEST_CASE("rational equality is cross-multiplication") {
    Monomial m = mono({{s1, 1}, {s2, -1}});
    RationalFn a = RationalFn(LaurentPoly::one_minus(m) * LaurentPoly::one_minus(m)) * RationalFn::binomial(m, -1);
    CHECK(a == RationalFn(LaurentPoly::one_minus(m)));
    CHECK_FALSE(a == RationalFn(LaurentPoly(1)));
    CHECK(a.as_polynomial() == LaurentPoly::one_minus(m));
    CHECK_FALSE(RationalFn::binomial(m, -1).as_polynomial());
}

TEST_CASE("expand_factor at infinity: the worked example") {
    Monomial m = mono({{s1, 1}, {sb, -1}});
    auto s = expand_factor(Monomial::var(kZ), m, -1, -3);
    CHECK(s.coeffs().size() == 3);
    for (int k = 1; k <= 3; ++k) CHECK(s.coefficient(-k, 0) == LaurentPoly::monomial(m.pow(-k), -1));
    CHECK(s.low(0) == -3);
    CHECK(s.low(1) == FormalSeries::kNegInf);
}

TEST_CASE("expand_factor multiplied back gives 1 on its window") {
    Monomial m = mono({{kHbar, 1}, {s1, 1}, {sb, -1}});
    std::vector<Monomial> ts{Monomial::var(kZ), Monomial::var(kZ, -1), Monomial::var(kW), Monomial::var(kW, -1),
                             Monomial::var(kZ) * Monomial::var(kW), Monomial::var(kZ, -1) * Monomial::var(kW, -1)};
    for (const auto& t : ts)
        for (int low : {-1, -4, -8}) {
            auto s = expand_factor(t, m, -1, low);
            auto back = s * FormalSeries::from_poly(LaurentPoly::one_minus(t * m));
            auto cmp = compare(back, FormalSeries::from_poly(LaurentPoly(1)));
            CHECK(cmp.verdict == Verdict::Pass);
            CHECK(agrees(s, RationalFn::binomial(t * m, -1)).verdict == Verdict::Pass);
        }
    CHECK_THROWS_AS(expand_factor(Monomial::var(kZ) * Monomial::var(kW, -1), m, -1, -4), WindowError);
}

TEST_CASE("truncated products are exact on their window") {
    // Oracle: the same product computed from deeper truncations.
    Monomial m1 = mono({{s1, 1}, {sb, -1}}), m2 = mono({{kHbar, 1}, {s1, -1}, {sb, 1}});
    Monomial z = Monomial::var(kZ), w = Monomial::var(kW);
    auto build = [&](int low) {
        return expand_factor(z, m1, -1, low) * expand_factor(w, m2, -1, low) * expand_factor(z * w, m1, -1, low) *
               FormalSeries::from_poly(LaurentPoly::one_minus(z * m2) * LaurentPoly::one_minus(z * w * m1));
    };
    auto shallow = build(-4), deep = build(-12);
    auto cmp = compare(shallow, deep);
    CHECK(cmp.verdict == Verdict::Pass);
    CHECK(cmp.compared_terms > 0);
}

TEST_CASE("comparison on an empty window is inconclusive") {
    Monomial m = mono({{s1, 1}, {sb, -1}});
    auto a = expand_factor(Monomial::var(kZ), m, -1, 0);
    CHECK(a.coeffs().empty());
    CHECK(compare(a, FormalSeries()).verdict == Verdict::Inconclusive);
}

TEST_CASE("iota residuals are the next telescoping term") {
    VarTable t;
    auto sym = register_iota_symbols(t);
    for (bool plus : {true, false})
        for (int n : {0, 1, 3, 6}) {
            LaurentPoly tail = -LaurentPoly::monomial(Monomial::var(sym.p, n + 1) * Monomial::var(sym.q, n + 1));
            CHECK(iota_check(sym, plus, n) == tail);
        }
    // N = 0 by hand: the product is 1 - (1-y)(1-x)^-1.
    LaurentPoly prod0 = iota_truncation(sym, true, 0) * iota_factor(sym, true);
    CHECK(prod0 == LaurentPoly(1) - v(sym.p) * v(sym.q));
}

TEST_CASE("symmetrize: orbit sums and cosets") {
    VarTable t({"1"});
    SymGroupAction g({{kTagA, 0, 3, 0}});
    CHECK(g.order() == 6);
    CHECK(symmetrize(v(s1), g, t) == LaurentPoly(2) * (v(s1) + v(s2) + v(s3)));
    // Cosets of S3 / S1 x S2: three shuffles. p is S1 x S2 invariant.
    LaurentPoly p = v(s1) * (v(s2) + v(s3));
    LaurentPoly orbit = symmetrize(p, g, t);
    LaurentPoly coset = symmetrize(p, g, t, SymMode::Coset, {{1, 2}});
    CHECK(orbit == LaurentPoly(2) * coset);
    CHECK(is_invariant(orbit, g));
    CHECK(g.coset_representatives({{1, 2}}).size() == 3);
    CHECK(g.coset_representatives({{1, 1, 1}}).size() == 6);
    SymGroupAction bad({{kTagA, 4, 1, 0}});
    CHECK_THROWS_AS(symmetrize(p, bad, t), StructuralError);
}

TEST_CASE("symmetrize agrees with brute-force permutations") {
    VarTable t({"1", "2"});
    Var x0 = Var::slot(kTagA, 0, 0), x1 = Var::slot(kTagA, 0, 1), y0 = Var::slot(kTagA, 1, 0), y1 = Var::slot(kTagA, 1, 1);
    std::mt19937 rng(3);
    LaurentPoly p = random_poly(rng, {x0, x1, y0, y1}, 4, 2);
    LaurentPoly oracle;
    std::vector<Var> xs{x0, x1}, ys{y0, y1};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            VarSubstitution s;
            s.rename(x0, xs[a]);
            s.rename(x1, xs[1 - a]);
            s.rename(y0, ys[b]);
            s.rename(y1, ys[1 - b]);
            oracle += p.substitute(s);
        }
    CHECK(symmetrize(p, SymGroupAction({{kTagA, 0, 2, 0}, {kTagA, 1, 2, 0}}), t) == oracle);
}

TEST_CASE("polynomial JSON is canonical and round-trips") {
    VarTable t({"1"});
    t.add_param("a");
    LaurentPoly p = LaurentPoly(2) - v(s1) * v(s2, -1) - v(s2) * v(s1, -1) + LaurentPoly::monomial(mono({{t.parse("a"), 3}}), Integer("123456789012345678901234567890"));
    json j = to_json(p, t);
    CHECK(j[0]["c"] == "123456789012345678901234567890");
    CHECK(poly_from_json(j, t) == p);
    CHECK(to_json(poly_from_json(j, t), t).dump() == j.dump());
    CHECK_THROWS_AS(poly_from_json(json::parse(R"([{"c":"1","e":{"nope":1}}])"), t), StructuralError);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"([{"c":"x1"}])"), t), StructuralError);
}
