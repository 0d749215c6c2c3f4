#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cralg/polynomial.hpp"
#include "test_util.hpp"

using namespace cralg;

namespace {

TablePtr quadric_table() { return make_zzb_table(2); }

// rho0 = z2 + zb2 + z1*zb1, the model hyperquadric.
MultiPolynomial rho0(const TablePtr& t) {
    MultiPolynomial p = MultiPolynomial::variable(t, "z2");
    p += MultiPolynomial::variable(t, "zb2");
    p += MultiPolynomial::variable(t, "z1") * MultiPolynomial::variable(t, "zb1");
    return p;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic and round trip") {
    GaussianRational a(mpq_class(1, 2), mpq_class(-3, 4));
    CHECK(a.str() == "1/2-3/4*i");
    CHECK(GaussianRational::parse(a.str()) == a);
    CHECK(GaussianRational::parse("1/2") == GaussianRational(1, 2));
    CHECK(GaussianRational::parse("-3/4*i") == GaussianRational(mpq_class(0), mpq_class(-3, 4)));
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK((a / a).is_one());
    CHECK((a * a.inverse()).is_one());
}

TEST_CASE("conjugate_swap fixes real polynomials") {
    auto t = quadric_table();
    CHECK(rho0(t).conjugate_swap() == rho0(t));
}

TEST_CASE("conjugate_swap of i*z1 is -i*zb1") {
    auto t = quadric_table();
    MultiPolynomial p = MultiPolynomial::variable(t, "z1") * GaussianRational::i();
    MultiPolynomial expect = MultiPolynomial::variable(t, "zb1") * (-GaussianRational::i());
    CHECK(p.conjugate_swap() == expect);
}

TEST_CASE("conjugate_swap swaps exponents") {
    auto t = quadric_table();
    MultiPolynomial p = MultiPolynomial::variable(t, "z1", 2) * MultiPolynomial::variable(t, "zb2");
    MultiPolynomial expect = MultiPolynomial::variable(t, "zb1", 2) * MultiPolynomial::variable(t, "z2");
    CHECK(p.conjugate_swap() == expect);
}

TEST_CASE("conjugate_swap without partner is an error") {
    auto vt = std::make_shared<VariableTable>();
    vt->add("z1", VarKind::Holomorphic);
    TablePtr t = vt;
    MultiPolynomial p = MultiPolynomial::variable(t, "z1");
    CHECK_THROWS_AS(p.conjugate_swap(), MalformedTableError);
}

TEST_CASE("conjugate_swap is involutive on random polynomials") {
    auto t = make_zzb_table(3);
    std::mt19937 rng(7);
    for (int k = 0; k < 25; ++k) {
        MultiPolynomial p = testutil::random_polynomial(t, rng);
        CHECK(p.conjugate_swap().conjugate_swap() == p);
    }
}

TEST_CASE("partial derivatives") {
    auto t = quadric_table();
    MultiPolynomial p = MultiPolynomial::variable(t, "z1", 2) * MultiPolynomial::variable(t, "zb2");
    MultiPolynomial expect =
        GaussianRational(2) * MultiPolynomial::variable(t, "z1") * MultiPolynomial::variable(t, "zb2");
    CHECK(p.derivative("z1") == expect);
    CHECK(rho0(t).derivative("zb1") == MultiPolynomial::variable(t, "z1"));
    auto t3 = make_zzb_table(3);
    MultiPolynomial q = MultiPolynomial::variable(t3, "z1") * MultiPolynomial::variable(t3, "z2");
    CHECK(q.derivative("z3").is_zero());
}

TEST_CASE("exact arithmetic: (a+b)-b == a") {
    auto t = make_zzb_table(2);
    std::mt19937 rng(11);
    for (int k = 0; k < 25; ++k) {
        MultiPolynomial a = testutil::random_polynomial(t, rng);
        MultiPolynomial b = testutil::random_polynomial(t, rng);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("evaluate") {
    auto t = quadric_table();
    SUBCASE("point on the model quadric") {
        std::vector<GaussianRational> pt = {GaussianRational(1), GaussianRational(-1, 2),
                                            GaussianRational(1), GaussianRational(-1, 2)};
        CHECK(rho0(t).evaluate(pt).is_zero());
    }
    SUBCASE("plain product") {
        MultiPolynomial p = MultiPolynomial::variable(t, "z1") * MultiPolynomial::variable(t, "z2");
        std::vector<GaussianRational> pt = {GaussianRational(2), GaussianRational(3),
                                            GaussianRational(0), GaussianRational(0)};
        CHECK(p.evaluate(pt) == GaussianRational(6));
    }
    SUBCASE("i*z1 at z1=i") {
        MultiPolynomial p = MultiPolynomial::variable(t, "z1") * GaussianRational::i();
        CHECK(p.evaluate(std::map<int, GaussianRational>{{t->index_of("z1"), GaussianRational::i()}}) == GaussianRational(-1));
    }
    SUBCASE("unassigned variable") {
        MultiPolynomial p = MultiPolynomial::variable(t, "z1") * MultiPolynomial::variable(t, "z2");
        CHECK_THROWS_AS(p.evaluate(std::map<int, GaussianRational>{{t->index_of("z1"), GaussianRational(1)}}), EvaluationError);
    }
}

TEST_CASE("series composition examples") {
    auto ts = std::make_shared<VariableTable>();
    ts->add("t", VarKind::Parameter);
    TablePtr tt = ts;
    auto us = std::make_shared<VariableTable>();
    us->add("u", VarKind::Parameter);
    TablePtr ut = us;

    SUBCASE("1 + t + t^2 with t -> 2u") {
        MultiPolynomial f(tt);
        f += MultiPolynomial::constant(tt, GaussianRational(1));
        f += MultiPolynomial::variable(tt, "t");
        f += MultiPolynomial::variable(tt, "t", 2);
        TruncatedSeries img =
            TruncatedSeries(MultiPolynomial::variable(ut, "u") * GaussianRational(2), 2);
        TruncatedSeries r = compose(TruncatedSeries(f, 2), ut, {img});
        MultiPolynomial expect(ut);
        expect += MultiPolynomial::constant(ut, GaussianRational(1));
        expect += MultiPolynomial::variable(ut, "u") * GaussianRational(2);
        expect += MultiPolynomial::variable(ut, "u", 2) * GaussianRational(4);
        CHECK(r.poly() == expect);
    }
    SUBCASE("t^2 with t -> u + u^2 at order 3") {
        MultiPolynomial f = MultiPolynomial::variable(tt, "t", 2);
        MultiPolynomial u1 = MultiPolynomial::variable(ut, "u");
        TruncatedSeries img = TruncatedSeries(u1 + MultiPolynomial::variable(ut, "u", 2), 3);
        TruncatedSeries r = compose(TruncatedSeries(f, 3), ut, {img});
        MultiPolynomial expect = MultiPolynomial::variable(ut, "u", 2) +
                                 GaussianRational(2) * MultiPolynomial::variable(ut, "u", 3);
        CHECK(r.poly() == expect);
    }
    SUBCASE("geometric series with t -> u^2") {
        // 1/(1-t) at order 3, then t -> u^2: 1 + u^2 (u^4 beyond order).
        MultiPolynomial f(tt);
        for (int k = 0; k <= 3; ++k) f += MultiPolynomial::variable(tt, "t", k);
        TruncatedSeries img = TruncatedSeries(MultiPolynomial::variable(ut, "u", 2), 3);
        TruncatedSeries r = compose(TruncatedSeries(f, 3), ut, {img});
        MultiPolynomial expect =
            MultiPolynomial::constant(ut, GaussianRational(1)) + MultiPolynomial::variable(ut, "u", 2);
        CHECK(r.poly() == expect);
    }
    SUBCASE("nonzero constant term rejected") {
        MultiPolynomial f = MultiPolynomial::variable(tt, "t", 2);
        TruncatedSeries img = TruncatedSeries(
            MultiPolynomial::constant(ut, GaussianRational(1)) + MultiPolynomial::variable(ut, "u"), 3);
        CHECK_THROWS_AS(compose(TruncatedSeries(f, 3), ut, {img}), CompositionError);
    }
}

TEST_CASE("series composition associativity up to truncation") {
    auto mk1 = [](const char* n) {
        auto v = std::make_shared<VariableTable>();
        v->add(n, VarKind::Parameter);
        return TablePtr(v);
    };
    TablePtr tt = mk1("t"), ut = mk1("u"), vt = mk1("v");
    std::mt19937 rng(23);
    for (int k = 0; k < 10; ++k) {
        const int N = 8;
        MultiPolynomial f = testutil::random_polynomial(tt, rng, 4, 5);
        MultiPolynomial gp = testutil::random_polynomial(ut, rng, 4, 5);
        MultiPolynomial hp = testutil::random_polynomial(vt, rng, 4, 5);
        // Force zero constant terms on the inner series.
        gp -= MultiPolynomial::constant(ut, gp.constant_term());
        hp -= MultiPolynomial::constant(vt, hp.constant_term());
        TruncatedSeries g(gp, N), h(hp, N);
        TruncatedSeries lhs = compose(compose(TruncatedSeries(f, N), ut, {g}), vt, {h});
        TruncatedSeries rhs = compose(TruncatedSeries(f, N), vt, {compose(g, vt, {h})});
        CHECK(lhs.poly() == rhs.poly());
    }
}

TEST_CASE("reciprocal of a unit series") {
    auto ts = std::make_shared<VariableTable>();
    ts->add("t", VarKind::Parameter);
    TablePtr tt = ts;
    MultiPolynomial u =
        MultiPolynomial::constant(tt, GaussianRational(1)) - MultiPolynomial::variable(tt, "t");
    TruncatedSeries r = reciprocal(TruncatedSeries(u, 6));
    MultiPolynomial expect(tt);
    for (int k = 0; k <= 6; ++k) expect += MultiPolynomial::variable(tt, "t", k);
    CHECK(r.poly() == expect);
    CHECK((r * TruncatedSeries(u, 6)).poly() ==
          MultiPolynomial::constant(tt, GaussianRational(1)));
}
