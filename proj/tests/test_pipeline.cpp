#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cralg/pipeline.hpp"
#include "test_util.hpp"

using namespace cralg;

namespace {

MultiPolynomial var(const TablePtr& t, const std::string& n) { return MultiPolynomial::variable(t, n); }

GaussianRational Q(long n, long d = 1) { return GaussianRational(n, d); }

DefiningSystem quadric() {
    auto t = make_zzb_table(2);
    return make_defining_system(2, {var(t, "z2") + var(t, "zb2") + var(t, "z1") * var(t, "zb1")});
}

bool same_up_to_scalar(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [ae, ac] = *a.terms().begin();
    GaussianRational bc = b.coeff(ae);
    if (bc.is_zero()) return false;
    return (a * (bc / ac) - b).is_zero();
}

// Expected annihilator from (exponent, coeff) triples over P's own table.
MultiPolynomial from_terms(const TablePtr& t,
                           const std::vector<std::pair<Exponents, GaussianRational>>& terms) {
    MultiPolynomial p(t);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("extension of the identity map") {
    auto M = quadric();
    std::vector<GaussianRational> p0(2, Q(0));
    CRMapData F = make_polynomial_map(M.table, p0, {var(M.table, "z1"), var(M.table, "z2")});
    auto cert = extend_map(M, PointOnM{p0}, M, F, PipelineOptions{}, 12);

    CHECK(cert.report.pass);
    CHECK(cert.report.membership);
    CHECK(cert.report.levi_cone.nondegenerate);
    CHECK(cert.report.condition_2_5.pass);
    CHECK(cert.report.full_rank.pass);
    CHECK(cert.report.lifted.spans);
    REQUIRE(cert.annihilators.size() == 2);

    // P_1 = F_1 - z1, P_2 = F_2 - z2 up to the pivot scalar.
    CHECK(same_up_to_scalar(cert.annihilators[0],
                            from_terms(cert.annihilators[0].table(),
                                       {{{1, 0, 0}, Q(1)}, {{0, 1, 0}, Q(-1)}})));
    CHECK(same_up_to_scalar(cert.annihilators[1],
                            from_terms(cert.annihilators[1].table(),
                                       {{{1, 0, 0}, Q(1)}, {{0, 0, 1}, Q(-1)}})));

    REQUIRE(cert.variety_checks.size() == 3);
    for (bool ok : cert.variety_checks) CHECK(ok);
    CHECK_FALSE(cert.per_curve.empty());
}

TEST_CASE("extension of the polynomial automorphism") {
    auto M = quadric();
    std::vector<GaussianRational> p0(2, Q(0));
    CRMapData F = make_polynomial_map(
        M.table, p0,
        {var(M.table, "z1") + MultiPolynomial::constant(M.table, Q(1)),
         var(M.table, "z2") - var(M.table, "z1") - MultiPolynomial::constant(M.table, Q(1, 2))});
    auto cert = extend_map(M, PointOnM{p0}, M, F, PipelineOptions{}, 12);

    CHECK(cert.report.pass);
    // P_1 = F_1 - z1 - 1, P_2 = F_2 - z2 + z1 + 1/2.
    CHECK(same_up_to_scalar(
        cert.annihilators[0],
        from_terms(cert.annihilators[0].table(),
                   {{{1, 0, 0}, Q(1)}, {{0, 1, 0}, Q(-1)}, {{0, 0, 0}, Q(-1)}})));
    CHECK(same_up_to_scalar(
        cert.annihilators[1],
        from_terms(cert.annihilators[1].table(), {{{1, 0, 0}, Q(1)},
                                                  {{0, 0, 1}, Q(-1)},
                                                  {{0, 1, 0}, Q(1)},
                                                  {{0, 0, 0}, Q(1, 2)}})));
    for (bool ok : cert.variety_checks) CHECK(ok);
}

TEST_CASE("extension of the rational automorphism at p = (0, i)") {
    auto M = quadric();
    std::vector<GaussianRational> p0 = {Q(0), GaussianRational::i()};
    MultiPolynomial one = MultiPolynomial::constant(M.table, Q(1));
    CRMapData F = make_cr_map(M.table, p0, {var(M.table, "z1"), one},
                              {var(M.table, "z2"), var(M.table, "z2")});
    auto cert = extend_map(M, PointOnM{p0}, M, F, PipelineOptions{}, 12);

    CHECK(cert.report.pass);
    // P_1 = F_1 z2 - z1, P_2 = F_2 z2 - 1.
    CHECK(same_up_to_scalar(cert.annihilators[0],
                            from_terms(cert.annihilators[0].table(),
                                       {{{1, 0, 1}, Q(1)}, {{0, 1, 0}, Q(-1)}})));
    CHECK(same_up_to_scalar(cert.annihilators[1],
                            from_terms(cert.annihilators[1].table(),
                                       {{{1, 0, 1}, Q(1)}, {{0, 0, 0}, Q(-1)}})));
    for (bool ok : cert.variety_checks) CHECK(ok);
}

TEST_CASE("degenerate Levi cone aborts with the named condition") {
    auto t = make_zzb_table(3);
    auto M = make_defining_system(
        3, {var(t, "z2") + var(t, "zb2") + var(t, "z1") * var(t, "zb1"),
            var(t, "z3") + var(t, "zb3")});
    std::vector<GaussianRational> p0(3, Q(0));
    CRMapData F = make_polynomial_map(t, p0, {var(t, "z1"), var(t, "z2"), var(t, "z3")});
    try {
        extend_map(M, PointOnM{p0}, M, F, PipelineOptions{}, 8);
        FAIL("expected HypothesisFailed");
    } catch (const HypothesisFailed& e) {
        CHECK(std::string(e.what()).find("2.3") != std::string::npos);
    }
}

TEST_CASE("hypothesis report without extension") {
    auto M = quadric();
    std::vector<GaussianRational> p0(2, Q(0));
    SUBCASE("identity passes everything") {
        CRMapData F = make_polynomial_map(M.table, p0, {var(M.table, "z1"), var(M.table, "z2")});
        auto rep = hypothesis_report(M, PointOnM{p0}, M, F);
        CHECK(rep.pass);
        CHECK(rep.failed_condition.empty());
    }
    SUBCASE("constant map fails the rank condition") {
        MultiPolynomial zero(M.table);
        CRMapData F = make_polynomial_map(M.table, p0, {zero, zero});
        auto rep = hypothesis_report(M, PointOnM{p0}, M, F);
        CHECK_FALSE(rep.pass);
        CHECK(rep.membership);
        CHECK(rep.failed_condition.find("2.5") != std::string::npos);
    }
    SUBCASE("flat source hyperplane fails the Levi cone") {
        auto t = make_zzb_table(2);
        auto H = make_defining_system(2, {var(t, "z2") + var(t, "zb2")});
        CRMapData F = make_polynomial_map(t, p0, {var(t, "z1"), var(t, "z2")});
        auto rep = hypothesis_report(H, PointOnM{p0}, H, F);
        CHECK_FALSE(rep.pass);
        CHECK(rep.failed_condition.find("2.3") != std::string::npos);
    }
}

TEST_CASE("certificates are deterministic") {
    auto M = quadric();
    std::vector<GaussianRational> p0(2, Q(0));
    CRMapData F = make_polynomial_map(M.table, p0, {var(M.table, "z1"), var(M.table, "z2")});
    auto a = extend_map(M, PointOnM{p0}, M, F, PipelineOptions{}, 10);
    auto b = extend_map(M, PointOnM{p0}, M, F, PipelineOptions{}, 10);
    REQUIRE(a.annihilators.size() == b.annihilators.size());
    for (size_t i = 0; i < a.annihilators.size(); ++i)
        CHECK(a.annihilators[i] == b.annihilators[i]);
    CHECK(a.per_curve.size() == b.per_curve.size());
    for (size_t i = 0; i < a.per_curve.size(); ++i)
        CHECK(a.per_curve[i].ann.P == b.per_curve[i].ann.P);
}
