#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <memory>

#include "cralg/annihilator.hpp"
#include "cralg/linalg.hpp"
#include "doctest.h"

using namespace cralg;

namespace {

TablePtr params(const std::vector<std::string>& names) {
    auto t = std::make_shared<VariableTable>();
    for (const auto& n : names) t->add(n, VarKind::Parameter);
    return t;
}

// Expected results are fixed up to the kernel normalization, so compare
// modulo a nonzero scalar.
bool same_up_to_scalar(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [ae, ac] = *a.terms().begin();
    GaussianRational bc = b.coeff(ae);
    if (bc.is_zero()) return false;
    return (a * (bc / ac) - b).is_zero();
}

TruncatedSeries geometric(const TablePtr& t, int N) {
    // 1/(1 - t) = 1 + t + t^2 + ...
    TruncatedSeries one = TruncatedSeries::constant(t, GaussianRational(1), N);
    return reciprocal(one - TruncatedSeries::variable(t, 0, N));
}

// sqrt(1 + u) via the binomial series for a polynomial u with u(0) = 0.
TruncatedSeries sqrt_one_plus(const MultiPolynomial& u, int N) {
    TruncatedSeries us(u, N);
    TruncatedSeries acc = TruncatedSeries::constant(u.table(), GaussianRational(1), N);
    TruncatedSeries pow = acc;
    mpq_class c(1);
    for (int k = 1; k <= N; ++k) {
        c *= mpq_class(3 - 2 * k, 2 * k);  // C(1/2,k)/C(1/2,k-1)
        c.canonicalize();
        pow = pow * us;
        acc = acc + pow * GaussianRational(c);
    }
    return acc;
}

TruncatedSeries exponential(const TablePtr& t, int N) {
    MultiPolynomial p(t);
    mpq_class fact(1);
    for (int k = 0; k <= N; ++k) {
        if (k > 0) fact *= k;
        p.add_term(Exponents{k}, GaussianRational(mpq_class(1) / fact));
    }
    return TruncatedSeries(p, N);
}

}  // namespace

TEST_CASE("annihilator of the geometric series") {
    TablePtr t = params({"t"});
    auto ann = find_annihilator(geometric(t, 12), 3, 3);
    REQUIRE(ann.has_value());
    CHECK(ann->q == 1);
    CHECK(ann->k == 1);
    CHECK(ann->certified_order == 12);

    // (1 - t) f - 1 = 0
    const TablePtr& pt = ann->P.table();
    MultiPolynomial expected(pt);
    expected.add_term(Exponents{1, 0}, GaussianRational(1));
    expected.add_term(Exponents{1, 1}, GaussianRational(-1));
    expected.add_term(Exponents{0, 0}, GaussianRational(-1));
    CHECK(same_up_to_scalar(ann->P, expected));

    // Minimality: nothing below (1,1) in the deepening order works.
    CHECK_FALSE(find_annihilator(geometric(t, 12), 1, 0).has_value());
}

TEST_CASE("annihilator of sqrt(1 + t) and kernel uniqueness") {
    TablePtr t = params({"t"});
    TruncatedSeries f = sqrt_one_plus(MultiPolynomial::variable(t, 0), 12);
    CHECK(f.poly().coeff(Exponents{1}) == GaussianRational(1, 2));
    CHECK(f.poly().coeff(Exponents{2}) == GaussianRational(-1, 8));

    auto ann = find_annihilator(f, 3, 3);
    REQUIRE(ann.has_value());
    CHECK(ann->q == 2);
    CHECK(ann->k == 1);

    MultiPolynomial expected(ann->P.table());
    expected.add_term(Exponents{2, 0}, GaussianRational(1));
    expected.add_term(Exponents{0, 1}, GaussianRational(-1));
    expected.add_term(Exponents{0, 0}, GaussianRational(-1));
    CHECK(same_up_to_scalar(ann->P, expected));

    // At the minimal (q,k) = (2,1) the coefficient matrix has a
    // one-dimensional kernel: the annihilator is unique up to scalar.
    std::vector<TruncatedSeries> powers = {
        TruncatedSeries::constant(t, GaussianRational(1), 12), f, f * f};
    QMatrix A(13, 6);
    int col = 0;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 1; ++j, ++col)
            for (int r = 0; r <= 12; ++r)
                A(r, col) = r >= j ? powers[i].poly().coeff(Exponents{r - j})
                                   : GaussianRational(0);
    CHECK(kernel(A).cols() == 1);
}

TEST_CASE("annihilator of f = t") {
    TablePtr t = params({"t"});
    auto ann = find_annihilator(TruncatedSeries::variable(t, 0, 12), 3, 3);
    REQUIRE(ann.has_value());
    MultiPolynomial expected(ann->P.table());
    expected.add_term(Exponents{1, 0}, GaussianRational(1));
    expected.add_term(Exponents{0, 1}, GaussianRational(-1));
    CHECK(same_up_to_scalar(ann->P, expected));
}

TEST_CASE("truncated exponential has no low-degree annihilator") {
    TablePtr t = params({"t"});
    CHECK_FALSE(find_annihilator(exponential(t, 24), 3, 3).has_value());
}

TEST_CASE("order too small for the requested bounds") {
    TablePtr t = params({"t"});
    try {
        find_annihilator(geometric(t, 4), 3, 3);
        FAIL("expected OrderInsufficient");
    } catch (const OrderInsufficient& e) {
        // Largest candidate (3,3) needs 4*4 + 4 coefficients.
        CHECK(e.required_order == 19);
    }
}

TEST_CASE("multivariate annihilator of z1 z2 / (1 - z1 z2)") {
    TablePtr t = params({"z1", "z2"});
    MultiPolynomial g = MultiPolynomial::variable(t, 0) * MultiPolynomial::variable(t, 1);
    TruncatedSeries f = TruncatedSeries(g, 12) *
                        reciprocal(TruncatedSeries::constant(t, GaussianRational(1), 12) -
                                   TruncatedSeries(g, 12));
    auto ann = multivariate_annihilator(f, 3);
    REQUIRE(ann.has_value());
    CHECK(ann->q == 1);
    CHECK(ann->k == 3);

    // (1 - z1 z2) f - z1 z2
    MultiPolynomial expected(ann->P.table());
    expected.add_term(Exponents{1, 0, 0}, GaussianRational(1));
    expected.add_term(Exponents{1, 1, 1}, GaussianRational(-1));
    expected.add_term(Exponents{0, 1, 1}, GaussianRational(-1));
    CHECK(same_up_to_scalar(ann->P, expected));
}

TEST_CASE("multivariate annihilator of a polynomial") {
    TablePtr t = params({"z1", "z2"});
    MultiPolynomial g = MultiPolynomial::variable(t, 1);
    g.add_term(Exponents{2, 0}, GaussianRational(1));
    auto ann = multivariate_annihilator(TruncatedSeries(g, 12), 2);
    REQUIRE(ann.has_value());
    CHECK(ann->k == 2);

    MultiPolynomial expected(ann->P.table());
    expected.add_term(Exponents{1, 0, 0}, GaussianRational(1));
    expected.add_term(Exponents{0, 0, 1}, GaussianRational(-1));
    expected.add_term(Exponents{0, 2, 0}, GaussianRational(-1));
    CHECK(same_up_to_scalar(ann->P, expected));
}

TEST_CASE("multivariate annihilator of sqrt(1 + z1 + z2)") {
    TablePtr t = params({"z1", "z2"});
    MultiPolynomial u = MultiPolynomial::variable(t, 0) + MultiPolynomial::variable(t, 1);
    auto ann = multivariate_annihilator(sqrt_one_plus(u, 12), 2);
    REQUIRE(ann.has_value());
    CHECK(ann->q == 2);
    CHECK(ann->k == 2);

    MultiPolynomial expected(ann->P.table());
    expected.add_term(Exponents{2, 0, 0}, GaussianRational(1));
    expected.add_term(Exponents{0, 0, 0}, GaussianRational(-1));
    expected.add_term(Exponents{0, 1, 0}, GaussianRational(-1));
    expected.add_term(Exponents{0, 0, 1}, GaussianRational(-1));
    CHECK(same_up_to_scalar(ann->P, expected));
}

TEST_CASE("multivariate order check") {
    TablePtr t = params({"z1", "z2"});
    MultiPolynomial g = MultiPolynomial::variable(t, 0) * MultiPolynomial::variable(t, 1);
    try {
        multivariate_annihilator(TruncatedSeries(g, 3), 1);
        FAIL("expected OrderInsufficient");
    } catch (const OrderInsufficient& e) {
        CHECK(e.required_order == 6);
    }
}
