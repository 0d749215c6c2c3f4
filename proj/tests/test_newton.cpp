#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cralg/newton.hpp"
#include "test_util.hpp"

using namespace cralg;

namespace {

TablePtr vw_table(int nv, int nw) {
    auto t = std::make_shared<VariableTable>();
    for (int i = 1; i <= nv; ++i) t->add("v" + std::to_string(i), VarKind::Parameter);
    for (int i = 1; i <= nw; ++i) t->add("w" + std::to_string(i), VarKind::Parameter);
    return t;
}

}  // namespace

TEST_CASE("linear implicit solve: w + v = 0") {
    auto t = vw_table(1, 1);
    MultiPolynomial G = MultiPolynomial::variable(t, "w1") + MultiPolynomial::variable(t, "v1");
    auto sol = newton_implicit_solve({G}, {0}, {1}, 6);
    CHECK(sol[0].poly() == -MultiPolynomial::variable(t, "v1"));
}

TEST_CASE("w - v - w^2 = 0 to order 4") {
    auto t = vw_table(1, 1);
    MultiPolynomial w = MultiPolynomial::variable(t, "w1");
    MultiPolynomial v = MultiPolynomial::variable(t, "v1");
    MultiPolynomial G = w - v - w * w;
    auto sol = newton_implicit_solve({G}, {0}, {1}, 4);
    // Catalan numbers: v + v^2 + 2 v^3 + 5 v^4.
    MultiPolynomial expect = v + v.pow(2) + GaussianRational(2) * v.pow(3) +
                             GaussianRational(5) * v.pow(4);
    CHECK(sol[0].poly() == expect);
}

TEST_CASE("w - v1 - v2*w = 0 equals v1/(1-v2)") {
    auto t = vw_table(2, 1);
    MultiPolynomial w = MultiPolynomial::variable(t, "w1");
    MultiPolynomial v1 = MultiPolynomial::variable(t, "v1");
    MultiPolynomial v2 = MultiPolynomial::variable(t, "v2");
    MultiPolynomial G = w - v1 - v2 * w;
    auto sol = newton_implicit_solve({G}, {0, 1}, {2}, 3);
    MultiPolynomial expect = v1 + v1 * v2 + v1 * v2.pow(2);
    CHECK(sol[0].poly() == expect);
}

TEST_CASE("error paths") {
    auto t = vw_table(1, 1);
    MultiPolynomial w = MultiPolynomial::variable(t, "w1");
    MultiPolynomial v = MultiPolynomial::variable(t, "v1");
    SUBCASE("nonzero basepoint") {
        MultiPolynomial G = w + v + MultiPolynomial::constant(t, GaussianRational(1));
        CHECK_THROWS_AS(newton_implicit_solve({G}, {0}, {1}, 4), BasepointError);
    }
    SUBCASE("singular Jacobian") {
        MultiPolynomial G = w * w + v;
        CHECK_THROWS_AS(newton_implicit_solve({G}, {0}, {1}, 4), ImplicitSolveError);
    }
}

TEST_CASE("random implicit systems have exactly zero residual") {
    // d <= 2, degree <= 3, invertible linear part in w, order 16.
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 1 + (trial % 2);
        auto t = vw_table(2, d);
        std::vector<int> v = {0, 1};
        std::vector<int> w;
        for (int s = 0; s < d; ++s) w.push_back(2 + s);
        std::vector<MultiPolynomial> G;
        for (int l = 0; l < d; ++l) {
            MultiPolynomial g = testutil::random_polynomial(t, rng, 3, 6);
            g -= MultiPolynomial::constant(t, g.constant_term());
            // Remove the random linear part in w, then force the identity there.
            for (int s = 0; s < d; ++s) {
                Exponents e(t->size(), 0);
                e[w[s]] = 1;
                g.add_term(e, -g.coeff(e));
            }
            Exponents e(t->size(), 0);
            e[w[l]] = 1;
            g.add_term(e, GaussianRational(1));
            G.push_back(g);
        }
        auto sol = newton_implicit_solve(G, v, w, 16);
        // newton_implicit_solve re-verifies the residual internally; check the
        // solution basepoint here as an independent condition.
        for (const auto& s : sol) CHECK(s.constant_term().is_zero());
    }
}
