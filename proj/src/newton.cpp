#include "cralg/newton.hpp"

#include <algorithm>

namespace cralg {

std::vector<TruncatedSeries> solve_series_linear(std::vector<std::vector<TruncatedSeries>> M,
                                                 std::vector<TruncatedSeries> rhs) {
    const size_t n = M.size();
    if (rhs.size() != n) throw ImplicitSolveError("solve_series_linear: size mismatch");
    for (auto& row : M)
        if (row.size() != n) throw ImplicitSolveError("solve_series_linear: matrix not square");

    // Forward elimination with unit pivots.
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && M[p][c].constant_term().is_zero()) ++p;
        if (p == n) throw ImplicitSolveError("solve_series_linear: no unit pivot");
        std::swap(M[p], M[c]);
        std::swap(rhs[p], rhs[c]);
        TruncatedSeries inv = reciprocal(M[c][c]);
        for (size_t j = c; j < n; ++j) M[c][j] = M[c][j] * inv;
        rhs[c] = rhs[c] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || M[i][c].is_zero()) continue;
            TruncatedSeries f = M[i][c];
            for (size_t j = c; j < n; ++j) M[i][j] = M[i][j] - f * M[c][j];
            rhs[i] = rhs[i] - f * rhs[c];
        }
    }
    return rhs;
}

std::vector<TruncatedSeries> newton_implicit_solve(const std::vector<MultiPolynomial>& G,
                                                   const std::vector<int>& v,
                                                   const std::vector<int>& w, int N) {
    const size_t d = G.size();
    if (d == 0 || w.size() != d)
        throw ImplicitSolveError("newton_implicit_solve: need as many unknowns as equations");
    const TablePtr tbl = G[0].table();
    for (const auto& g : G)
        if (!same_table(g.table(), tbl))
            throw TableMismatchError("newton_implicit_solve: mixed tables");

    for (const auto& g : G)
        if (!g.constant_term().is_zero())
            throw BasepointError("newton_implicit_solve: G(0,0) != 0");

    // Jacobian dG/dw at the origin must be invertible over Q(i).
    QMatrix J0(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (size_t l = 0; l < d; ++l)
        for (size_t s = 0; s < d; ++s)
            J0(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(s)) =
                G[l].derivative(w[s]).constant_term();
    try {
        (void)inverse(J0);
    } catch (const ImplicitSolveError&) {
        throw ImplicitSolveError("newton_implicit_solve: singular Jacobian at the origin");
    }

    std::vector<std::vector<MultiPolynomial>> Jpoly(d);
    for (size_t l = 0; l < d; ++l)
        for (size_t s = 0; s < d; ++s) Jpoly[l].push_back(G[l].derivative(w[s]));

    auto images_at = [&](const std::vector<TruncatedSeries>& wcur, int order) {
        std::vector<TruncatedSeries> images;
        images.reserve(tbl->size());
        std::vector<int> wslot(tbl->size(), -1);
        for (size_t s = 0; s < d; ++s) wslot[w[s]] = static_cast<int>(s);
        for (int i = 0; i < tbl->size(); ++i) {
            if (wslot[i] >= 0)
                images.push_back(wcur[wslot[i]].with_order(order));
            else
                images.push_back(TruncatedSeries::variable(tbl, i, order));
        }
        return images;
    };

    // Newton with order doubling: wcur is correct modulo total degree `good`,
    // and each step at least doubles `good`.
    std::vector<TruncatedSeries> wcur(d, TruncatedSeries::zero(tbl, N));
    int good = 1;
    while (good < N + 1) {
        int target = std::min(2 * good - 1, N);
        auto images = images_at(wcur, target);
        std::vector<TruncatedSeries> rhs;
        std::vector<std::vector<TruncatedSeries>> M(d);
        for (size_t l = 0; l < d; ++l) {
            rhs.push_back(substitute(G[l], tbl, images, target));
            for (size_t s = 0; s < d; ++s)
                M[l].push_back(substitute(Jpoly[l][s], tbl, images, target));
        }
        std::vector<TruncatedSeries> delta = solve_series_linear(std::move(M), std::move(rhs));
        for (size_t s = 0; s < d; ++s)
            wcur[s] = (wcur[s].with_order(target) - delta[s]).with_order(target);
        good = std::min(2 * good, N + 1);
    }
    for (size_t s = 0; s < d; ++s) wcur[s] = wcur[s].with_order(N);

    // Exact residual check at the working order.
    auto images = images_at(wcur, N);
    for (size_t l = 0; l < d; ++l) {
        if (!substitute(G[l], tbl, images, N).is_zero())
            throw ImplicitSolveError("newton_implicit_solve: nonzero residual (iteration did not close)");
    }
    return wcur;
}

}  // namespace cralg
