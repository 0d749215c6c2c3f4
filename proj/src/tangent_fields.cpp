#include "cralg/tangent_fields.hpp"

#include "cralg/newton.hpp"

namespace cralg {

namespace {

// Exact polynomial division, used only where divisibility is guaranteed
// (Bareiss pivots).  Repeatedly cancels the graded-lex leading term.
MultiPolynomial divide_exact(MultiPolynomial p, const MultiPolynomial& den) {
    if (den.is_zero()) throw NormalizationError("divide_exact: zero divisor");
    MultiPolynomial q(p.table());
    const auto& dlead = *den.terms().rbegin();
    while (!p.is_zero()) {
        const auto& plead = *p.terms().rbegin();
        Exponents e(plead.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = plead.first[i] - dlead.first[i];
            if (e[i] < 0) throw NormalizationError("divide_exact: inexact division");
        }
        MultiPolynomial t(p.table());
        t.add_term(e, plead.second / dlead.second);
        q += t;
        p -= t * den;
    }
    return q;
}

using PolyMatrix = std::vector<std::vector<MultiPolynomial>>;

// Fraction-free determinant: direct cofactor expansion for m <= 3, Bareiss
// elimination with exact divisions beyond.
MultiPolynomial poly_determinant(PolyMatrix A) {
    const int m = static_cast<int>(A.size());
    const TablePtr& t = A[0][0].table();
    if (m == 1) return A[0][0];
    if (m == 2) return A[0][0] * A[1][1] - A[0][1] * A[1][0];
    if (m == 3)
        return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
               A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
               A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);

    MultiPolynomial prev = MultiPolynomial::constant(t, GaussianRational(1));
    bool negate = false;
    for (int s = 0; s < m - 1; ++s) {
        if (A[s][s].is_zero()) {
            int r = s + 1;
            while (r < m && A[r][s].is_zero()) ++r;
            if (r == m) return MultiPolynomial(t);
            std::swap(A[s], A[r]);
            negate = !negate;
        }
        for (int i = s + 1; i < m; ++i)
            for (int j = s + 1; j < m; ++j)
                A[i][j] = divide_exact(A[s][s] * A[i][j] - A[i][s] * A[s][j], prev);
        prev = A[s][s];
    }
    return negate ? -A[m - 1][m - 1] : A[m - 1][m - 1];
}

// adj(A)[j][s] = (-1)^{j+s} * det(A with row s and column j removed).
PolyMatrix poly_adjugate(const PolyMatrix& A) {
    const int m = static_cast<int>(A.size());
    const TablePtr& t = A[0][0].table();
    PolyMatrix adj(m, std::vector<MultiPolynomial>(m, MultiPolynomial(t)));
    if (m == 1) {
        adj[0][0] = MultiPolynomial::constant(t, GaussianRational(1));
        return adj;
    }
    for (int j = 0; j < m; ++j) {
        for (int s = 0; s < m; ++s) {
            PolyMatrix minor(m - 1, std::vector<MultiPolynomial>(m - 1, MultiPolynomial(t)));
            for (int r = 0, ri = 0; r < m; ++r) {
                if (r == s) continue;
                for (int c = 0, ci = 0; c < m; ++c) {
                    if (c == j) continue;
                    minor[ri][ci] = A[r][c];
                    ++ci;
                }
                ++ri;
            }
            MultiPolynomial cof = poly_determinant(std::move(minor));
            adj[j][s] = ((j + s) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

}  // namespace

std::vector<TangentOperator> tangent_operators(const DefiningSystem& M) {
    if (!is_normalized(M))
        throw NormalizationError("tangent_operators: system is not in normal form");
    const int n = M.n, d = M.d, k = M.cr_dim();
    const TablePtr& t = M.table;

    // Matrix of holomorphic y-derivatives: row s, column j.
    PolyMatrix Y(d, std::vector<MultiPolynomial>(d, MultiPolynomial(t)));
    for (int s = 0; s < d; ++s)
        for (int j = 0; j < d; ++j) Y[s][j] = M.rho[s].derivative(k + j);

    MultiPolynomial delta = poly_determinant(Y);
    if (!delta.constant_term().is_one())
        throw NormalizationError("tangent_operators: Delta(0) != 1");
    PolyMatrix adj = poly_adjugate(Y);

    std::vector<TangentOperator> ops;
    ops.reserve(k);
    for (int q = 0; q < k; ++q) {
        TangentOperator T{q + 1, n, k, delta, {}};
        for (int j = 0; j < d; ++j) {
            MultiPolynomial a(t);
            for (int s = 0; s < d; ++s) a += adj[j][s] * M.rho[s].derivative(q);
            if (!a.constant_term().is_zero())
                throw NormalizationError("tangent_operators: a_jq(0) != 0");
            T.coeffs.push_back(std::move(a));
        }
        ops.push_back(std::move(T));
    }
    return ops;
}

MultiPolynomial apply_operator(const TangentOperator& T, const MultiPolynomial& h,
                               bool conjugated) {
    if (!same_table(h.table(), T.delta.table()))
        throw TableMismatchError("apply_operator: table mismatch");
    const int shift = conjugated ? T.n : 0;
    MultiPolynomial delta = conjugated ? T.delta.conjugate_swap() : T.delta;
    MultiPolynomial out = delta * h.derivative(shift + T.q - 1);
    for (size_t j = 0; j < T.coeffs.size(); ++j) {
        MultiPolynomial a = conjugated ? T.coeffs[j].conjugate_swap() : T.coeffs[j];
        out -= a * h.derivative(shift + T.k + static_cast<int>(j));
    }
    return out;
}

TruncatedSeries apply_operator(const TangentOperator& T, const TruncatedSeries& h,
                               bool conjugated) {
    int order = h.order() > 0 ? h.order() - 1 : 0;
    return TruncatedSeries(apply_operator(T, h.poly(), conjugated), order);
}

bool cr_function_test(const DefiningSystem& M, const MultiPolynomial& h, int order) {
    if (!same_table(h.table(), M.table))
        throw TableMismatchError("cr_function_test: table mismatch");
    const int n = M.n, k = M.cr_dim();

    // Complexified graph: solve rho(x, y, chi) = 0 for y with x and all
    // conjugate variables chi free.
    std::vector<int> free_vars, unknowns;
    for (int i = 0; i < k; ++i) free_vars.push_back(i);
    for (int i = n; i < 2 * n; ++i) free_vars.push_back(i);
    for (int i = k; i < n; ++i) unknowns.push_back(i);
    std::vector<TruncatedSeries> graph = newton_implicit_solve(M.rho, free_vars, unknowns, order);

    std::vector<TruncatedSeries> images;
    images.reserve(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        if (i >= k && i < n)
            images.push_back(graph[i - k]);
        else
            images.push_back(TruncatedSeries::variable(M.table, i, order));
    }

    for (const TangentOperator& T : tangent_operators(M)) {
        MultiPolynomial g = apply_operator(T, h, true);
        if (!substitute(g, M.table, images, order).is_zero()) return false;
    }
    return true;
}

}  // namespace cralg
