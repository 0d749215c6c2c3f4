#include "cralg/annihilator.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>

namespace cralg {

namespace {

TablePtr annihilator_table(const TablePtr& series_table) {
    auto t = std::make_shared<VariableTable>();
    t->add("f", VarKind::Parameter);
    for (int i = 0; i < series_table->size(); ++i)
        t->add(series_table->name(i), VarKind::Parameter);
    return t;
}

// Residual re-verification: P(f(t), t) modulo the certified order.
bool verifies(const MultiPolynomial& P, const TruncatedSeries& f) {
    const TablePtr& st = f.table();
    std::vector<TruncatedSeries> images;
    images.push_back(f);
    for (int i = 0; i < st->size(); ++i)
        images.push_back(TruncatedSeries::variable(st, i, f.order()));
    return substitute(P, st, images, f.order()).is_zero();
}

MultiPolynomial normalized_pivot(MultiPolynomial P) {
    GaussianRational pivot = P.terms().begin()->second;
    return P * pivot.inverse();
}

}  // namespace

std::optional<Annihilator> find_annihilator(const TruncatedSeries& f, int qmax, int kmax,
                                            int margin) {
    const TablePtr& st = f.table();
    if (st->size() != 1)
        throw MalformedTableError("find_annihilator: series must be univariate");
    if (qmax < 1 || kmax < 0)
        throw MalformedTableError("find_annihilator: need qmax >= 1 and kmax >= 0");
    const int N = f.order();

    std::vector<TruncatedSeries> powers;
    powers.push_back(TruncatedSeries::constant(st, GaussianRational(1), N));
    for (int i = 1; i <= qmax; ++i) powers.push_back(powers.back() * f);

    TablePtr pt = annihilator_table(st);
    int missing_order = -1;

    for (int s = 1; s <= qmax + kmax; ++s) {
        for (int q = 1; q <= std::min(s, qmax); ++q) {
            int k = s - q;
            if (k > kmax) continue;
            int required = (q + 1) * (k + 1) + margin - 1;
            if (N < required) {
                missing_order = std::max(missing_order, required);
                continue;
            }
            QMatrix A(N + 1, (q + 1) * (k + 1));
            int col = 0;
            for (int i = 0; i <= q; ++i) {
                for (int j = 0; j <= k; ++j, ++col) {
                    for (int r = 0; r <= N; ++r) {
                        GaussianRational c(0);
                        if (r >= j) c = powers[i].poly().coeff(Exponents{r - j});
                        A(r, col) = c;
                    }
                }
            }
            QMatrix K = kernel(A);
            if (K.cols() == 0) continue;

            MultiPolynomial P(pt);
            col = 0;
            for (int i = 0; i <= q; ++i)
                for (int j = 0; j <= k; ++j, ++col) P.add_term(Exponents{i, j}, K(col, 0));
            P = normalized_pivot(P);
            if (!verifies(P, f))
                throw Error("find_annihilator: kernel vector failed re-verification");
            return Annihilator{P, q, k, N};
        }
    }
    if (missing_order >= 0)
        throw OrderInsufficient("find_annihilator: series order " + std::to_string(N) +
                                    " is below the required " + std::to_string(missing_order),
                                missing_order);
    return std::nullopt;
}

std::optional<Annihilator> multivariate_annihilator(const TruncatedSeries& f, int D,
                                                    int margin) {
    const TablePtr& st = f.table();
    const int m = st->size();
    if (m < 1) throw MalformedTableError("multivariate_annihilator: empty variable table");
    if (D < 1) throw MalformedTableError("multivariate_annihilator: need D >= 1");
    const int N = f.order();

    std::vector<TruncatedSeries> powers;
    powers.push_back(TruncatedSeries::constant(st, GaussianRational(1), N));
    for (int i = 1; i <= D; ++i) powers.push_back(powers.back() * f);

    TablePtr pt = annihilator_table(st);

    // All v-exponent vectors of total degree <= bound, graded-lex ascending.
    auto v_monomials = [&](int bound) {
        std::vector<Exponents> out;
        Exponents cur(m, 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == m) {
                out.push_back(cur);
                return;
            }
            for (int e = 0; e <= left; ++e) {
                cur[pos] = e;
                self(self, pos + 1, left - e);
            }
            cur[pos] = 0;
        };
        rec(rec, 0, bound);
        std::sort(out.begin(), out.end(), GradedLexLess{});
        return out;
    };

    for (int d = 1; d <= D; ++d) {
        int required = 2 * d + margin;
        if (N < required)
            throw OrderInsufficient("multivariate_annihilator: series order " +
                                        std::to_string(N) + " is below the required " +
                                        std::to_string(required),
                                    required);

        // Columns: f^i v^alpha with i + |alpha| <= d.
        std::vector<std::pair<int, Exponents>> cols;
        for (int i = 0; i <= d; ++i)
            for (const auto& alpha : v_monomials(d - i)) cols.emplace_back(i, alpha);

        // Row index per v-monomial of the expansions.
        std::map<Exponents, int, GradedLexLess> rows;
        std::vector<MultiPolynomial> expansions;
        for (const auto& [i, alpha] : cols) {
            MultiPolynomial mono(st);
            mono.add_term(alpha, GaussianRational(1));
            MultiPolynomial e = (powers[i].poly() * mono).truncated(N);
            for (const auto& [exps, c] : e.terms())
                if (!rows.count(exps)) rows[exps] = static_cast<int>(rows.size());
            expansions.push_back(std::move(e));
        }

        QMatrix A(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
        A.setConstant(GaussianRational(0));
        for (size_t c = 0; c < cols.size(); ++c)
            for (const auto& [exps, coeff] : expansions[c].terms())
                A(rows.at(exps), static_cast<Eigen::Index>(c)) = coeff;

        QMatrix K = kernel(A);
        if (K.cols() == 0) continue;

        MultiPolynomial P(pt);
        for (size_t c = 0; c < cols.size(); ++c) {
            Exponents e(m + 1, 0);
            e[0] = cols[c].first;
            for (int j = 0; j < m; ++j) e[j + 1] = cols[c].second[j];
            if (!K(static_cast<Eigen::Index>(c), 0).is_zero())
                P.add_term(e, K(static_cast<Eigen::Index>(c), 0));
        }
        P = normalized_pivot(P);
        if (!verifies(P, f))
            throw Error("multivariate_annihilator: kernel vector failed re-verification");
        return Annihilator{P, P.max_exponent(0), d, N};
    }
    return std::nullopt;
}

}  // namespace cralg
