#include "cralg/flows.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "cralg/newton.hpp"

namespace cralg {

namespace {

TablePtr parameter_table(const std::vector<std::string>& names) {
    auto t = std::make_shared<VariableTable>();
    for (const auto& n : names) t->add(n, VarKind::Parameter);
    return t;
}

std::vector<std::string> tc_names(int n) {
    std::vector<std::string> names = {"t"};
    for (int c = 1; c < n; ++c) names.push_back("c" + std::to_string(c));
    return names;
}

}  // namespace

std::vector<CurveFamily> coordinate_line_families(int n, int N) {
    std::vector<CurveFamily> out;
    for (int m = 0; m < n; ++m) {
        CurveFamily cf;
        cf.m = m + 1;
        cf.direction = m + 1;
        cf.params = parameter_table(tc_names(n));
        int cpos = 1;
        for (int i = 0; i < n; ++i) {
            if (i == m)
                cf.z.push_back(TruncatedSeries::variable(cf.params, 0, N));
            else
                cf.z.push_back(TruncatedSeries::variable(cf.params, cpos++, N));
        }
        cf.base.assign(n, GaussianRational(0));
        cf.tangent = QVector(n);
        cf.tangent.setConstant(GaussianRational(0));
        cf.tangent(m) = GaussianRational(1);
        out.push_back(std::move(cf));
    }
    return out;
}

FamilyFlow family_flow(const CurveFamily& fam, int N) {
    const int n = static_cast<int>(fam.z.size());
    for (const auto& b : fam.base)
        if (!b.is_zero())
            throw HypothesisFailed("family_flow: family must be based at the origin");

    // Combined alphabet (z1..zn, t, c1..c_{n-1}) to invert (t, c) -> z.
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
    for (const auto& s : tc_names(n)) names.push_back(s);
    TablePtr comb = parameter_table(names);

    std::vector<MultiPolynomial> param_images;
    for (int i = 0; i < n; ++i)
        param_images.push_back(MultiPolynomial::variable(comb, n + i));
    std::vector<MultiPolynomial> G;
    for (int i = 0; i < n; ++i)
        G.push_back(substitute(fam.z[i].poly(), comb, param_images) -
                    MultiPolynomial::variable(comb, i));

    std::vector<int> zv, tv;
    for (int i = 0; i < n; ++i) zv.push_back(i);
    for (int i = n; i < 2 * n; ++i) tv.push_back(i);
    auto tc = newton_implicit_solve(G, zv, tv, N);  // (t(z), c(z))

    // Output alphabet (tau, z1..zn).
    std::vector<std::string> onames = {"tau"};
    for (int i = 1; i <= n; ++i) onames.push_back("z" + std::to_string(i));
    TablePtr out = parameter_table(onames);

    std::vector<TruncatedSeries> lift;
    {
        std::vector<TruncatedSeries> imgs;
        for (int i = 0; i < n; ++i) imgs.push_back(TruncatedSeries::variable(out, 1 + i, N));
        for (int i = 0; i < n; ++i) imgs.push_back(TruncatedSeries::zero(out, N));
        for (int i = 0; i < n; ++i) lift.push_back(substitute(tc[i].poly(), out, imgs, N));
    }

    // phi(tau)(z) = Z(t(z) + tau, c(z)).
    std::vector<TruncatedSeries> imgs;
    imgs.push_back(lift[0] + TruncatedSeries::variable(out, 0, N));
    for (int i = 1; i < n; ++i) imgs.push_back(lift[i]);

    FamilyFlow flow;
    flow.table = out;
    for (int i = 0; i < n; ++i) flow.map.push_back(compose(fam.z[i], out, imgs));
    return flow;
}

FlowChart curvilinear_chart(const std::vector<CurveFamily>& families,
                            const std::vector<GaussianRational>& z0, int N) {
    const int n = static_cast<int>(families.size());
    if (n == 0 || static_cast<int>(families[0].z.size()) != n)
        throw HypothesisFailed("curvilinear_chart: need n families in C^n");
    if (static_cast<int>(z0.size()) != n)
        throw BasepointError("curvilinear_chart: base point dimension mismatch");

    FlowChart chart;
    chart.base = z0;
    {
        std::vector<std::string> tn, zn;
        for (int i = 1; i <= n; ++i) tn.push_back("t" + std::to_string(i));
        for (int i = 1; i <= n; ++i) zn.push_back("z" + std::to_string(i));
        chart.ttable = parameter_table(tn);
        chart.ztable = parameter_table(zn);
    }

    std::vector<TruncatedSeries> p;
    for (int i = 0; i < n; ++i)
        p.push_back(TruncatedSeries::constant(chart.ttable, z0[i], N));
    for (int m = 0; m < n; ++m) {
        FamilyFlow flow = family_flow(families[m], N);
        std::vector<TruncatedSeries> imgs;
        imgs.push_back(TruncatedSeries::variable(chart.ttable, m, N));
        for (int i = 0; i < n; ++i) imgs.push_back(p[i]);
        std::vector<TruncatedSeries> next;
        for (int i = 0; i < n; ++i)
            next.push_back(substitute(flow.map[i].poly(), chart.ttable, imgs, N));
        p = std::move(next);
    }
    chart.forward = p;

    chart.jacobian = QMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Exponents e(n, 0);
            e[j] = 1;
            chart.jacobian(i, j) = chart.forward[i].poly().coeff(e);
        }
    }
    if (rank(chart.jacobian) != n)
        throw HypothesisFailed("curvilinear_chart: families not in general position at z0");

    // Invert forward(t) = z0 + z for t(z) by Newton.
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    TablePtr comb = parameter_table(names);
    std::vector<MultiPolynomial> timg;
    for (int i = 0; i < n; ++i) timg.push_back(MultiPolynomial::variable(comb, n + i));
    std::vector<MultiPolynomial> G;
    for (int i = 0; i < n; ++i) {
        MultiPolynomial fwd = substitute(chart.forward[i].poly(), comb, timg);
        G.push_back(fwd - MultiPolynomial::constant(comb, z0[i]) -
                    MultiPolynomial::variable(comb, i));
    }
    std::vector<int> zv, tvars;
    for (int i = 0; i < n; ++i) zv.push_back(i);
    for (int i = n; i < 2 * n; ++i) tvars.push_back(i);
    auto tz = newton_implicit_solve(G, zv, tvars, N);
    for (int i = 0; i < n; ++i) {
        std::vector<TruncatedSeries> imgs;
        for (int j = 0; j < n; ++j)
            imgs.push_back(TruncatedSeries::variable(chart.ztable, j, N));
        for (int j = 0; j < n; ++j) imgs.push_back(TruncatedSeries::zero(chart.ztable, N));
        chart.inverse.push_back(substitute(tz[i].poly(), chart.ztable, imgs, N));
    }
    return chart;
}

std::vector<TruncatedSeries> derivative_jets(const TruncatedSeries& f_chart, int m, int s_max) {
    const TablePtr& t = f_chart.table();
    const int n = t->size();
    if (m < 0 || m + 1 > n) throw MalformedTableError("derivative_jets: bad variable index");
    if (s_max > f_chart.order())
        throw OrderInsufficient("derivative_jets: jet depth exceeds the certified order", s_max);

    std::vector<TruncatedSeries> jets;
    for (int s = 0; s <= s_max; ++s) {
        MultiPolynomial jet(t);
        for (const auto& [exps, c] : f_chart.poly().terms()) {
            if (exps[m] != s) continue;
            bool beyond = false;
            for (int j = m + 1; j < n; ++j)
                if (exps[j] != 0) beyond = true;
            if (beyond) continue;
            Exponents e = exps;
            e[m] = 0;
            jet.add_term(e, c);
        }
        GaussianRational fact(1);
        for (int r = 2; r <= s; ++r) fact *= GaussianRational(r);
        jets.push_back(TruncatedSeries(jet * fact, std::max(0, f_chart.order() - s)));
    }
    return jets;
}

namespace {

// Annihilator of g in the chart variable t_mvar with polynomial coefficients
// in the remaining chart variables: exact kernel over the joint monomials
// f^i t_mvar^j c^alpha.  This keeps the per-family check order-sound; a
// truncated series cannot be exactly restricted to a curve with nonzero
// transverse coordinates.
std::optional<Annihilator> parametric_annihilator(const TruncatedSeries& g, int mvar, int qmax,
                                                 int kmax, int cdeg, int margin) {
    const TablePtr& st = g.table();
    const int n = st->size();
    const int N = g.order();

    std::vector<TruncatedSeries> powers;
    powers.push_back(TruncatedSeries::constant(st, GaussianRational(1), N));
    for (int i = 1; i <= qmax; ++i) powers.push_back(powers.back() * g);

    auto pt_table = [&]() {
        auto t = std::make_shared<VariableTable>();
        t->add("f", VarKind::Parameter);
        for (int i = 0; i < n; ++i) t->add(st->name(i), VarKind::Parameter);
        return TablePtr(t);
    };
    TablePtr pt = pt_table();

    // c-monomials in the other variables.
    std::vector<Exponents> cmons;
    {
        Exponents cur(n, 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == n) {
                cmons.push_back(cur);
                return;
            }
            if (pos == mvar) {
                self(self, pos + 1, left);
                return;
            }
            for (int e = 0; e <= left; ++e) {
                cur[pos] = e;
                self(self, pos + 1, left - e);
            }
            cur[pos] = 0;
        };
        rec(rec, 0, cdeg);
        std::sort(cmons.begin(), cmons.end(), GradedLexLess{});
    }

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

            struct Col {
                int i, j;
                Exponents alpha;
            };
            std::vector<Col> cols;
            std::vector<MultiPolynomial> expansions;
            std::map<Exponents, int, GradedLexLess> rows;
            for (int i = 0; i <= q; ++i) {
                for (int j = 0; j <= k; ++j) {
                    for (const auto& alpha : cmons) {
                        Exponents shift = alpha;
                        shift[mvar] = j;
                        MultiPolynomial mono(st);
                        mono.add_term(shift, GaussianRational(1));
                        MultiPolynomial e = (powers[i].poly() * mono).truncated(N);
                        for (const auto& [exps, c] : e.terms())
                            if (!rows.count(exps)) rows[exps] = static_cast<int>(rows.size());
                        cols.push_back({i, j, alpha});
                        expansions.push_back(std::move(e));
                    }
                }
            }
            QMatrix A(static_cast<Eigen::Index>(std::max<size_t>(rows.size(), 1)),
                      static_cast<Eigen::Index>(cols.size()));
            A.setConstant(GaussianRational(0));
            for (size_t c = 0; c < cols.size(); ++c)
                for (const auto& [exps, coeff] : expansions[c].terms())
                    A(rows.at(exps), static_cast<Eigen::Index>(c)) = coeff;
            QMatrix K = kernel(A);
            if (K.cols() == 0) continue;

            MultiPolynomial P(pt);
            for (size_t c = 0; c < cols.size(); ++c) {
                GaussianRational coeff = K(static_cast<Eigen::Index>(c), 0);
                if (coeff.is_zero()) continue;
                Exponents e(n + 1, 0);
                e[0] = cols[c].i;
                for (int v = 0; v < n; ++v) e[v + 1] = cols[c].alpha[v];
                e[mvar + 1] += cols[c].j;
                P.add_term(e, coeff);
            }
            P = P * P.terms().begin()->second.inverse();

            // Exact residual in the joint ring.
            std::vector<TruncatedSeries> imgs;
            imgs.push_back(g);
            for (int v = 0; v < n; ++v) imgs.push_back(TruncatedSeries::variable(st, v, N));
            if (!substitute(P, st, imgs, N).is_zero())
                throw Error("parametric_annihilator: kernel vector failed re-verification");
            return Annihilator{P, q, k, N};
        }
    }
    if (missing_order >= 0)
        throw OrderInsufficient("parametric_annihilator: series order " + std::to_string(N) +
                                    " is below the required " + std::to_string(missing_order),
                                missing_order);
    return std::nullopt;
}

}  // namespace

SeparateCertificate separate_algebraicity(const TruncatedSeries& f,
                                          const std::vector<CurveFamily>& families,
                                          const std::vector<GaussianRational>& z0,
                                          const SeparateBounds& bounds, int N) {
    const int n = static_cast<int>(families.size());
    SeparateCertificate cert;
    cert.order = N;
    cert.chart = curvilinear_chart(families, z0, N);
    const FlowChart& chart = *cert.chart;

    // Pull f back: g(t) = f(forward(t) - z0), exact composition.
    std::vector<TruncatedSeries> offs;
    for (int i = 0; i < n; ++i)
        offs.push_back(chart.forward[i] - TruncatedSeries::constant(chart.ttable, z0[i], N));
    TruncatedSeries g = substitute(f.poly(), chart.ttable, offs, N);

    for (int m = 0; m < n; ++m) {
        auto par = parametric_annihilator(g, m, bounds.qmax, bounds.kmax, bounds.degree,
                                          bounds.margin);
        if (!par) {
            cert.success = false;
            cert.failure = "family " + std::to_string(m + 1) +
                           ": no annihilator along the family within the bounds";
            return cert;
        }
        // Sampled curves: freeze the transverse chart coordinates at
        // distinct rationals in the (exact, polynomial-coefficient)
        // parametric annihilator.
        auto ut = parameter_table({"f", "t"});
        for (int s = 0; s < bounds.samples; ++s) {
            GaussianRational c = s == 0 ? GaussianRational(0) : GaussianRational(1, s + 1);
            std::vector<MultiPolynomial> imgs;
            imgs.push_back(MultiPolynomial::variable(ut, 0));
            for (int v = 0; v < n; ++v) {
                if (v == m)
                    imgs.push_back(MultiPolynomial::variable(ut, 1));
                else
                    imgs.push_back(MultiPolynomial::constant(ut, c));
            }
            CurveCheck check{m + 1, s, std::vector<GaussianRational>(std::max(n - 1, 0), c),
                             Annihilator{substitute(par->P, ut, imgs), par->q, par->k, N}};
            if (check.ann.P.is_zero()) {
                cert.success = false;
                cert.failure = "family " + std::to_string(m + 1) + ", sample " +
                               std::to_string(s) + ": annihilator degenerates";
                return cert;
            }
            cert.per_curve.push_back(std::move(check));
        }
    }

    auto final_ann = multivariate_annihilator(g, bounds.degree, bounds.margin);
    if (!final_ann) {
        cert.success = false;
        cert.failure = "no joint annihilator within total degree " +
                       std::to_string(bounds.degree);
        return cert;
    }
    cert.final_chart = *final_ann;

    // Convert to z coordinates through the inverse chart.
    auto fz = parameter_table([&] {
        std::vector<std::string> names = {"f"};
        for (int i = 0; i < n; ++i) names.push_back(chart.ztable->name(i));
        return names;
    }());
    std::vector<TruncatedSeries> imgs;
    imgs.push_back(TruncatedSeries::variable(fz, 0, N));
    for (int i = 0; i < n; ++i) {
        std::vector<TruncatedSeries> zimgs;
        for (int j = 0; j < n; ++j) zimgs.push_back(TruncatedSeries::variable(fz, 1 + j, N));
        imgs.push_back(substitute(chart.inverse[i].poly(), fz, zimgs, N));
    }
    cert.final_z = substitute(cert.final_chart->P, fz, imgs, N).poly();
    cert.success = true;
    return cert;
}

}  // namespace cralg
