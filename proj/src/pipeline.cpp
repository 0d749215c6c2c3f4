#include "cralg/pipeline.hpp"

#include <memory>

#include "cralg/newton.hpp"

namespace cralg {

namespace {

TablePtr parameter_table(const std::vector<std::string>& names) {
    auto t = std::make_shared<VariableTable>();
    for (const auto& n : names) t->add(n, VarKind::Parameter);
    return t;
}

// Complexified graph of a normalized M: images for all 2n variables with x
// and the conjugate variables free and y solved by Newton.
std::vector<TruncatedSeries> complexified_images(const DefiningSystem& M, int N) {
    const int n = M.n, k = M.cr_dim();
    std::vector<int> free_vars, unknowns;
    for (int i = 0; i < k; ++i) free_vars.push_back(i);
    for (int i = n; i < 2 * n; ++i) free_vars.push_back(i);
    for (int i = k; i < n; ++i) unknowns.push_back(i);
    std::vector<TruncatedSeries> graph = newton_implicit_solve(M.rho, free_vars, unknowns, N);

    std::vector<TruncatedSeries> images;
    images.reserve(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        if (i >= k && i < n)
            images.push_back(graph[i - k]);
        else
            images.push_back(TruncatedSeries::variable(M.table, i, N));
    }
    return images;
}

// rho'(G, Gb) == 0 on the complexification of the (normalized) source.
bool membership_on_complexification(const DefiningSystem& M, const DefiningSystem& Mp,
                                    const CRMapData& G, int N) {
    std::vector<TruncatedSeries> images = complexified_images(M, N);
    std::vector<TruncatedSeries> zimgs(images.begin(), images.begin() + M.n);
    std::vector<TruncatedSeries> Gz = map_series_on(G, zimgs, N);

    std::vector<TruncatedSeries> Gb;
    for (int s = 0; s < G.np; ++s) {
        TruncatedSeries num = substitute(G.num[s].conjugate_swap(), M.table, images, N);
        TruncatedSeries den = substitute(G.den[s].conjugate_swap(), M.table, images, N);
        Gb.push_back(num * reciprocal(den));
    }

    std::vector<TruncatedSeries> target_images;
    for (int j = 0; j < Mp.n; ++j) target_images.push_back(Gz[j]);
    for (int j = 0; j < Mp.n; ++j) target_images.push_back(Gb[j]);
    for (const auto& rho : Mp.rho)
        if (!substitute(rho, M.table, target_images, N).is_zero()) return false;
    return true;
}

bool image_on_target(const DefiningSystem& Mp, const std::vector<GaussianRational>& value) {
    return point_on_manifold(Mp, PointOnM{value});
}

}  // namespace

HypothesisReport hypothesis_report(const DefiningSystem& M, const PointOnM& p,
                                   const DefiningSystem& Mp, const CRMapData& F, int N) {
    HypothesisReport rep;
    auto fail = [&](const std::string& name) {
        if (rep.failed_condition.empty()) rep.failed_condition = name;
    };

    if (!image_on_target(Mp, F.value)) fail("base point image is not on the target manifold");

    auto [src_chart, nM] = normalize_at_point(M, p);
    auto [tgt_chart, nMp] = normalize_at_point(Mp, PointOnM{F.value});
    CRMapData G = normalized_map(F, src_chart, tgt_chart);
    PointOnM origin{std::vector<GaussianRational>(M.n, GaussianRational(0))};
    PointOnM origin_p{std::vector<GaussianRational>(Mp.n, GaussianRational(0))};

    rep.membership = rep.failed_condition.empty() &&
                     membership_on_complexification(nM, nMp, G, N);
    if (!rep.membership) fail("map is not tangent to the target manifold (membership)");

    rep.source = check_defining_system(nM, origin);
    if (!rep.source.pass) fail("genericity of the source manifold");
    rep.target = check_defining_system(nMp, origin_p);
    if (!rep.target.pass) fail("genericity of the target manifold");

    rep.levi_cone = levi_cone_nondegenerate(nM, origin);
    if (!rep.levi_cone.nondegenerate) fail("Levi cone condition (2.3)");

    rep.condition_2_5 = condition_2_5_check(nM, nMp, G);
    if (!rep.condition_2_5.pass) fail("rank condition (2.5)");

    if (rep.condition_2_5.pass) {
        try {
            PhiSystem sys = phi_polynomials(nM, nMp, G);
            select_phi_subset(sys);
            rep.subset_selected = true;
            rep.full_rank = full_system(sys, nMp);
        } catch (const HypothesisFailed&) {
        }
        if (!rep.subset_selected || !rep.full_rank.pass)
            fail("rank of the conjugated reflection system");
    }

    rep.lifted = lifted_fields(nM);
    if (!rep.lifted.spans) fail("lifted Segre fields do not span the ambient space");

    rep.pass = rep.failed_condition.empty();
    return rep;
}

ExtensionCertificate extend_map(const DefiningSystem& M, const PointOnM& p,
                                const DefiningSystem& Mp, const CRMapData& F,
                                const PipelineOptions& opts, int N) {
    ExtensionCertificate cert;
    cert.order = N;
    cert.report = hypothesis_report(M, p, Mp, F, N);
    if (!cert.report.pass) throw HypothesisFailed(cert.report.failed_condition);

    auto [src_chart, nM] = normalize_at_point(M, p);
    auto [tgt_chart, nMp] = normalize_at_point(Mp, PointOnM{F.value});
    CRMapData G = normalized_map(F, src_chart, tgt_chart);
    cert.source_chart = src_chart;
    cert.target_chart = tgt_chart;

    PhiSystem sys = phi_polynomials(nM, nMp, G);
    select_phi_subset(sys);
    full_system(sys, nMp);

    cert.families = curve_families_from_segre(nM, cert.report.lifted.grid, N);
    const int n = M.n, np = F.np;

    // The components of F in the normalized source coordinates: exact
    // rational substitution z = p + C * zeta.
    std::vector<std::string> znames;
    for (int i = 1; i <= n; ++i) znames.push_back("z" + std::to_string(i));
    TablePtr zt = parameter_table(znames);
    std::vector<TruncatedSeries> zimgs;
    for (int l = 0; l < n; ++l) {
        TruncatedSeries img = TruncatedSeries::constant(zt, p.coords[l], N);
        for (int j = 0; j < n; ++j)
            img = img + TruncatedSeries::variable(zt, j, N) * src_chart.C(l, j);
        zimgs.push_back(img);
    }
    std::vector<TruncatedSeries> f = map_series_on(F, zimgs, N);

    // Per-curve evidence: freeze the section parameters at distinct
    // rationals and recover a univariate annihilator for every component.
    TablePtr ut = parameter_table({"t"});
    for (size_t m = 0; m < cert.families.size(); ++m) {
        const CurveFamily& fam = cert.families[m];
        for (int s = 0; s < opts.bounds.samples; ++s) {
            GaussianRational c = s == 0 ? GaussianRational(0) : GaussianRational(1, s + 1);
            std::vector<TruncatedSeries> pimgs;
            for (int v = 0; v < fam.params->size(); ++v)
                pimgs.push_back(v == 0 ? TruncatedSeries::variable(ut, 0, N)
                                       : TruncatedSeries::constant(ut, c, N));
            std::vector<TruncatedSeries> curve_orig;
            for (int l = 0; l < n; ++l) {
                TruncatedSeries img = TruncatedSeries::constant(ut, p.coords[l], N);
                for (int j = 0; j < n; ++j)
                    img = img + substitute(fam.z[j].poly(), ut, pimgs, N) * src_chart.C(l, j);
                curve_orig.push_back(img);
            }
            std::vector<TruncatedSeries> restricted = map_series_on(F, curve_orig, N);
            for (int i = 0; i < np; ++i) {
                auto ann = find_annihilator(restricted[i], opts.bounds.qmax, opts.bounds.kmax,
                                            opts.bounds.margin);
                if (!ann)
                    throw NotFound("component " + std::to_string(i + 1) + ", family " +
                                   std::to_string(m + 1) + ", sample " + std::to_string(s) +
                                   ": no annihilator within the bounds");
                cert.per_curve.push_back(
                    PerCurveAnnihilator{i + 1, static_cast<int>(m + 1), s, c, *ann});
            }
        }
    }

    // The engine, once per component, in the normalized coordinates.
    std::vector<GaussianRational> origin(n, GaussianRational(0));
    for (int i = 0; i < np; ++i) {
        SeparateCertificate sc =
            separate_algebraicity(f[i], cert.families, origin, opts.bounds, N);
        if (!sc.success)
            throw NotFound("component " + std::to_string(i + 1) + ": " + sc.failure);
        cert.components.push_back(std::move(sc));
    }

    // Convert each final annihilator back to the original coordinates via
    // zeta = Cinv * (z - p) and re-verify against the series of F_i.
    for (int i = 0; i < np; ++i) {
        std::vector<std::string> names = {"F" + std::to_string(i + 1)};
        for (const auto& zn : znames) names.push_back(zn);
        TablePtr ft = parameter_table(names);
        std::vector<MultiPolynomial> imgs = {MultiPolynomial::variable(ft, 0)};
        for (int j = 0; j < n; ++j) {
            MultiPolynomial zeta(ft);
            for (int l = 0; l < n; ++l) {
                GaussianRational a = src_chart.Cinv(j, l);
                if (a.is_zero()) continue;
                zeta += (MultiPolynomial::variable(ft, 1 + l) -
                         MultiPolynomial::constant(ft, p.coords[l])) *
                        a;
            }
            imgs.push_back(zeta);
        }
        MultiPolynomial P = substitute(cert.components[i].final_z.value(), ft, imgs);

        std::vector<TruncatedSeries> check = {f[i]};
        for (int l = 0; l < n; ++l) check.push_back(zimgs[l]);
        if (!substitute(P, zt, check, N).is_zero())
            throw Error("extend_map: converted annihilator failed re-verification");
        cert.annihilators.push_back(std::move(P));
    }

    // Cross-check against the reflection-side variety at sampled points.
    for (const PointOnM& zeta : sample_points(nM, opts.zeta_samples)) {
        AtildeSystem at = atilde_system(nM, nMp, G, sys, zeta.coords);
        cert.variety_checks.push_back(verify_graph_in_variety(at, nM, G, N));
        cert.varieties.push_back(std::move(at));
    }
    return cert;
}

}  // namespace cralg
