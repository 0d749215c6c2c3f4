#include "cralg/segre.hpp"

#include "cralg/newton.hpp"
#include "cralg/tangent_fields.hpp"

namespace cralg {

namespace {

std::vector<GaussianRational> conj_all(const std::vector<GaussianRational>& v) {
    std::vector<GaussianRational> c;
    c.reserve(v.size());
    for (const auto& x : v) c.push_back(x.conj());
    return c;
}

// Images over M's own table: z variables kept, zb variables frozen at
// conj(zeta) (or only the x-block frozen, for family representations).
std::vector<MultiPolynomial> freeze_conjugates(const TablePtr& t, int n,
                                               const std::vector<GaussianRational>& zbar,
                                               int upto) {
    std::vector<MultiPolynomial> images;
    images.reserve(2 * n);
    for (int i = 0; i < n; ++i) images.push_back(MultiPolynomial::variable(t, i));
    for (int i = 0; i < n; ++i) {
        if (i < upto)
            images.push_back(MultiPolynomial::constant(t, zbar[i]));
        else
            images.push_back(MultiPolynomial::variable(t, n + i));
    }
    return images;
}

void require_normalized(const DefiningSystem& M, const char* who) {
    if (!is_normalized(M)) throw NormalizationError(std::string(who) + ": system not normalized");
}

}  // namespace

SegreVariety segre_variety(const DefiningSystem& M, const std::vector<GaussianRational>& zeta) {
    if (static_cast<int>(zeta.size()) != M.n)
        throw BasepointError("segre_variety: point dimension mismatch");
    SegreVariety Q;
    Q.zeta = zeta;
    auto images = freeze_conjugates(M.table, M.n, conj_all(zeta), M.n);
    for (const auto& r : M.rho) Q.system.push_back(substitute(r, M.table, images));
    return Q;
}

bool on_segre_variety(const SegreVariety& Q, const std::vector<GaussianRational>& w) {
    std::vector<GaussianRational> pt = w;
    for (const auto& x : w) pt.push_back(x.conj());
    for (const auto& eq : Q.system)
        if (!eq.evaluate(pt).is_zero()) return false;
    return true;
}

SegreFamily segre_family_representation(const DefiningSystem& M,
                                        const std::vector<GaussianRational>& theta, int N) {
    require_normalized(M, "segre_family_representation");
    const int n = M.n, k = M.cr_dim();
    if (static_cast<int>(theta.size()) != k)
        throw BasepointError("segre_family_representation: theta must have k components");

    auto images = freeze_conjugates(M.table, n, conj_all(theta), k);
    std::vector<MultiPolynomial> G;
    G.reserve(M.d);
    for (const auto& r : M.rho) G.push_back(substitute(r, M.table, images));

    SegreFamily fam;
    fam.theta = theta;

    std::vector<int> zvars, xvars, ybars, yvars;
    for (int i = 0; i < n; ++i) zvars.push_back(i);
    for (int i = 0; i < k; ++i) xvars.push_back(i);
    for (int i = k; i < n; ++i) yvars.push_back(i);
    for (int i = n + k; i < 2 * n; ++i) ybars.push_back(i);

    fam.S = newton_implicit_solve(G, zvars, ybars, N);

    std::vector<int> graph_free = xvars;
    graph_free.insert(graph_free.end(), ybars.begin(), ybars.end());
    fam.R = newton_implicit_solve(G, graph_free, yvars, N);
    return fam;
}

std::vector<QVector> lifted_vectors(const DefiningSystem& M,
                                    const std::vector<GaussianRational>& theta) {
    const int n = M.n, d = M.d, k = M.cr_dim();
    SegreFamily fam = segre_family_representation(M, theta, 2);
    std::vector<QVector> out;
    out.reserve(k);
    for (int j = 0; j < k; ++j) {
        QVector Y(n);
        Y.setConstant(GaussianRational(0));
        Y(j) = GaussianRational(1);
        for (int l = 0; l < d; ++l) {
            Exponents e(2 * n, 0);
            e[j] = 1;
            Y(k + l) = fam.R[l].poly().coeff(e);
        }
        out.push_back(Y);
    }
    return out;
}

LiftedFieldsResult lifted_fields(const DefiningSystem& M, bool extended_grid) {
    const int n = M.n, k = M.cr_dim();
    LiftedFieldsResult res;

    auto theta_unit = [&](int a, const GaussianRational& w) {
        std::vector<GaussianRational> th(k, GaussianRational(0));
        th[a] = w;
        return th;
    };
    res.grid.push_back(std::vector<GaussianRational>(k, GaussianRational(0)));
    for (int a = 0; a < k; ++a) res.grid.push_back(theta_unit(a, GaussianRational(1)));
    for (int a = 0; a < k; ++a) res.grid.push_back(theta_unit(a, GaussianRational::i()));

    auto scan = [&](size_t from) {
        for (size_t g = from; g < res.grid.size(); ++g)
            for (const QVector& Y : lifted_vectors(M, res.grid[g])) res.vectors.push_back(Y);
        QMatrix V(static_cast<Eigen::Index>(res.vectors.size()), n);
        for (size_t i = 0; i < res.vectors.size(); ++i)
            V.row(static_cast<Eigen::Index>(i)) = res.vectors[i].transpose();
        res.rank = rank(V);
    };
    scan(0);

    if (res.rank < n || extended_grid) {
        size_t from = res.grid.size();
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                for (const GaussianRational& s : {GaussianRational(1), GaussianRational(-1)}) {
                    std::vector<GaussianRational> th(k, GaussianRational(0));
                    th[a] = GaussianRational(1);
                    th[b] = s;
                    res.grid.push_back(th);
                }
            }
        }
        if (res.grid.size() > from) scan(from);
    }
    res.spans = res.rank == n;
    return res;
}

std::vector<CurveFamily> curve_families_from_segre(
    const DefiningSystem& M, const std::vector<std::vector<GaussianRational>>& thetas, int N) {
    require_normalized(M, "curve_families_from_segre");
    const int n = M.n, d = M.d, k = M.cr_dim();

    // Greedy selection of (theta, direction) pairs with independent tangents.
    struct Pick {
        size_t theta_idx;
        int j;
        QVector tangent;
    };
    std::vector<Pick> picks;
    QMatrix sel(0, n);
    for (size_t ti = 0; ti < thetas.size() && static_cast<int>(picks.size()) < n; ++ti) {
        auto Ys = lifted_vectors(M, thetas[ti]);
        for (int j = 0; j < k && static_cast<int>(picks.size()) < n; ++j) {
            QMatrix cand(sel.rows() + 1, n);
            cand.topRows(sel.rows()) = sel;
            cand.row(sel.rows()) = Ys[j].transpose();
            if (rank(cand) > static_cast<int>(sel.rows())) {
                sel = cand;
                picks.push_back({ti, j, Ys[j]});
            }
        }
    }
    if (static_cast<int>(picks.size()) < n)
        throw HypothesisFailed(
            "curve_families_from_segre: lifted fields span only rank " +
            std::to_string(picks.size()) + " < " + std::to_string(n));

    std::vector<CurveFamily> families;
    int m = 1;
    for (const Pick& pk : picks) {
        SegreFamily fam = segre_family_representation(M, thetas[pk.theta_idx], N);

        auto vt = std::make_shared<VariableTable>();
        vt->add("t", VarKind::Parameter);
        for (int c = 1; c < n; ++c) vt->add("c" + std::to_string(c), VarKind::Parameter);
        TablePtr params = vt;

        // x slots: t along the picked direction, c_1..c_{k-1} transverse;
        // taub slots: c_k..c_{n-1}.
        std::vector<TruncatedSeries> images;
        int cpos = 1;
        for (int i = 0; i < k; ++i) {
            if (i == pk.j)
                images.push_back(TruncatedSeries::variable(params, 0, N));
            else
                images.push_back(TruncatedSeries::variable(params, cpos++, N));
        }
        for (int i = k; i < n; ++i) images.push_back(TruncatedSeries::zero(params, N));
        for (int i = 0; i < k; ++i) images.push_back(TruncatedSeries::zero(params, N));
        for (int l = 0; l < d; ++l)
            images.push_back(TruncatedSeries::variable(params, cpos + l, N));

        CurveFamily cf;
        cf.m = m++;
        cf.theta = thetas[pk.theta_idx];
        cf.direction = pk.j + 1;
        cf.params = params;
        for (int i = 0; i < k; ++i) cf.z.push_back(images[i]);
        for (int l = 0; l < d; ++l) cf.z.push_back(compose(fam.R[l], params, images));
        for (const auto& comp : cf.z) cf.base.push_back(comp.constant_term());
        cf.tangent = pk.tangent;
        families.push_back(std::move(cf));
    }
    return families;
}

namespace {

struct ExtAlphabet {
    TablePtr table;
    int n, np;
    int F0, Fb0, D0, Db0;  // first indices of each block

    int F(int i) const { return F0 + i; }
    int Fb(int i) const { return Fb0 + i; }
    int D(int i, int nu) const { return D0 + i * n + nu; }
    int Db(int i, int nu) const { return Db0 + i * n + nu; }
};

ExtAlphabet make_ext_alphabet(int n, int np) {
    auto t = std::make_shared<VariableTable>();
    for (int i = 1; i <= n; ++i) t->add("z" + std::to_string(i), VarKind::Holomorphic);
    for (int i = 1; i <= n; ++i) t->add("zb" + std::to_string(i), VarKind::Conjugate);
    for (int i = 1; i <= np; ++i) t->add("F" + std::to_string(i), VarKind::MapSymbol);
    for (int i = 1; i <= np; ++i) t->add("Fb" + std::to_string(i), VarKind::MapSymbol);
    for (int i = 1; i <= np; ++i)
        for (int j = 1; j <= n; ++j)
            t->add("D" + std::to_string(i) + "_" + std::to_string(j), VarKind::DerivativeSymbol);
    for (int i = 1; i <= np; ++i)
        for (int j = 1; j <= n; ++j)
            t->add("Db" + std::to_string(i) + "_" + std::to_string(j), VarKind::DerivativeSymbol);
    for (int i = 0; i < n; ++i) t->pair(i, n + i);
    int F0 = 2 * n, Fb0 = 2 * n + np, D0 = 2 * n + 2 * np, Db0 = 2 * n + 2 * np + np * n;
    for (int i = 0; i < np; ++i) t->pair(F0 + i, Fb0 + i);
    for (int i = 0; i < np * n; ++i) t->pair(D0 + i, Db0 + i);
    return ExtAlphabet{t, n, np, F0, Fb0, D0, Db0};
}

// Lifts a polynomial over the z/zb table into the extended alphabet.
MultiPolynomial lift_zzb(const MultiPolynomial& p, const ExtAlphabet& ext) {
    std::vector<MultiPolynomial> images;
    images.reserve(2 * ext.n);
    for (int i = 0; i < 2 * ext.n; ++i) images.push_back(MultiPolynomial::variable(ext.table, i));
    return substitute(p, ext.table, images);
}

// Lifts a polynomial over the target z'/zb' table: z'_i -> F_i, zb'_i -> Fb_i.
MultiPolynomial lift_target(const MultiPolynomial& p, const ExtAlphabet& ext) {
    std::vector<MultiPolynomial> images;
    images.reserve(2 * ext.np);
    for (int i = 0; i < ext.np; ++i)
        images.push_back(MultiPolynomial::variable(ext.table, ext.F(i)));
    for (int i = 0; i < ext.np; ++i)
        images.push_back(MultiPolynomial::variable(ext.table, ext.Fb(i)));
    return substitute(p, ext.table, images);
}

// The point 0~: all z, zb, F, Fb at 0 and the D symbols at dF(0).
std::vector<GaussianRational> point_0tilde(const ExtAlphabet& ext, const QMatrix& jac0) {
    std::vector<GaussianRational> pt(ext.table->size(), GaussianRational(0));
    for (int i = 0; i < ext.np; ++i) {
        for (int nu = 0; nu < ext.n; ++nu) {
            pt[ext.D(i, nu)] = jac0(i, nu);
            pt[ext.Db(i, nu)] = jac0(i, nu).conj();
        }
    }
    return pt;
}

ExtAlphabet ext_of(const PhiSystem& sys) {
    return ExtAlphabet{sys.ext, sys.n, sys.np, 2 * sys.n, 2 * sys.n + sys.np,
                       2 * sys.n + 2 * sys.np, 2 * sys.n + 2 * sys.np + sys.np * sys.n};
}

}  // namespace

PhiSystem phi_polynomials(const DefiningSystem& M, const DefiningSystem& Mp, const CRMapData& F) {
    require_normalized(M, "phi_polynomials");
    require_normalized(Mp, "phi_polynomials (target)");
    if (F.n != M.n || F.np != Mp.n)
        throw TableMismatchError("phi_polynomials: map dimensions do not match the manifolds");
    for (const auto& b : F.base)
        if (!b.is_zero()) throw BasepointError("phi_polynomials: map must be based at 0");
    for (const auto& v : F.value)
        if (!v.is_zero()) throw BasepointError("phi_polynomials: F(0) must be 0");

    const int n = M.n, np = Mp.n, d = M.d, dp = Mp.d;
    const int k = M.cr_dim(), kp = Mp.cr_dim();
    ExtAlphabet ext = make_ext_alphabet(n, np);

    PhiSystem sys;
    sys.ext = ext.table;
    sys.n = n;
    sys.np = np;
    sys.d = d;
    sys.dp = dp;
    sys.k = k;
    sys.kp = kp;
    sys.jac0 = map_jacobian(F, F.base);

    auto ops = tangent_operators(M);
    sys.phi.resize(k);
    for (int q = 0; q < k; ++q) {
        MultiPolynomial delta = lift_zzb(ops[q].delta, ext);
        std::vector<MultiPolynomial> a;
        for (int l = 0; l < d; ++l) a.push_back(lift_zzb(ops[q].coeffs[l], ext));
        for (int j = 0; j < dp; ++j) {
            // T_q applied to rho'_j(F, Fb) by the chain rule; Fb does not
            // depend on z, so only the F slots differentiate.
            MultiPolynomial phi(ext.table);
            for (int i = 0; i < np; ++i) {
                MultiPolynomial rd = lift_target(Mp.rho[j].derivative(i), ext);
                MultiPolynomial chain =
                    delta * MultiPolynomial::variable(ext.table, ext.D(i, q));
                for (int l = 0; l < d; ++l)
                    chain -= a[l] * MultiPolynomial::variable(ext.table, ext.D(i, k + l));
                phi += rd * chain;
            }
            sys.phi[q].push_back(std::move(phi));
        }
    }
    return sys;
}

RankCertificate condition_2_5_check(const DefiningSystem& M, const DefiningSystem& Mp,
                                    const CRMapData& F) {
    require_normalized(M, "condition_2_5_check");
    require_normalized(Mp, "condition_2_5_check (target)");
    const int k = M.cr_dim(), kp = Mp.cr_dim(), dp = Mp.d;
    PointOnM origin{std::vector<GaussianRational>(Mp.n, GaussianRational(0))};
    LeviData levi = levi_operator_matrices(Mp, origin);
    QMatrix J = map_jacobian(F, F.base);

    RankCertificate cert;
    cert.required = kp;
    cert.matrix = QMatrix(k * dp, kp);
    for (int q = 0; q < k; ++q) {
        QVector u(kp);
        for (int i = 0; i < kp; ++i) u(i) = J(i, q);
        for (int j = 0; j < dp; ++j)
            cert.matrix.row(q * dp + j) = (levi.levi_matrices[j] * u).transpose();
    }
    cert.rank = rank(cert.matrix);
    cert.pass = cert.rank == kp;
    return cert;
}

void select_phi_subset(PhiSystem& sys) {
    ExtAlphabet ext = ext_of(sys);
    auto pt = point_0tilde(ext, sys.jac0);

    sys.selected.clear();
    QMatrix sel(0, sys.kp);
    for (int j = 0; j < sys.dp && static_cast<int>(sys.selected.size()) < sys.kp; ++j) {
        for (int q = 0; q < sys.k && static_cast<int>(sys.selected.size()) < sys.kp; ++q) {
            QVector row(sys.kp);
            for (int s = 0; s < sys.kp; ++s)
                row(s) = sys.phi[q][j].derivative(ext.Fb(s)).evaluate(pt);
            QMatrix cand(sel.rows() + 1, sys.kp);
            cand.topRows(sel.rows()) = sel;
            cand.row(sel.rows()) = row.transpose();
            if (rank(cand) > static_cast<int>(sel.rows())) {
                sel = cand;
                sys.selected.emplace_back(q, j);
            }
        }
    }
    if (static_cast<int>(sys.selected.size()) < sys.kp)
        throw HypothesisFailed(
            "select_phi_subset: Jacobian rank deficient, contradicting the rank condition "
            "(2.5)");
}

RankCertificate full_system(PhiSystem& sys, const DefiningSystem& Mp) {
    if (sys.kp < 1 || sys.dp < 1)
        throw HypothesisFailed("full_system: target must have positive CR dimension and codimension");
    if (static_cast<int>(sys.selected.size()) != sys.kp)
        throw HypothesisFailed("full_system: subset not selected");
    ExtAlphabet ext = ext_of(sys);
    auto pt = point_0tilde(ext, sys.jac0);

    sys.conjugated.clear();
    std::vector<MultiPolynomial> eqs;
    for (const auto& [q, j] : sys.selected) {
        MultiPolynomial P = sys.phi[q][j].conjugate_swap();
        sys.conjugated.push_back(P);
        eqs.push_back(std::move(P));
    }
    for (int s = 0; s < sys.dp; ++s) eqs.push_back(lift_target(Mp.rho[s], ext));

    // Jacobian of the conjugated system with respect to the F symbols (the
    // unknowns of the reflection) at 0~.
    RankCertificate cert;
    cert.required = sys.np;
    cert.matrix = QMatrix(static_cast<Eigen::Index>(eqs.size()), sys.np);
    for (size_t r = 0; r < eqs.size(); ++r)
        for (int i = 0; i < sys.np; ++i)
            cert.matrix(static_cast<Eigen::Index>(r), i) =
                eqs[r].derivative(ext.F(i)).evaluate(pt);
    cert.rank = rank(cert.matrix);
    cert.pass = cert.rank == sys.np;
    if (!cert.pass)
        throw HypothesisFailed("full_system: conjugated system rank " +
                               std::to_string(cert.rank) + " < n' = " + std::to_string(sys.np));
    return cert;
}

AtildeSystem atilde_system(const DefiningSystem& M, const DefiningSystem& Mp, const CRMapData& F,
                           const PhiSystem& sys, const std::vector<GaussianRational>& zeta) {
    if (sys.conjugated.empty())
        throw HypothesisFailed("atilde_system: call full_system first");
    ExtAlphabet ext = ext_of(sys);
    const int n = sys.n, np = sys.np;

    auto Fz = map_value(F, zeta);
    QMatrix Jz = map_jacobian(F, zeta);

    auto vt = std::make_shared<VariableTable>();
    for (int i = 1; i <= n; ++i) vt->add("z" + std::to_string(i), VarKind::Parameter);
    for (int i = 1; i <= np; ++i) vt->add("zp" + std::to_string(i), VarKind::Parameter);
    TablePtr out = vt;

    std::vector<MultiPolynomial> images;
    images.reserve(ext.table->size());
    for (int i = 0; i < n; ++i) images.push_back(MultiPolynomial::variable(out, i));
    for (int i = 0; i < n; ++i)
        images.push_back(MultiPolynomial::constant(out, zeta[i].conj()));
    for (int i = 0; i < np; ++i) images.push_back(MultiPolynomial::variable(out, n + i));
    for (int i = 0; i < np; ++i) images.push_back(MultiPolynomial::constant(out, Fz[i].conj()));
    for (int i = 0; i < np; ++i)
        for (int nu = 0; nu < n; ++nu) images.push_back(MultiPolynomial::constant(out, Jz(i, nu)));
    for (int i = 0; i < np; ++i)
        for (int nu = 0; nu < n; ++nu)
            images.push_back(MultiPolynomial::constant(out, Jz(i, nu).conj()));

    AtildeSystem A;
    A.zeta = zeta;
    A.table = out;
    for (const auto& P : sys.conjugated) A.equations.push_back(substitute(P, out, images));
    {
        // rho'_s(z', Fb(zeta))
        std::vector<MultiPolynomial> timg;
        for (int i = 0; i < np; ++i) timg.push_back(MultiPolynomial::variable(out, n + i));
        for (int i = 0; i < np; ++i)
            timg.push_back(MultiPolynomial::constant(out, Fz[i].conj()));
        for (const auto& r : Mp.rho) A.equations.push_back(substitute(r, out, timg));
    }
    {
        // rho_l(z, conj(zeta))
        std::vector<MultiPolynomial> simg;
        for (int i = 0; i < n; ++i) simg.push_back(MultiPolynomial::variable(out, i));
        for (int i = 0; i < n; ++i)
            simg.push_back(MultiPolynomial::constant(out, zeta[i].conj()));
        for (const auto& r : M.rho) A.equations.push_back(substitute(r, out, simg));
    }
    return A;
}

std::vector<TruncatedSeries> segre_graph(const DefiningSystem& M,
                                         const std::vector<GaussianRational>& zeta, int N) {
    const int n = M.n, k = M.cr_dim();
    PointOnM pz{zeta};
    if (!point_on_manifold(M, pz))
        throw BasepointError("segre_graph: zeta must lie on M");

    // rho(zeta + w, conj(zeta)) = 0 solved for the y part of w.
    std::vector<MultiPolynomial> G;
    std::vector<MultiPolynomial> images;
    for (int i = 0; i < n; ++i)
        images.push_back(MultiPolynomial::variable(M.table, i) +
                         MultiPolynomial::constant(M.table, zeta[i]));
    for (int i = 0; i < n; ++i)
        images.push_back(MultiPolynomial::constant(M.table, zeta[i].conj()));
    for (const auto& r : M.rho) G.push_back(substitute(r, M.table, images));

    std::vector<int> xs, ys;
    for (int i = 0; i < k; ++i) xs.push_back(i);
    for (int i = k; i < n; ++i) ys.push_back(i);
    auto eta = newton_implicit_solve(G, xs, ys, N);

    std::vector<TruncatedSeries> graph;
    for (int i = 0; i < k; ++i) {
        MultiPolynomial g = MultiPolynomial::variable(M.table, i) +
                            MultiPolynomial::constant(M.table, zeta[i]);
        graph.push_back(TruncatedSeries(g, N));
    }
    for (int l = 0; l < n - k; ++l) {
        MultiPolynomial g = eta[l].poly() + MultiPolynomial::constant(M.table, zeta[k + l]);
        graph.push_back(TruncatedSeries(g, N));
    }
    return graph;
}

bool verify_graph_in_variety(const AtildeSystem& sys, const DefiningSystem& M, const CRMapData& F,
                             int N) {
    auto graph = segre_graph(M, sys.zeta, N);
    auto zp = map_series_on(F, graph, N);
    std::vector<TruncatedSeries> images = graph;
    images.insert(images.end(), zp.begin(), zp.end());
    for (const auto& eq : sys.equations)
        if (!substitute(eq, M.table, images, N).is_zero()) return false;
    return true;
}

std::vector<PointOnM> sample_points(const DefiningSystem& M, int count) {
    require_normalized(M, "sample_points");
    const int n = M.n, d = M.d, k = M.cr_dim();
    std::vector<PointOnM> out;
    out.push_back(PointOnM{std::vector<GaussianRational>(n, GaussianRational(0))});

    std::vector<std::vector<GaussianRational>> xs;
    for (long den = 2; den <= 5 && static_cast<int>(xs.size()) < 4 * count; ++den) {
        for (int a = 0; a < k; ++a) {
            std::vector<GaussianRational> x(k, GaussianRational(0));
            x[a] = GaussianRational(1, den);
            xs.push_back(x);
            x[a] = GaussianRational(mpq_class(0), mpq_class(1, den));
            xs.push_back(x);
        }
    }

    for (const auto& x : xs) {
        if (static_cast<int>(out.size()) >= count) break;
        // Freeze x; the system must be affine in (y, yb) for the exact solve.
        std::vector<MultiPolynomial> images;
        for (int i = 0; i < k; ++i) images.push_back(MultiPolynomial::constant(M.table, x[i]));
        for (int i = k; i < n; ++i) images.push_back(MultiPolynomial::variable(M.table, i));
        for (int i = 0; i < k; ++i)
            images.push_back(MultiPolynomial::constant(M.table, x[i].conj()));
        for (int i = k; i < n; ++i) images.push_back(MultiPolynomial::variable(M.table, n + i));

        bool affine = true;
        std::vector<MultiPolynomial> eqs;
        for (const auto& r : M.rho) {
            MultiPolynomial g = substitute(r, M.table, images);
            if (g.degree() > 1) affine = false;
            eqs.push_back(std::move(g));
        }
        if (!affine) continue;

        // Real unknowns u, v with y = u + i v; each equation is real.
        QMatrix A(d, 2 * d);
        QVector rhs(d);
        bool ok = true;
        for (int l = 0; l < d; ++l) {
            std::vector<GaussianRational> zero(2 * n, GaussianRational(0));
            GaussianRational c = eqs[l].evaluate(zero);
            if (c.im() != 0) ok = false;
            rhs(l) = -c;
            for (int j = 0; j < d; ++j) {
                Exponents ey(2 * n, 0);
                ey[k + j] = 1;
                GaussianRational alpha = eqs[l].coeff(ey);
                Exponents eyb(2 * n, 0);
                eyb[n + k + j] = 1;
                GaussianRational beta = eqs[l].coeff(eyb);
                if (beta != alpha.conj()) ok = false;
                A(l, j) = GaussianRational(mpq_class(2 * alpha.re()));
                A(l, d + j) = GaussianRational(mpq_class(-2 * alpha.im()));
            }
        }
        if (!ok) continue;
        auto sol = solve(A, rhs);
        if (!sol) continue;

        std::vector<GaussianRational> coords(n, GaussianRational(0));
        for (int i = 0; i < k; ++i) coords[i] = x[i];
        for (int j = 0; j < d; ++j)
            coords[k + j] = GaussianRational((*sol)(j).re(), (*sol)(d + j).re());
        PointOnM p{coords};
        if (point_on_manifold(M, p)) out.push_back(p);
    }
    if (static_cast<int>(out.size()) > count) out.resize(count);
    return out;
}

}  // namespace cralg
