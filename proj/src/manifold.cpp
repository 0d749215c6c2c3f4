#include "cralg/manifold.hpp"

#include <sstream>

namespace cralg {

DefiningSystem make_defining_system(int n, std::vector<MultiPolynomial> rho) {
    if (n < 1 || rho.empty() || static_cast<int>(rho.size()) > n)
        throw MalformedTableError("make_defining_system: require 1 <= d <= n");
    DefiningSystem M;
    M.n = n;
    M.d = static_cast<int>(rho.size());
    M.table = rho[0].table();
    if (M.table->size() != 2 * n)
        throw MalformedTableError("make_defining_system: table must be z1..zn, zb1..zbn");
    for (const auto& r : rho)
        if (!same_table(r.table(), M.table))
            throw TableMismatchError("make_defining_system: mixed tables");
    M.rho = std::move(rho);
    return M;
}

GaussianRational evaluate_at(const MultiPolynomial& p, const PointOnM& pt) {
    return p.evaluate(pt.full_coords());
}

bool point_on_manifold(const DefiningSystem& M, const PointOnM& p) {
    for (const auto& r : M.rho)
        if (!evaluate_at(r, p).is_zero()) return false;
    return true;
}

namespace {

// [d rho_j / d z_nu](p): the holomorphic differential matrix.
QMatrix holomorphic_differential(const DefiningSystem& M, const PointOnM& p) {
    QMatrix A(M.d, M.n);
    for (int j = 0; j < M.d; ++j)
        for (int nu = 0; nu < M.n; ++nu) A(j, nu) = evaluate_at(M.rho[j].derivative(nu), p);
    return A;
}

QMatrix antiholomorphic_differential(const DefiningSystem& M, const PointOnM& p) {
    QMatrix A(M.d, M.n);
    for (int j = 0; j < M.d; ++j)
        for (int nu = 0; nu < M.n; ++nu)
            A(j, nu) = evaluate_at(M.rho[j].derivative(M.n + nu), p);
    return A;
}

void require_on_manifold(const DefiningSystem& M, const PointOnM& p, const char* who) {
    if (static_cast<int>(p.coords.size()) != M.n)
        throw BasepointError(std::string(who) + ": point dimension mismatch");
    if (!point_on_manifold(M, p))
        throw BasepointError(std::string(who) + ": base point is not on the manifold");
}

// Mixed Hessian of rho_j at p: H[nu][mu] = d^2 rho_j / dz_nu dzb_mu (p).
QMatrix mixed_hessian(const DefiningSystem& M, int j, const PointOnM& p) {
    QMatrix H(M.n, M.n);
    for (int nu = 0; nu < M.n; ++nu) {
        MultiPolynomial dz = M.rho[j].derivative(nu);
        for (int mu = 0; mu < M.n; ++mu)
            H(nu, mu) = evaluate_at(dz.derivative(M.n + mu), p);
    }
    return H;
}

}  // namespace

GenericityReport check_defining_system(const DefiningSystem& M, const PointOnM& p) {
    require_on_manifold(M, p, "check_defining_system");
    GenericityReport rep;
    rep.reality_ok = true;
    for (int j = 0; j < M.d; ++j) {
        if (M.rho[j].conjugate_swap() != M.rho[j]) {
            rep.reality_ok = false;
            rep.non_real_indices.push_back(j);
        }
    }
    rep.antiholomorphic_rank = rank(antiholomorphic_differential(M, p));
    rep.pass = rep.reality_ok && rep.antiholomorphic_rank == M.d;
    std::ostringstream msg;
    if (!rep.reality_ok) msg << "non-real defining polynomial(s); ";
    if (rep.antiholomorphic_rank != M.d)
        msg << "antiholomorphic differentials have rank " << rep.antiholomorphic_rank
            << " < " << M.d << "; ";
    rep.message = rep.pass ? "generic" : msg.str();
    return rep;
}

QMatrix complex_tangent_basis(const DefiningSystem& M, const PointOnM& p) {
    GenericityReport rep = check_defining_system(M, p);
    if (!rep.pass) throw HypothesisFailed("complex_tangent_basis: " + rep.message);
    QMatrix K = kernel(holomorphic_differential(M, p));
    if (K.cols() != M.cr_dim())
        throw HypothesisFailed("complex_tangent_basis: unexpected tangent dimension");
    return K;
}

std::vector<GaussianRational> NormalizationMap::forward(
    const std::vector<GaussianRational>& zeta) const {
    std::vector<GaussianRational> z = base;
    for (Eigen::Index i = 0; i < C.rows(); ++i)
        for (Eigen::Index j = 0; j < C.cols(); ++j) z[i] += C(i, j) * zeta[j];
    return z;
}

std::vector<GaussianRational> NormalizationMap::backward(
    const std::vector<GaussianRational>& z) const {
    std::vector<GaussianRational> zeta(Cinv.rows(), GaussianRational(0));
    for (Eigen::Index i = 0; i < Cinv.rows(); ++i)
        for (Eigen::Index j = 0; j < Cinv.cols(); ++j)
            zeta[i] += Cinv(i, j) * (z[j] - base[j]);
    return zeta;
}

namespace {

// Builds substitution images for z = base + C*zeta over a paired z/zb table.
std::vector<MultiPolynomial> affine_images(const std::vector<GaussianRational>& base,
                                           const QMatrix& C, const TablePtr& target) {
    const int n = static_cast<int>(C.rows());
    std::vector<MultiPolynomial> images;
    images.reserve(2 * n);
    for (int nu = 0; nu < n; ++nu) {
        MultiPolynomial img = MultiPolynomial::constant(target, base[nu]);
        for (int mu = 0; mu < n; ++mu)
            img += MultiPolynomial::variable(target, mu) * C(nu, mu);
        images.push_back(img);
    }
    for (int nu = 0; nu < n; ++nu) {
        MultiPolynomial img = MultiPolynomial::constant(target, base[nu].conj());
        for (int mu = 0; mu < n; ++mu)
            img += MultiPolynomial::variable(target, n + mu) * C(nu, mu).conj();
        images.push_back(img);
    }
    return images;
}

}  // namespace

MultiPolynomial NormalizationMap::apply(const MultiPolynomial& p, const TablePtr& target) const {
    return substitute(p, target, affine_images(base, C, target));
}

MultiPolynomial NormalizationMap::apply_inverse(const MultiPolynomial& p,
                                                const TablePtr& target) const {
    // zeta = Cinv*(z - base) = (-Cinv*base) + Cinv*z
    std::vector<GaussianRational> shifted(base.size(), GaussianRational(0));
    for (Eigen::Index i = 0; i < Cinv.rows(); ++i)
        for (Eigen::Index j = 0; j < Cinv.cols(); ++j) shifted[i] -= Cinv(i, j) * base[j];
    return substitute(p, target, affine_images(shifted, Cinv, target));
}

std::pair<NormalizationMap, DefiningSystem> normalize_at_point(const DefiningSystem& M,
                                                               const PointOnM& p) {
    GenericityReport rep = check_defining_system(M, p);
    if (!rep.pass) throw HypothesisFailed("normalize_at_point: " + rep.message);
    const int n = M.n, d = M.d, k = M.cr_dim();

    QMatrix alpha = holomorphic_differential(M, p);  // d x n, rank d
    QMatrix K = kernel(alpha);                       // n x k
    QMatrix B(n, d);
    for (int j = 0; j < d; ++j) {
        QVector e(d);
        e.setConstant(GaussianRational(0));
        e(j) = GaussianRational(1);
        auto col = solve(alpha, e);
        if (!col) throw NormalizationError("normalize_at_point: differential not surjective");
        B.col(j) = *col;
    }
    QMatrix C(n, n);
    C.leftCols(k) = K;
    C.rightCols(d) = B;

    NormalizationMap map{p.coords, C, inverse(C)};

    TablePtr fresh = make_zzb_table(n);
    std::vector<MultiPolynomial> rho_new;
    rho_new.reserve(d);
    for (const auto& r : M.rho) rho_new.push_back(map.apply(r, fresh));

    DefiningSystem Mn = make_defining_system(n, std::move(rho_new));
    if (!is_normalized(Mn))
        throw NormalizationError("normalize_at_point: normal form verification failed");
    return {std::move(map), std::move(Mn)};
}

bool is_normalized(const DefiningSystem& M) {
    const int n = M.n, d = M.d, k = M.cr_dim();
    for (int j = 0; j < d; ++j) {
        const MultiPolynomial& r = M.rho[j];
        if (!r.constant_term().is_zero()) return false;
        for (int i = 0; i < 2 * n; ++i) {
            Exponents e(2 * n, 0);
            e[i] = 1;
            GaussianRational expect(0);
            if (i == k + j || i == n + k + j) expect = GaussianRational(1);
            if (r.coeff(e) != expect) return false;
        }
    }
    return true;
}

std::vector<GaussianRational> levi_form_value(const DefiningSystem& M, const PointOnM& p,
                                              const QVector& u, const QVector& v) {
    require_on_manifold(M, p, "levi_form_value");
    QMatrix A = holomorphic_differential(M, p);
    QVector Au = A * u, Av = A * v;
    for (int j = 0; j < M.d; ++j)
        if (!Au(j).is_zero() || !Av(j).is_zero())
            throw TangencyError("levi_form_value: vector not in the complex tangent space");

    std::vector<GaussianRational> values;
    values.reserve(M.d);
    for (int j = 0; j < M.d; ++j) {
        QMatrix H = mixed_hessian(M, j, p);
        GaussianRational s(0);
        for (int nu = 0; nu < M.n; ++nu)
            for (int mu = 0; mu < M.n; ++mu) s += H(nu, mu) * u(nu) * v(mu).conj();
        values.push_back(s);
    }
    return values;
}

LeviData levi_operator_matrices(const DefiningSystem& M, const PointOnM& p) {
    auto [map, Mn] = normalize_at_point(M, p);
    const int k = M.cr_dim();
    PointOnM origin{std::vector<GaussianRational>(M.n, GaussianRational(0))};

    LeviData data;
    data.basepoint = p;
    data.tangent_basis = map.C.leftCols(k);
    for (int j = 0; j < M.d; ++j) {
        QMatrix H = mixed_hessian(Mn, j, origin);
        QMatrix G = H.topLeftCorner(k, k);
        // Hermitian by reality of rho.
        for (int r = 0; r < k; ++r)
            for (int s = 0; s < k; ++s)
                if (G(r, s) != G(s, r).conj())
                    throw NormalizationError("levi_operator_matrices: non-Hermitian Levi matrix");
        data.levi_matrices.push_back(std::move(G));
    }
    return data;
}

std::vector<std::pair<QVector, QVector>> levi_value_grid(const LeviData& levi) {
    const int k = static_cast<int>(levi.levi_matrices.empty()
                                       ? 0
                                       : levi.levi_matrices[0].rows());
    const int d = static_cast<int>(levi.levi_matrices.size());

    auto value_of = [&](const QVector& u) {
        QVector val(d);
        for (int j = 0; j < d; ++j) {
            GaussianRational s(0);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) s += levi.levi_matrices[j](r, c) * u(r) * u(c).conj();
            val(j) = s;  // real by Hermitian symmetry
        }
        return val;
    };

    std::vector<QVector> grid;
    for (int a = 0; a < k; ++a) {
        QVector e(k);
        e.setConstant(GaussianRational(0));
        e(a) = GaussianRational(1);
        grid.push_back(e);
    }
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            for (const GaussianRational& w :
                 {GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
                  -GaussianRational::i()}) {
                QVector e(k);
                e.setConstant(GaussianRational(0));
                e(a) = GaussianRational(1);
                e(b) = w;
                grid.push_back(e);
            }
        }
    }

    std::vector<std::pair<QVector, QVector>> out;
    out.reserve(grid.size());
    for (const auto& u : grid) out.emplace_back(u, value_of(u));
    return out;
}

LeviConeResult levi_cone_nondegenerate(const DefiningSystem& M, const PointOnM& p) {
    LeviData levi = levi_operator_matrices(M, p);
    auto grid = levi_value_grid(levi);
    const int d = M.d;

    LeviConeResult res;
    QMatrix V(static_cast<Eigen::Index>(grid.size()), d);
    for (size_t i = 0; i < grid.size(); ++i)
        for (int j = 0; j < d; ++j) V(static_cast<Eigen::Index>(i), j) = grid[i].second(j);

    // Greedy selection of independent value vectors as the witness.
    QMatrix sel(0, d);
    for (const auto& [u, val] : grid) {
        QMatrix cand(sel.rows() + 1, d);
        cand.topRows(sel.rows()) = sel;
        cand.row(sel.rows()) = val.transpose();
        if (rank(cand) > static_cast<int>(sel.rows())) {
            sel = cand;
            res.witness_vectors.push_back(u);
            res.witness_values.push_back(val);
            if (static_cast<int>(sel.rows()) == d) break;
        }
    }
    res.nondegenerate = static_cast<int>(sel.rows()) == d;
    if (!res.nondegenerate) {
        QMatrix K = kernel(V);
        if (K.cols() > 0) res.annihilating_covector = K.col(0);
    }
    return res;
}

bool levi_form_nondegenerate(const DefiningSystem& M, const PointOnM& p) {
    LeviData levi = levi_operator_matrices(M, p);
    const int k = M.cr_dim();
    QMatrix stacked(M.d * k, k);
    for (int j = 0; j < M.d; ++j) stacked.middleRows(j * k, k) = levi.levi_matrices[j];
    return rank(stacked) == k;
}

}  // namespace cralg
