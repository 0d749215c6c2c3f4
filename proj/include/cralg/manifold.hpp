#ifndef CRALG_MANIFOLD_HPP
#define CRALG_MANIFOLD_HPP

#include <optional>
#include <string>
#include <vector>

#include "cralg/linalg.hpp"
#include "cralg/polynomial.hpp"

namespace cralg {

// Generic real algebraic manifold M = {rho_j(z, zb) = 0, j = 1..d} in C^n,
// over the standard z1..zn / zb1..zbn alphabet.
struct DefiningSystem {
    int n = 0;
    int d = 0;
    TablePtr table;  // z1..zn, zb1..zbn, paired
    std::vector<MultiPolynomial> rho;

    int cr_dim() const { return n - d; }
};

DefiningSystem make_defining_system(int n, std::vector<MultiPolynomial> rho);

struct PointOnM {
    std::vector<GaussianRational> coords;  // n exact values

    std::vector<GaussianRational> conj_coords() const {
        std::vector<GaussianRational> c;
        c.reserve(coords.size());
        for (const auto& v : coords) c.push_back(v.conj());
        return c;
    }
    // (z, zb) evaluation vector for the full table.
    std::vector<GaussianRational> full_coords() const {
        std::vector<GaussianRational> f = coords;
        for (const auto& v : coords) f.push_back(v.conj());
        return f;
    }
};

GaussianRational evaluate_at(const MultiPolynomial& p, const PointOnM& pt);
bool point_on_manifold(const DefiningSystem& M, const PointOnM& p);

struct GenericityReport {
    bool pass = false;
    bool reality_ok = false;
    std::vector<int> non_real_indices;  // 0-based rho indices failing reality
    int antiholomorphic_rank = 0;       // rank of [d rho_j / d zb_k](p)
    std::string message;
};

// Genericity at p: every rho_j real and the antiholomorphic differentials
// independent (exact rank d).  Throws BasepointError if p is not on M.
GenericityReport check_defining_system(const DefiningSystem& M, const PointOnM& p);

// Exact basis of T_p^c M = ker [d rho_j / d z_nu](p); n x k columns.
QMatrix complex_tangent_basis(const DefiningSystem& M, const PointOnM& p);

// Affine holomorphic change of coordinates z = base + C * zeta with exact
// inverse; normalizes the defining system at a point.
struct NormalizationMap {
    std::vector<GaussianRational> base;  // image of zeta = 0
    QMatrix C;                           // n x n, invertible
    QMatrix Cinv;

    std::vector<GaussianRational> forward(const std::vector<GaussianRational>& zeta) const;
    std::vector<GaussianRational> backward(const std::vector<GaussianRational>& z) const;

    // Substitutes z = base + C*zeta (and the conjugate substitution) into a
    // polynomial over the original z/zb table; result over `target`.
    MultiPolynomial apply(const MultiPolynomial& p, const TablePtr& target) const;
    // The inverse substitution zeta = Cinv*(z - base).
    MultiPolynomial apply_inverse(const MultiPolynomial& p, const TablePtr& target) const;
};

// Brings the system to the normal form: zero constant terms and linear part
// exactly y_j + yb_j, where y = (z_{k+1}..z_n).  The returned system lives
// over a fresh z/zb table.
std::pair<NormalizationMap, DefiningSystem> normalize_at_point(const DefiningSystem& M,
                                                               const PointOnM& p);

bool is_normalized(const DefiningSystem& M);

// Levi form of rho_j at p evaluated on tangent vectors u, v: component j is
// sum over nu, mu of d^2 rho_j / dz_nu dzb_mu (p) u_nu conj(v_mu).
std::vector<GaussianRational> levi_form_value(const DefiningSystem& M, const PointOnM& p,
                                              const QVector& u, const QVector& v);

struct LeviData {
    PointOnM basepoint;
    QMatrix tangent_basis;               // n x k, in the original coordinates
    std::vector<QMatrix> levi_matrices;  // d Hermitian k x k matrices
};

// Matrices of the Levi operators in the normalized tangent basis with the
// canonical Hermitian product of the normalized coordinates.
LeviData levi_operator_matrices(const DefiningSystem& M, const PointOnM& p);

struct LeviConeResult {
    bool nondegenerate = false;
    // Tangent grid vectors realizing d independent Levi-form values...
    std::vector<QVector> witness_vectors;
    std::vector<QVector> witness_values;
    // ...or the covector annihilating every value when degenerate.
    std::optional<QVector> annihilating_covector;
};

// Levi cone of M at p has nonempty interior in R^d iff the Levi-form values
// over the deterministic tangent grid {e_a, e_a +- e_b, e_a +- i e_b} span
// R^d (the hull contains 0, so interiority reduces to a span test).
LeviConeResult levi_cone_nondegenerate(const DefiningSystem& M, const PointOnM& p);

// L_p(u, .) = 0 implies u = 0: the stacked Levi matrices have exact rank k.
bool levi_form_nondegenerate(const DefiningSystem& M, const PointOnM& p);

// Levi-form values on the deterministic tangent grid, as real d-vectors.
std::vector<std::pair<QVector, QVector>> levi_value_grid(const LeviData& levi);

}  // namespace cralg

#endif
