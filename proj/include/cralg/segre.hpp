#ifndef CRALG_SEGRE_HPP
#define CRALG_SEGRE_HPP

#include <utility>
#include <vector>

#include "cralg/cr_map.hpp"
#include "cralg/manifold.hpp"

namespace cralg {

// Q(zeta) = {w : rho_j(w, conj(zeta)) = 0}; the system lives in the z
// variables of M's table only.
struct SegreVariety {
    std::vector<GaussianRational> zeta;
    std::vector<MultiPolynomial> system;
};

SegreVariety segre_variety(const DefiningSystem& M, const std::vector<GaussianRational>& zeta);
bool on_segre_variety(const SegreVariety& Q, const std::vector<GaussianRational>& w);

// The Segre family attached to a parameter theta in C^k: taub = S(z) cuts out
// Q(theta, tau), and y = R(x, taub) is its graph form.  Both are series over
// M's table; S uses the z variables, R uses x = z_1..z_k and the conjugate y
// variables zb_{k+1}..zb_n in the role of taub.
struct SegreFamily {
    std::vector<GaussianRational> theta;
    std::vector<TruncatedSeries> S;
    std::vector<TruncatedSeries> R;
};

SegreFamily segre_family_representation(const DefiningSystem& M,
                                        const std::vector<GaussianRational>& theta, int N);

// Lifted field values Y_j(thetab)(0) = (e_j, dR/dx_j(0)), j = 1..k.
std::vector<QVector> lifted_vectors(const DefiningSystem& M,
                                    const std::vector<GaussianRational>& theta);

struct LiftedFieldsResult {
    std::vector<std::vector<GaussianRational>> grid;  // theta values scanned
    std::vector<QVector> vectors;                     // all Y_j, grid-major
    int rank = 0;
    bool spans = false;
};

// Scans the deterministic theta grid {0, e_a, i*e_a}; extended adds
// {e_a +- e_b}.  spans == true iff the collected vectors span C^n.
LiftedFieldsResult lifted_fields(const DefiningSystem& M, bool extended_grid = false);

// One family of curves through 0: sections of the Segre graphs of a fixed
// theta by lines along x_{direction}, parametrized over (t, c_1..c_{n-1}).
struct CurveFamily {
    int m = 1;  // 1-based family index
    std::vector<GaussianRational> theta;
    int direction = 1;  // 1-based x index
    TablePtr params;
    std::vector<TruncatedSeries> z;
    std::vector<GaussianRational> base;
    QVector tangent;
};

// Selects n (theta, direction) pairs with exactly independent tangents at 0
// and builds their parametrizations; throws HypothesisFailed on rank
// deficiency.
std::vector<CurveFamily> curve_families_from_segre(
    const DefiningSystem& M, const std::vector<std::vector<GaussianRational>>& thetas, int N);

// The reflection polynomials Phi_qj = T_q rho'_j(F, Fb) over the extended
// alphabet (z, zb, F, Fb, D, Db), where D_i_j stands for dF_i/dz_j.
struct PhiSystem {
    TablePtr ext;
    int n = 0, np = 0, d = 0, dp = 0, k = 0, kp = 0;
    QMatrix jac0;  // dF(0) in normalized coordinates; the D-symbol values at 0~
    std::vector<std::vector<MultiPolynomial>> phi;  // [q][j], q < k, j < dp
    std::vector<std::pair<int, int>> selected;      // (q, j), 0-based, kp entries
    std::vector<MultiPolynomial> conjugated;        // P_j, filled by full_system
};

// M, Mp normalized; F in normalized coordinates with F(0) = 0.
PhiSystem phi_polynomials(const DefiningSystem& M, const DefiningSystem& Mp, const CRMapData& F);

struct RankCertificate {
    bool pass = false;
    int rank = 0;
    int required = 0;
    QMatrix matrix;
};

// The rank condition on the Levi operators of Mp along dF(0): the stacked
// (k*dp) x kp matrix of vectors L^j(dF(0) e_q) must have exact rank kp.
RankCertificate condition_2_5_check(const DefiningSystem& M, const DefiningSystem& Mp,
                                    const CRMapData& F);

// Greedy deterministic subset selection making the kp x kp Jacobian in the
// tangential Fb symbols at 0~ invertible; fills sys.selected.
void select_phi_subset(PhiSystem& sys);

// Conjugates the selected Phi equations and appends rho'_s(F, Fb); verifies
// the Jacobian in the Fb symbols at 0~ has exact rank np.
RankCertificate full_system(PhiSystem& sys, const DefiningSystem& Mp);

// The variety system at a fixed rational zeta on M: P_j and rho'_s with the
// conjugate data frozen at zeta, over the alphabet z1..zn, zp1..zpnp.
struct AtildeSystem {
    std::vector<GaussianRational> zeta;
    TablePtr table;
    std::vector<MultiPolynomial> equations;
};

AtildeSystem atilde_system(const DefiningSystem& M, const DefiningSystem& Mp, const CRMapData& F,
                           const PhiSystem& sys, const std::vector<GaussianRational>& zeta);

// Graph of Q(zeta) centered at zeta itself (requires zeta on M): n series in
// the x variables with constant terms zeta.
std::vector<TruncatedSeries> segre_graph(const DefiningSystem& M,
                                         const std::vector<GaussianRational>& zeta, int N);

// Substitutes z = graph of Q(zeta), zp = F(z) into every equation; TRUE iff
// all residuals vanish modulo total degree N+1.
bool verify_graph_in_variety(const AtildeSystem& sys, const DefiningSystem& M, const CRMapData& F,
                             int N);

// Deterministic exact rational points on a normalized M near the origin,
// obtained by an affine-in-y solve at small rational x; always includes 0.
std::vector<PointOnM> sample_points(const DefiningSystem& M, int count);

}  // namespace cralg

#endif
