#ifndef CRALG_TANGENT_FIELDS_HPP
#define CRALG_TANGENT_FIELDS_HPP

#include <vector>

#include "cralg/manifold.hpp"

namespace cralg {

// Tangent CR operator T_q = Delta * d/dx_q - sum_j a_jq * d/dy_j on a
// normalized system, where x = (z_1..z_k) and y = (z_{k+1}..z_n).  All
// coefficients are polynomials: Delta is the determinant of [d rho_s / d y_j]
// and the a_jq come from its adjugate, so the construction never divides.
struct TangentOperator {
    int q = 1;  // 1-based, q <= k
    int n = 0;
    int k = 0;
    MultiPolynomial delta;
    std::vector<MultiPolynomial> coeffs;  // a_jq for j = 1..d
};

// The k tangent operators of a normalized defining system.  Throws
// NormalizationError if the system is not in normal form (the y-Jacobian at 0
// must be invertible, which normal form guarantees).
std::vector<TangentOperator> tangent_operators(const DefiningSystem& M);

// Formal application of T_q (or the conjugate operator, which carries
// conjugated coefficients and differentiates in xb_q, yb_j).
MultiPolynomial apply_operator(const TangentOperator& T, const MultiPolynomial& h,
                               bool conjugated = false);
TruncatedSeries apply_operator(const TangentOperator& T, const TruncatedSeries& h,
                               bool conjugated = false);

// Tangent Cauchy-Riemann test: h is a CR function on M iff every conjugate
// operator annihilates h modulo the ideal of M.  Membership is tested on the
// complexification by substituting the Newton graph y = phi(x, chi) and
// checking the residual through total degree `order`.
bool cr_function_test(const DefiningSystem& M, const MultiPolynomial& h, int order = 12);

}  // namespace cralg

#endif
