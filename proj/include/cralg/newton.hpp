#ifndef CRALG_NEWTON_HPP
#define CRALG_NEWTON_HPP

#include <vector>

#include "cralg/linalg.hpp"
#include "cralg/polynomial.hpp"

namespace cralg {

// Solves the square linear system M x = rhs whose entries are truncated
// series; every pivot must be a unit (nonzero constant term).  M is given
// row-major.
std::vector<TruncatedSeries> solve_series_linear(std::vector<std::vector<TruncatedSeries>> M,
                                                 std::vector<TruncatedSeries> rhs);

// Implicit function theorem at the origin, exact over Q(i).
//
// G: d polynomials over a table containing the free variables `v` and the
// unknowns `w` (|w| = d).  Returns w(v) with w(0) = 0 and
// G(v, w(v)) == 0 modulo total degree N+1, computed by Newton iteration
// with order doubling.  The residual identity is re-verified before
// returning.
//
// Throws BasepointError if G(0,0) != 0 and ImplicitSolveError if the
// Jacobian dG/dw at the origin is singular.
std::vector<TruncatedSeries> newton_implicit_solve(const std::vector<MultiPolynomial>& G,
                                                   const std::vector<int>& v,
                                                   const std::vector<int>& w, int N);

}  // namespace cralg

#endif
