#ifndef CRALG_LINALG_HPP
#define CRALG_LINALG_HPP

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "cralg/errors.hpp"
#include "cralg/gaussian_rational.hpp"

namespace Eigen {

template <>
struct NumTraits<cralg::GaussianRational> {
    using Real = cralg::GaussianRational;
    using NonInteger = cralg::GaussianRational;
    using Nested = cralg::GaussianRational;
    using Literal = long;
    // Declared as a plain field scalar: Real == Scalar would make Eigen's
    // complex-aware trait specializations ambiguous, and all conjugation is
    // done explicitly in this codebase.
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 20,
        MulCost = 40
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace cralg {

using QMatrix = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;

// Exact row echelon reduction (Gauss-Jordan over the field Q(i)).
// Returns the pivot columns; A is reduced in place.
std::vector<int> row_reduce(QMatrix& A);

int rank(QMatrix A);

// Columns span the exact nullspace of A (empty matrix for trivial kernel).
QMatrix kernel(const QMatrix& A);

// Exact solve A x = b; nullopt if inconsistent or underdetermined columns
// are involved (a particular solution with free variables set to 0 is
// returned when the system is consistent).
std::optional<QVector> solve(const QMatrix& A, const QVector& b);

// Exact inverse of a square matrix; throws ImplicitSolveError if singular.
QMatrix inverse(const QMatrix& A);

QMatrix adjoint_matrix(const QMatrix& A);  // conjugate transpose

}  // namespace cralg

#endif
