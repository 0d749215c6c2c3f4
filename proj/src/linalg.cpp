#include "cralg/linalg.hpp"

namespace cralg {

std::vector<int> row_reduce(QMatrix& A) {
    const Eigen::Index rows = A.rows(), cols = A.cols();
    std::vector<int> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pr = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!A(i, c).is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) A.row(pr).swap(A.row(r));
        GaussianRational inv = A(r, c).inverse();
        for (Eigen::Index j = c; j < cols; ++j) A(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || A(i, c).is_zero()) continue;
            GaussianRational f = A(i, c);
            for (Eigen::Index j = c; j < cols; ++j) A(i, j) -= f * A(r, j);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(QMatrix A) { return static_cast<int>(row_reduce(A).size()); }

QMatrix kernel(const QMatrix& A) {
    QMatrix R = A;
    std::vector<int> pivots = row_reduce(R);
    const Eigen::Index cols = A.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<int> free_cols;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));

    QMatrix K(cols, static_cast<Eigen::Index>(free_cols.size()));
    K.setConstant(GaussianRational(0));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        K(fc, static_cast<Eigen::Index>(k)) = GaussianRational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            K(pivots[r], static_cast<Eigen::Index>(k)) = -R(static_cast<Eigen::Index>(r), fc);
    }
    return K;
}

std::optional<QVector> solve(const QMatrix& A, const QVector& b) {
    QMatrix aug(A.rows(), A.cols() + 1);
    aug.leftCols(A.cols()) = A;
    aug.col(A.cols()) = b;
    std::vector<int> pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == static_cast<int>(A.cols()))
        return std::nullopt;  // inconsistent
    QVector x(A.cols());
    x.setConstant(GaussianRational(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x(pivots[r]) = aug(static_cast<Eigen::Index>(r), A.cols());
    return x;
}

QMatrix inverse(const QMatrix& A) {
    if (A.rows() != A.cols()) throw ImplicitSolveError("inverse: matrix not square");
    const Eigen::Index n = A.rows();
    QMatrix aug(n, 2 * n);
    aug.leftCols(n) = A;
    aug.rightCols(n).setConstant(GaussianRational(0));
    for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = GaussianRational(1);
    std::vector<int> pivots = row_reduce(aug);
    if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() >= static_cast<int>(n))
        throw ImplicitSolveError("inverse: singular matrix");
    return aug.rightCols(n);
}

QMatrix adjoint_matrix(const QMatrix& A) {
    QMatrix R(A.cols(), A.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) R(j, i) = A(i, j).conj();
    return R;
}

}  // namespace cralg
