#include "mnchain/pfaffian.hpp"

#include <cmath>
#include <stdexcept>

namespace mnchain {

namespace {

template <typename Scalar, typename Mat>
Scalar pfaffian_impl(Mat& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("pfaffian: matrix must be square");
  if (n == 0) return Scalar(1);
  double scale = a.cwiseAbs().maxCoeff();
  if ((a + a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
    throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  if (n == 0) return Scalar(1);
  if (n % 2 != 0) return Scalar(0);

  Scalar result(1);
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    // Pivot the largest entry of column k below the diagonal into row k+1.
    Eigen::Index kp = k + 1;
    for (Eigen::Index i = k + 2; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(kp, k))) kp = i;
    if (kp != k + 1) {
      a.row(kp).swap(a.row(k + 1));
      a.col(kp).swap(a.col(k + 1));
      result = -result;
    }
    Scalar pivot = a(k + 1, k);
    if (pivot == Scalar(0)) return Scalar(0);
    result *= a(k, k + 1);
    if (k + 2 < n) {
      // Gauss elimination of column/row k via the (k+1) pivot row.
      auto tau = (a.col(k).segment(k + 2, n - k - 2) / pivot).eval();
      auto col1 = a.col(k + 1).segment(k + 2, n - k - 2).eval();
      a.bottomRightCorner(n - k - 2, n - k - 2).noalias() +=
          tau * col1.transpose() - col1 * tau.transpose();
    }
  }
  return result;
}

}  // namespace

double pfaffian(Eigen::MatrixXd a) { return pfaffian_impl<double>(a); }

std::complex<double> pfaffian(Eigen::MatrixXcd a) {
  return pfaffian_impl<std::complex<double>>(a);
}

}  // namespace mnchain
