#pragma once

#include <Eigen/Dense>
#include <complex>

namespace mnchain {

// Pfaffian of a skew-symmetric matrix via the Parlett-Reid tridiagonal
// reduction with partial pivoting. Odd dimension returns 0, empty returns 1.
// Throws std::invalid_argument when the input is not skew-symmetric.
double pfaffian(Eigen::MatrixXd a);
std::complex<double> pfaffian(Eigen::MatrixXcd a);

}  // namespace mnchain
