#include <doctest.h>

#include <complex>
#include <random>

#include "mnchain/pfaffian.hpp"

using namespace mnchain;

namespace {

Eigen::MatrixXd random_skew(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = g(rng);
      a(j, i) = -a(i, j);
    }
  return a;
}

}  // namespace

TEST_SUITE("pfaffian") {

TEST_CASE("base cases") {
  CHECK(pfaffian(Eigen::MatrixXd(0, 0)) == doctest::Approx(1.0));
  CHECK(pfaffian(Eigen::MatrixXd(Eigen::MatrixXd::Zero(3, 3))) ==
        doctest::Approx(0.0));
  Eigen::MatrixXd a(2, 2);
  a << 0, 1.7, -1.7, 0;
  CHECK(pfaffian(a) == doctest::Approx(1.7));
}

TEST_CASE("four-dimensional expansion") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd a = random_skew(4, rng);
    double expect = a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2);
    CHECK(pfaffian(a) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("squared pfaffian equals the determinant") {
  std::mt19937_64 rng(9);
  for (int n : {2, 6, 10, 16}) {
    Eigen::MatrixXd a = random_skew(n, rng);
    double pf = pfaffian(a);
    CHECK(pf * pf == doctest::Approx(a.determinant()).epsilon(1e-9));
  }
}

TEST_CASE("complex skew matrices") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g;
  for (int n : {2, 8, 12}) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        a(i, j) = std::complex<double>(g(rng), g(rng));
        a(j, i) = -a(i, j);
      }
    std::complex<double> pf = pfaffian(a);
    CHECK(std::abs(pf * pf - a.determinant()) <
          1e-9 * std::max(1.0, std::abs(a.determinant())));
  }
}

TEST_CASE("rejects matrices that are not skew-symmetric") {
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, 1, 0;
  CHECK_THROWS(pfaffian(a));
}

}  // TEST_SUITE
