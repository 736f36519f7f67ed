#include "mnchain/observables.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

#include "mnchain/pfaffian.hpp"

namespace mnchain {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

void check_site(const MajoranaCorrelations& corr, int j) {
  if (j < 1 || j > corr.size())
    throw std::out_of_range("site index out of range");
}

// String expectation from site i to the chain end, empty product included.
double tail_string(const MajoranaCorrelations& corr, int i) {
  return string_expectation(corr, i, corr.size());
}

double quarter_root(double U, double t) {
  double w = 2.0 * t / U;
  return std::pow(1.0 - w * w, 0.25);
}

}  // namespace

double string_expectation(const MajoranaCorrelations& corr, int i, int j) {
  if (j < i) return 1.0;
  if (i < 1 || j > corr.size())
    throw std::out_of_range("string indices out of range");
  const int n = j - i + 1;
  if (n == 1) return corr.K_ab(i - 1, i - 1);
  return corr.K_ab.block(i - 1, i - 1, n, n).determinant();
}

Complex wick_expectation(const MajoranaCorrelations& corr,
                         std::span<const MajoranaOpRef> ops) {
  const int n = static_cast<int>(ops.size());
  if (n % 2 != 0) throw std::invalid_argument("operator count must be even");
  for (int p = 0; p < n; ++p) {
    check_site(corr, ops[p].site);
    for (int q = p + 1; q < n; ++q)
      if (ops[p].flavor == ops[q].flavor && ops[p].site == ops[q].site)
        throw std::invalid_argument("repeated Majorana operator reference");
  }
  if (n == 0) return 1.0;

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const int i = ops[p].site - 1;
      const int j = ops[q].site - 1;
      Complex v;
      if (ops[p].flavor == MajoranaFlavor::A && ops[q].flavor == MajoranaFlavor::A)
        v = kI * corr.K_aa(i, j);
      else if (ops[p].flavor == MajoranaFlavor::A && ops[q].flavor == MajoranaFlavor::B)
        v = kI * corr.K_ab(i, j);
      else if (ops[p].flavor == MajoranaFlavor::B && ops[q].flavor == MajoranaFlavor::A)
        v = -kI * corr.K_ab(j, i);
      else
        v = kI * corr.K_bb(i, j);
      m(p, q) = v;
      m(q, p) = -v;
    }
  }
  return pfaffian(std::move(m));
}

double wick_expectation_real(const MajoranaCorrelations& corr,
                             std::span<const MajoranaOpRef> ops, double tol) {
  Complex v = wick_expectation(corr, ops);
  if (std::abs(v.imag()) > tol * std::max(1.0, std::abs(v.real())))
    throw std::runtime_error("wick_expectation: non-real result beyond tolerance");
  return v.real();
}

Complex singlet_onsite(const MajoranaCorrelations& corr,
                       const SectorConfig& sector, int j) {
  check_site(corr, j);
  double rj = sector.r[static_cast<std::size_t>(j - 1)];
  return kI * (rj / 4.0) * (tail_string(corr, j + 1) + tail_string(corr, j));
}

double magnetization_y(const MajoranaCorrelations& corr,
                       const SectorConfig& sector, int j) {
  check_site(corr, j);
  double rj = sector.r[static_cast<std::size_t>(j - 1)];
  return (rj / 4.0) * (tail_string(corr, j) - tail_string(corr, j + 1));
}

double pair_pair(const MajoranaCorrelations& corr, const SectorConfig& sector,
                 int i, int j) {
  if (i >= j) throw std::invalid_argument("pair_pair requires i < j");
  check_site(corr, i);
  check_site(corr, j);
  double ri = sector.r[static_cast<std::size_t>(i - 1)];
  double rj = sector.r[static_cast<std::size_t>(j - 1)];
  return (ri * rj / 16.0) *
         (string_expectation(corr, i, j - 1) + string_expectation(corr, i + 1, j - 1) +
          string_expectation(corr, i, j) + string_expectation(corr, i + 1, j));
}

double spinspin_y(const MajoranaCorrelations& corr, const SectorConfig& sector,
                  int i, int j) {
  if (i >= j) throw std::invalid_argument("spinspin_y requires i < j");
  check_site(corr, i);
  check_site(corr, j);
  double ri = sector.r[static_cast<std::size_t>(i - 1)];
  double rj = sector.r[static_cast<std::size_t>(j - 1)];
  return (ri * rj / 16.0) *
         (string_expectation(corr, i, j - 1) - string_expectation(corr, i + 1, j - 1) -
          string_expectation(corr, i, j) + string_expectation(corr, i + 1, j));
}

double parity_zp(const MajoranaCorrelations& corr, const SectorConfig& sector,
                 Spin spin) {
  const int L = corr.size();
  if (L % 2 != 0) throw std::invalid_argument("parity_zp requires even L");
  std::vector<MajoranaOpRef> ops;
  ops.reserve(static_cast<std::size_t>(L));
  for (int j = 1; j <= L; ++j)
    ops.push_back({(j % 2 == 1) ? MajoranaFlavor::A : MajoranaFlavor::B, j});
  // <a_1 (i b_2) a_3 (i b_4) ...>: the string carries L/2 explicit factors of i.
  Complex string = wick_expectation(corr, ops);
  for (int k = 0; k < L / 2; ++k) string *= kI;
  if (std::abs(string.imag()) > 1e-10 * std::max(1.0, std::abs(string.real())))
    throw std::runtime_error("parity_zp: non-real string expectation");

  double pre = 1.0;
  for (int j = 1; j <= L / 2; ++j)
    pre *= -sector.r[static_cast<std::size_t>(2 * j - 2)];
  if (spin == Spin::Down) {
    // Z^p_2 = prod_j r_j in the sector and (Z^p_{2,up})^2 = 1, hence
    // Z^p_{2,down} = (prod_j r_j) Z^p_{2,up}.
    for (int v : sector.r) pre *= v;
  }
  return pre * string.real();
}

double density(const MajoranaCorrelations& corr, int j) {
  check_site(corr, j);
  // <n_{j sigma}> - 1/2 lives on the K_aa/K_bb diagonals, which are zero.
  return 0.5 + 0.25 * (corr.K_aa(j - 1, j - 1) + corr.K_bb(j - 1, j - 1));
}

namespace {

double boundary_singlet_integral(double U, double t) {
  const double u = U / (2.0 * t);
  auto integrand = [&](double k) {
    double s = std::sin(k);
    return s * s / std::sqrt(1.0 + u * u - (U / t) * std::cos(k));
  };
  using boost::math::quadrature::gauss_kronrod;
  double err = 0.0;
  if (std::abs(std::abs(U) - 2.0 * t) < 1e-3 * t) {
    // Integrable square-root singularity creeps toward k = 0 at criticality.
    double split = 1e-3;
    double a = gauss_kronrod<double, 31>::integrate(integrand, 0.0, split, 20, 1e-12, &err);
    double b = gauss_kronrod<double, 31>::integrate(integrand, split, M_PI, 20, 1e-12, &err);
    return a + b;
  }
  return gauss_kronrod<double, 31>::integrate(integrand, 0.0, M_PI, 20, 1e-12, &err);
}

}  // namespace

Complex analytic_reference(RefKind kind, const RefParams& p) {
  const double U = p.U;
  const double t = p.t;
  switch (kind) {
    case RefKind::BoundarySingletIntegral: {
      double integral = boundary_singlet_integral(U, t);
      return kI * (p.r_j / 4.0) * (1.0 - (U / (M_PI * t)) * integral);
    }
    case RefKind::BoundarySingletDecoupled: {
      if (U == 0.0 || p.L < 2)
        throw std::invalid_argument("decoupled boundary singlet requires U != 0 and L >= 2");
      double u = U / (2.0 * t);
      double p2L = std::pow(u, 2 * p.L);
      // (u^2-1)/(1 - u^{-2L}) rewritten as (u^2-1) u^{2L} / (u^{2L} - 1).
      double ratio = (p2L > 1e300) ? (u * u - 1.0)
                                   : (u * u - 1.0) * p2L / (p2L - 1.0);
      return kI * (p.r_j / 4.0) * (1.0 - (2.0 * t / U) * std::sqrt(ratio));
    }
    case RefKind::BulkSingletAmplitude:
      if (U < -2.0 * t) return kI * (p.r_i / 2.0) * quarter_root(U, t);
      return 0.0;
    case RefKind::PairPairLongRange:
      if (U < -2.0 * t) return 0.25 * quarter_root(U, t);
      return 0.0;
    case RefKind::MagnetizationYBulk: {
      if (!(U > 2.0 * t)) return 0.0;
      double sign = p.r_j * ((p.L % 2 == 0) ? 1.0 : -1.0) * ((p.j % 2 == 0) ? -1.0 : 1.0);
      return 0.5 * sign * quarter_root(U, t);
    }
    case RefKind::SpinSpinYLongRange: {
      if (!(U > 2.0 * t)) return 0.0;
      double sign = ((p.j - p.i) % 2 == 0) ? 1.0 : -1.0;
      return 0.25 * sign * quarter_root(U, t);
    }
    case RefKind::StaggeredPairPair: {
      double par = ((p.i + p.j) % 2 == 0) ? 1.0 : -1.0;
      return par * (p.r_i * p.r_j / 8.0) * (U / std::sqrt(t * t + U * U) - 1.0);
    }
    case RefKind::StaggeredSpinSpinY: {
      double par = ((p.i + p.j) % 2 == 0) ? 1.0 : -1.0;
      return par * (p.r_i * p.r_j / 8.0) * (U / std::sqrt(t * t + U * U) + 1.0);
    }
    case RefKind::StringAsymptotic: {
      if (!(std::abs(U) > 2.0 * t))
        throw std::invalid_argument("string asymptotic requires |U| > 2t");
      double sign = (U > 0 && (p.j - p.i) % 2 != 0) ? -1.0 : 1.0;
      return sign * quarter_root(U, t);
    }
  }
  throw std::invalid_argument("unknown reference kind");
}

}  // namespace mnchain
