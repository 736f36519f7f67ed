#include "mnchain/model.hpp"

#include <random>
#include <stdexcept>

namespace mnchain {

ModelParams ModelParams::uniform(int L, double t, double U, double lambda,
                                 double delta0, double h, Boundary boundary) {
  ModelParams p;
  p.t = t;
  p.u.assign(static_cast<std::size_t>(std::max(L, 0)), U);
  p.lambda = lambda;
  p.delta0 = delta0;
  p.h = h;
  p.L = L;
  p.boundary = boundary;
  p.validate();
  return p;
}

void ModelParams::validate() const {
  if (L < 2 || L % 2 != 0)
    throw std::invalid_argument("L must be even and >= 2");
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
  if (static_cast<int>(u.size()) != L)
    throw std::invalid_argument("per-site interaction vector must have length L");
  if (boundary == Boundary::Periodic && (delta0 != 0.0 || h != 0.0))
    throw std::invalid_argument("periodic boundary requires delta0 = h = 0");
}

std::string family_name(SectorFamily f) {
  switch (f) {
    case SectorFamily::HomogeneousPlus: return "homogeneous-plus";
    case SectorFamily::HomogeneousMinus: return "homogeneous-minus";
    case SectorFamily::StaggeredA: return "staggered-A";
    case SectorFamily::StaggeredB: return "staggered-B";
    case SectorFamily::BulkHomogeneous: return "bulk-homogeneous";
    case SectorFamily::Custom: return "custom";
  }
  return "custom";
}

void SectorConfig::validate() const {
  if (r.empty() || r.size() % 2 != 0)
    throw std::invalid_argument("sector length must be even and nonzero");
  for (int v : r)
    if (v != 1 && v != -1)
      throw std::invalid_argument("sector entries must be +1 or -1");
}

SectorConfig make_sector(SectorFamily family, int L) {
  if (L < 2 || L % 2 != 0)
    throw std::invalid_argument("L must be even and >= 2");
  SectorConfig s;
  s.family = family;
  s.r.resize(static_cast<std::size_t>(L));
  switch (family) {
    case SectorFamily::HomogeneousPlus:
      std::fill(s.r.begin(), s.r.end(), 1);
      break;
    case SectorFamily::HomogeneousMinus:
      std::fill(s.r.begin(), s.r.end(), -1);
      break;
    case SectorFamily::StaggeredA:
      for (int j = 1; j <= L / 2; ++j) {
        s.r[static_cast<std::size_t>(2 * j - 2)] = (j % 2 == 1) ? 1 : -1;   // r_{2j-1} = (-1)^{j+1}
        s.r[static_cast<std::size_t>(2 * j - 1)] = (j % 2 == 1) ? -1 : 1;   // r_{2j}   = (-1)^j
      }
      break;
    case SectorFamily::StaggeredB: {
      SectorConfig a = make_sector(SectorFamily::StaggeredA, L);
      for (std::size_t i = 0; i < a.r.size(); ++i) s.r[i] = -a.r[i];
      break;
    }
    default:
      throw std::invalid_argument("unknown sector family; use make_bulk_sector or make_custom_sector");
  }
  return s;
}

SectorConfig make_bulk_sector(int L, int r_first, int r_last, int bulk_sign) {
  if (L < 2 || L % 2 != 0)
    throw std::invalid_argument("L must be even and >= 2");
  if ((r_first != 1 && r_first != -1) || (r_last != 1 && r_last != -1) ||
      (bulk_sign != 1 && bulk_sign != -1))
    throw std::invalid_argument("edge and bulk signs must be +1 or -1");
  SectorConfig s;
  s.family = SectorFamily::BulkHomogeneous;
  s.r.assign(static_cast<std::size_t>(L), bulk_sign);
  s.r.front() = r_first;
  s.r.back() = r_last;
  return s;
}

SectorConfig make_custom_sector(std::vector<int> r) {
  SectorConfig s;
  s.family = SectorFamily::Custom;
  s.r = std::move(r);
  s.validate();
  return s;
}

double sector_offset(const ModelParams& params, const SectorConfig& sector) {
  if (sector.size() != params.L)
    throw std::invalid_argument("sector length does not match L");
  double dimer = 0.0;
  for (int i = 1; i <= params.L / 2; ++i)
    dimer += sector.r[static_cast<std::size_t>(2 * i - 1)] *
             sector.r[static_cast<std::size_t>(2 * i - 2)];
  double edge = (params.boundary == Boundary::Periodic)
                    ? 0.0
                    : params.c0() * sector.r.back();
  return edge + params.lambda * dimer;
}

BMatrix build_b_matrix(const ModelParams& params, const SectorConfig& sector) {
  params.validate();
  sector.validate();
  if (sector.size() != params.L)
    throw std::invalid_argument("sector length does not match L");
  const int L = params.L;
  BMatrix b;
  b.m = Eigen::MatrixXd::Zero(L, L);
  for (int i = 0; i < L; ++i) b.m(i, i) = -2.0 * params.u[static_cast<std::size_t>(i)];
  for (int i = 0; i + 1 < L; ++i)
    b.m(i, i + 1) = -2.0 * (sector.r[static_cast<std::size_t>(i)] +
                            sector.r[static_cast<std::size_t>(i + 1)]) * params.t;
  if (params.boundary == Boundary::Periodic) {
    b.m(L - 1, 0) = -2.0 * (sector.r.back() + sector.r.front()) * params.t;
  } else {
    b.m(L - 1, L - 1) -= (params.delta0 + 0.5 * params.h) * sector.r.back();
  }
  b.offset = sector_offset(params, sector);
  return b;
}

int b_matrix_det_sign(const ModelParams& params, const SectorConfig& sector) {
  if (params.boundary == Boundary::Periodic) {
    // Corner entry spoils triangularity; fall back to a pivoted LU on the
    // small matrix and read the sign from the pivots.
    BMatrix b = build_b_matrix(params, sector);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(b.m);
    if (lu.rank() < params.L) return 0;
    double s = lu.permutationP().determinant() * lu.permutationQ().determinant();
    for (int i = 0; i < params.L; ++i) {
      double d = lu.matrixLU()(i, i);
      s *= (d > 0) ? 1.0 : -1.0;
    }
    return s > 0 ? 1 : -1;
  }
  // Open boundary: B is upper bidiagonal, det = prod of diagonal entries.
  int sign = 1;
  for (int i = 0; i < params.L; ++i) {
    double d = -2.0 * params.u[static_cast<std::size_t>(i)];
    if (i == params.L - 1) d -= (params.delta0 + 0.5 * params.h) * sector.r.back();
    if (d == 0.0) return 0;
    if (d < 0.0) sign = -sign;
  }
  return sign;
}

std::vector<double> disorder_pattern(double x, int N, double U, int L) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (N > L) throw std::invalid_argument("N must not exceed L");
  if (x < 0.0) throw std::invalid_argument("x must be nonnegative");
  std::vector<double> u(static_cast<std::size_t>(L), x * U);
  for (int site = N; site <= L; site += N) u[static_cast<std::size_t>(site - 1)] = U;
  return u;
}

std::vector<double> random_disorder_pattern(double x, double fraction_x,
                                            double U, int L, std::uint64_t seed) {
  if (x < 0.0) throw std::invalid_argument("x must be nonnegative");
  if (fraction_x < 0.0 || fraction_x > 1.0)
    throw std::invalid_argument("fraction_x must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> u(static_cast<std::size_t>(L));
  for (auto& v : u) v = (unit(rng) < fraction_x) ? x * U : U;
  return u;
}

}  // namespace mnchain
