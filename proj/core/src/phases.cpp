#include "mnchain/phases.hpp"

#include <cmath>
#include <stdexcept>

namespace mnchain {

namespace {

constexpr double kDegeneracyRelTol = 1e-9;

double sector_energy(const ModelParams& params, const SectorConfig& sector) {
  BMatrix b = build_b_matrix(params, sector);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b.m);
  return -0.5 * svd.singularValues().sum() + b.offset;
}

bool is_homogeneous(const std::vector<int>& r) {
  for (int v : r)
    if (v != r.front()) return false;
  return true;
}

bool is_bulk_homogeneous(const std::vector<int>& r) {
  for (std::size_t i = 2; i + 1 < r.size(); ++i)
    if (r[i] != r[1]) return false;
  return true;
}

bool is_staggered(const std::vector<int>& r) {
  SectorConfig a = make_sector(SectorFamily::StaggeredA, static_cast<int>(r.size()));
  bool eq_a = true, eq_b = true;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] != a.r[i]) eq_a = false;
    if (r[i] != -a.r[i]) eq_b = false;
  }
  return eq_a || eq_b;
}

std::string classify_region(const std::vector<int>& r) {
  if (is_homogeneous(r)) return "homogeneous";
  if (is_staggered(r)) return "staggered";
  if (is_bulk_homogeneous(r)) return "bulk-homogeneous";
  return "custom";
}

// Candidates in label-precedence order: homogeneous > bulk-homogeneous >
// staggered, so ties resolve toward the earlier family.
std::vector<SectorConfig> family_candidates(int L) {
  std::vector<SectorConfig> cands;
  cands.push_back(make_sector(SectorFamily::HomogeneousPlus, L));
  cands.push_back(make_sector(SectorFamily::HomogeneousMinus, L));
  for (int bulk : {1, -1})
    for (int rf : {1, -1})
      for (int rl : {1, -1}) {
        if (rf == bulk && rl == bulk) continue;  // already homogeneous
        cands.push_back(make_bulk_sector(L, rf, rl, bulk));
      }
  cands.push_back(make_sector(SectorFamily::StaggeredA, L));
  cands.push_back(make_sector(SectorFamily::StaggeredB, L));
  return cands;
}

}  // namespace

PhasePoint ground_sector_search(const ModelParams& params, SearchMode mode,
                                bool override_guard) {
  params.validate();
  const int L = params.L;

  PhasePoint best;
  best.U = params.u.front();
  best.lambda = params.lambda;

  if (mode == SearchMode::Families) {
    std::vector<SectorConfig> cands = family_candidates(L);
    std::vector<double> energies(cands.size());
    double emin = std::numeric_limits<double>::infinity();
    std::size_t winner = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      energies[i] = sector_energy(params, cands[i]);
      if (energies[i] < emin) {
        emin = energies[i];
        winner = i;
      }
    }
    double tol = kDegeneracyRelTol * std::max(1.0, std::abs(emin));
    int deg = 0;
    std::size_t labeled = winner;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (energies[i] <= emin + tol) {
        ++deg;
        if (i < labeled) labeled = i;  // precedence by candidate order
      }
    }
    best.sector = cands[labeled];
    best.family = cands[labeled].family;
    best.energy = emin;
    best.degeneracy = deg;
    best.region = classify_region(best.sector.r);
    return best;
  }

  if (L > 20 && !override_guard)
    throw std::invalid_argument("exhaustive search guarded at L <= 20");
  const std::uint64_t total = std::uint64_t{1} << L;
  double emin = std::numeric_limits<double>::infinity();
  std::vector<int> r(static_cast<std::size_t>(L));
  std::vector<int> best_r;
  std::vector<double> energies;
  energies.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < L; ++i)
      r[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
    SectorConfig s = make_custom_sector(r);
    double e = sector_energy(params, s);
    energies.push_back(e);
    if (e < emin) {
      emin = e;
      best_r = r;
    }
  }
  double tol = kDegeneracyRelTol * std::max(1.0, std::abs(emin));
  int deg = 0;
  for (double e : energies)
    if (e <= emin + tol) ++deg;
  best.sector = make_custom_sector(best_r);
  best.family = SectorFamily::Custom;
  best.energy = emin;
  best.degeneracy = deg;
  best.region = classify_region(best_r);
  return best;
}

PhaseGrid phase_scan(double U_min, double U_max, double U_step,
                     double lambda_min, double lambda_max, double lambda_step,
                     int L, double t) {
  if (U_step <= 0.0 || lambda_step <= 0.0)
    throw std::invalid_argument("steps must be positive");
  if (U_max < U_min || lambda_max < lambda_min)
    throw std::invalid_argument("empty scan range");
  PhaseGrid grid;
  for (double U = U_min; U <= U_max + 0.5 * U_step; U += U_step)
    grid.U_values.push_back(U);
  for (double l = lambda_min; l <= lambda_max + 0.5 * lambda_step; l += lambda_step)
    grid.lambda_values.push_back(l);
  grid.points.reserve(grid.U_values.size() * grid.lambda_values.size());
  for (double lambda : grid.lambda_values) {
    for (double U : grid.U_values) {
      ModelParams p = ModelParams::uniform(L, t, U, lambda);
      grid.points.push_back(ground_sector_search(p, SearchMode::Families));
    }
  }
  return grid;
}

namespace {

// det of the N x N Bloch matrix at k in {0, pi}: diag -2 u_n, superdiag -4t,
// corner (N,1) carrying -4t e^{ik}. Returned scaled by max|entry|^N.
double bloch_det_scaled(const std::vector<double>& u, double t, double corner_sign) {
  const int n = static_cast<int>(u.size());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) b(i, i) = -2.0 * u[static_cast<std::size_t>(i)];
  if (n == 1) {
    b(0, 0) += -4.0 * t * corner_sign;
  } else {
    for (int i = 0; i + 1 < n; ++i) b(i, i + 1) = -4.0 * t;
    b(n - 1, 0) = -4.0 * t * corner_sign;
  }
  double s = b.cwiseAbs().maxCoeff();
  if (s == 0.0) return 0.0;
  return (b / s).determinant();
}

}  // namespace

std::optional<int> majorana_number(const std::vector<double>& u_supercell, double t) {
  if (u_supercell.empty()) throw std::invalid_argument("empty supercell");
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
  double d0 = bloch_det_scaled(u_supercell, t, 1.0);
  double dpi = bloch_det_scaled(u_supercell, t, -1.0);
  if (std::abs(d0) < 1e-12 || std::abs(dpi) < 1e-12) return std::nullopt;
  return (d0 * dpi > 0.0) ? 1 : -1;
}

BetaResult beta_threshold(double x, int N, double t) {
  if (x < 0.0) throw std::invalid_argument("x must be nonnegative");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  auto invariant = [&](double U) {
    return majorana_number(disorder_pattern(x, N, U, N), t);
  };

  BetaResult res;
  const double u_cap = 100.0 * t;
  double lo = 1e-6 * t;
  double hi = t;
  auto m_lo = invariant(lo);
  if (m_lo && *m_lo == 1) {
    // Already trivial at infinitesimal U; threshold is at zero.
    res.beta = std::numeric_limits<double>::infinity();
    res.U_star = 0.0;
    return res;
  }
  std::optional<int> m_hi = invariant(hi);
  while ((!m_hi || *m_hi == -1) && hi < u_cap) {
    if (m_hi && *m_hi == -1) lo = hi;
    hi *= 2.0;
    m_hi = invariant(hi);
  }
  if (!m_hi || *m_hi == -1) {
    res.unbounded = true;
    res.beta = 0.0;
    res.U_star = std::numeric_limits<double>::infinity();
    return res;
  }
  while (hi - lo > 1e-4 * t) {
    double mid = 0.5 * (lo + hi);
    auto m = invariant(mid);
    if (!m) {
      lo = hi = mid;  // landed exactly on the critical point
      break;
    }
    (*m == -1 ? lo : hi) = mid;
  }
  res.U_star = 0.5 * (lo + hi);
  res.beta = t / res.U_star;
  return res;
}

}  // namespace mnchain
