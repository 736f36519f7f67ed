#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mnchain/canon.hpp"
#include "mnchain/model.hpp"

// Ground-sector search over conserved-charge configurations, (U, lambda)
// phase classification, and the Majorana number for periodically repeated
// interaction supercells.

namespace mnchain {

struct PhasePoint {
  double U = 0.0;
  double lambda = 0.0;
  SectorConfig sector;        // winning configuration
  SectorFamily family = SectorFamily::Custom;
  double energy = 0.0;        // E0 + offset of the winner
  int degeneracy = 1;         // minimizers within relative tolerance
  std::string region;         // homogeneous | bulk-homogeneous | staggered
};

enum class SearchMode { Families, Exhaustive };

// Families mode searches homogeneous(+/-), staggered(A/B) and the
// bulk-homogeneous configurations with every edge-sign pair for both bulk
// signs. Exhaustive mode sweeps all 2^L sectors (guarded at L <= 20 unless
// overridden).
PhasePoint ground_sector_search(const ModelParams& params, SearchMode mode,
                                bool override_guard = false);

struct PhaseGrid {
  std::vector<double> U_values;
  std::vector<double> lambda_values;
  std::vector<PhasePoint> points;  // row-major: lambda rows, U columns

  const PhasePoint& at(std::size_t iu, std::size_t il) const {
    return points[il * U_values.size() + iu];
  }
};

PhaseGrid phase_scan(double U_min, double U_max, double U_step,
                     double lambda_min, double lambda_max, double lambda_step,
                     int L, double t = 1.0);

// Majorana number M = sgn(det B(0) det B(pi)) for the homogeneous-sector
// Bloch matrix of a periodically repeated interaction supercell. Returns
// nullopt when det B(k) vanishes at k = 0 or pi (critical point).
std::optional<int> majorana_number(const std::vector<double>& u_supercell, double t);

struct BetaResult {
  double beta = 0.0;     // t / U* at the topological transition
  double U_star = 0.0;   // threshold interaction (units of the input U scale)
  bool unbounded = false;  // no sign flip found below U = 100 t
};

// Bisection of the Majorana-number sign flip for the pattern
// disorder_pattern(x, N, U, N) as U grows; |U*| resolved to 1e-4 t.
BetaResult beta_threshold(double x, int N, double t);

}  // namespace mnchain
