#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

// Sector-reduced quadratic data for the interacting spinful Kitaev chain at
// the symmetric point (Delta = t, mu = 0). In the invariant subspace with
// conserved charges {r_j = +-1} the Hamiltonian reduces to
//   H = (i/2) sum_ij a_i B_ij b_j + offset(r),
// with B real, bidiagonal for open boundaries.

namespace mnchain {

enum class Boundary { Open, Periodic };

struct ModelParams {
  double t = 1.0;              // hopping, > 0
  std::vector<double> u;       // per-site interaction, length L
  double lambda = 0.0;         // dimerized coupling
  double delta0 = 0.0;         // boundary singlet pairing
  double h = 0.0;              // boundary field along y
  int L = 0;                   // even, >= 2
  Boundary boundary = Boundary::Open;

  // Homogeneous interaction U broadcast to every site.
  static ModelParams uniform(int L, double t, double U, double lambda = 0.0,
                             double delta0 = 0.0, double h = 0.0,
                             Boundary boundary = Boundary::Open);

  // Scalar edge constant c0 = (Delta0 - h/2)/2.
  double c0() const { return 0.5 * (delta0 - 0.5 * h); }

  // Throws std::invalid_argument on violated invariants (odd L, t <= 0,
  // u.size() != L, periodic boundary with edge couplings).
  void validate() const;
};

enum class SectorFamily {
  HomogeneousPlus,
  HomogeneousMinus,
  StaggeredA,
  StaggeredB,
  BulkHomogeneous,
  Custom,
};

std::string family_name(SectorFamily f);

struct SectorConfig {
  std::vector<int> r;  // entries +-1
  SectorFamily family = SectorFamily::Custom;

  int size() const { return static_cast<int>(r.size()); }
  void validate() const;
};

// Named sector families. StaggeredA is r_{2j-1} = (-1)^{j+1}, r_{2j} = (-1)^j;
// StaggeredB is its global sign flip.
SectorConfig make_sector(SectorFamily family, int L);

// Homogeneous bulk sign for 1 < j < L with prescribed edge signs.
SectorConfig make_bulk_sector(int L, int r_first, int r_last, int bulk_sign = 1);

SectorConfig make_custom_sector(std::vector<int> r);

struct BMatrix {
  Eigen::MatrixXd m;     // L x L
  double offset = 0.0;   // c0 r_L + lambda sum_i r_{2i} r_{2i-1}
};

// B_{i,i+1} = -2 (r_i + r_{i+1}) t, B_{ii} = -2 u_i (i < L),
// B_{LL} = -2 u_L - (Delta0 + h/2) r_L for open boundaries. Periodic
// boundaries add B_{L,1} = -2 (r_L + r_1) t and keep B_{LL} = -2 u_L.
BMatrix build_b_matrix(const ModelParams& params, const SectorConfig& sector);

double sector_offset(const ModelParams& params, const SectorConfig& sector);

// Sign of det(B) from the bidiagonal structure, exact even when the numeric
// determinant would under- or overflow. Returns 0 on a zero diagonal entry.
int b_matrix_det_sign(const ModelParams& params, const SectorConfig& sector);

// Interaction pattern (x,...,x,1,x,...,x,1,...) * U with the value U repeated
// in steps of N (1-based sites N, 2N, ...), every other site carrying x*U.
std::vector<double> disorder_pattern(double x, int N, double U, int L);

// Randomized variant: each site independently carries x*U with probability
// `fraction_x`, otherwise U. Deterministic for a fixed seed.
std::vector<double> random_disorder_pattern(double x, double fraction_x,
                                            double U, int L, std::uint64_t seed);

}  // namespace mnchain
