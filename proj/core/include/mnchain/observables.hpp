#pragma once

#include <complex>
#include <span>
#include <vector>

#include "mnchain/canon.hpp"
#include "mnchain/model.hpp"

// Static ground-state observables evaluated from Majorana two-point
// correlations via Wick's theorem, plus closed-form reference expressions
// for the homogeneous and staggered sectors.

namespace mnchain {

enum class MajoranaFlavor { A, B };

struct MajoranaOpRef {
  MajoranaFlavor flavor;
  int site;  // 1-based
};

enum class Spin { Up, Down };

// <prod_{l=i}^{j} (-i a_l b_l)> as the determinant of the K_ab submatrix
// with rows/columns i..j (1-based, inclusive). Empty product (j < i) is 1.
// Valid for equilibrium correlations (K_aa = K_bb = 0).
double string_expectation(const MajoranaCorrelations& corr, int i, int j);

// <psi_1 psi_2 ... psi_2n> as the Pfaffian of the pairwise contraction
// matrix. Works out of equilibrium (nonzero K_aa, K_bb). Complex in general.
std::complex<double> wick_expectation(const MajoranaCorrelations& corr,
                                      std::span<const MajoranaOpRef> ops);

// Same, asserting a real result; imaginary residue above `tol` throws.
double wick_expectation_real(const MajoranaCorrelations& corr,
                             std::span<const MajoranaOpRef> ops,
                             double tol = 1e-10);

// Spin-singlet correlation <c_{j up} c_{j down}> = i (r_j/4)(S_{j+1,L} + S_{j,L})
// with S_{i,L} the string expectation from i to the chain end. Purely imaginary.
std::complex<double> singlet_onsite(const MajoranaCorrelations& corr,
                                    const SectorConfig& sector, int j);

// <S_j^y> = (r_j/4)(S_{j,L} - S_{j+1,L}).
double magnetization_y(const MajoranaCorrelations& corr,
                       const SectorConfig& sector, int j);

// Pair-pair correlation <c_{i up} c_{i down} c+_{j down} c+_{j up}>, i < j.
double pair_pair(const MajoranaCorrelations& corr, const SectorConfig& sector,
                 int i, int j);

// <S_i^y S_j^y>, i < j.
double spinspin_y(const MajoranaCorrelations& corr, const SectorConfig& sector,
                  int i, int j);

// <Z^p_{2,sigma}>: prefactor prod_j(-r_{2j-1}) (up) or its sector-parity
// partner (down), times the alternating Majorana string Wick value.
double parity_zp(const MajoranaCorrelations& corr, const SectorConfig& sector,
                 Spin spin);

// <n_{j sigma}>; identically 1/2 in every sector eigenstate (the deviation
// is carried by the K_aa/K_bb diagonals, which vanish by antisymmetry).
double density(const MajoranaCorrelations& corr, int j);

// Closed-form references. Branches outside their parameter domain throw.
enum class RefKind {
  BoundarySingletIntegral,   // alpha = 1 boundary singlet, quadrature
  BoundarySingletDecoupled,  // alpha -> 0 finite-L closed form
  BulkSingletAmplitude,      // onsite singlet, U < -2t, else 0
  PairPairLongRange,         // |i-j| -> infinity pair-pair, U < -2t, else 0
  MagnetizationYBulk,        // spontaneous <S^y_j>, U > 2t, else 0
  SpinSpinYLongRange,        // |i-j| -> infinity <S^y S^y>, U > 2t, else 0
  StaggeredPairPair,         // same-molecule neighbors, exact at finite L
  StaggeredSpinSpinY,        // same-molecule neighbors, exact at finite L
  StringAsymptotic,          // long-range string, |U| > 2t
};

struct RefParams {
  double U = 0.0;
  double t = 1.0;
  int L = 0;       // BoundarySingletDecoupled
  int i = 0;       // first site where applicable
  int j = 0;       // second site where applicable
  int r_i = 1;     // sector sign at i (or at j for boundary forms)
  int r_j = 1;
};

std::complex<double> analytic_reference(RefKind kind, const RefParams& p);

}  // namespace mnchain
