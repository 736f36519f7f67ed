#pragma once

#include <Eigen/Dense>

#include "mnchain/model.hpp"

// Canonical free-fermion form of a sector B matrix. The SVD B = U Lambda V^T
// recasts the sector Hamiltonian as H = (i/2) sum_k Lambda_k a~_k b~_k with
// a~_k = sum_i U_ik a_i and b~_k = sum_i V_ik b_i.

namespace mnchain {

struct CanonicalForm {
  Eigen::MatrixXd Umat;     // real orthogonal, L x L
  Eigen::MatrixXd Vmat;     // real orthogonal, L x L
  Eigen::VectorXd Lambda;   // singular values >= 0, descending
  double E0 = 0.0;          // -sum_k Lambda_k / 2
  int detB_sign = 0;        // sign of det(B): -1, 0, +1
  int zero_modes = 0;       // singular values below tolerance
};

// Decompose an arbitrary real square matrix. When exactly one singular value
// is numerically zero and the determinant sign is known, the sign ambiguity
// of the zero-mode pair (u_k, v_k) is resolved so that det(U V^T) = sign
// det(B), which matches the polar factor of any nonsingular perturbation.
CanonicalForm svd_canonical(const Eigen::MatrixXd& B);

// Same, but with the determinant sign supplied externally (the bidiagonal
// structure yields it exactly even when the numeric value under/overflows).
CanonicalForm svd_canonical(const Eigen::MatrixXd& B, int det_sign_hint);

struct MajoranaCorrelations {
  Eigen::MatrixXd K_ab;  // (K_ab)_ij = <-i a_i b_j>
  Eigen::MatrixXd K_aa;  // antisymmetric, <-i a_i a_j> off the diagonal
  Eigen::MatrixXd K_bb;  // antisymmetric, <-i b_i b_j>
  double tau = 0.0;
  int zero_modes = 0;    // nonzero flags a convention-dependent K_ab

  int size() const { return static_cast<int>(K_ab.rows()); }
};

// Ground-state (vacuum) correlations: K_ab = U V^T, K_aa = K_bb = 0. The
// vacuum satisfies <-i a~_k b~_k> = +1 for every mode. A nonzero zero-mode
// count is propagated as a warning flag.
MajoranaCorrelations equilibrium_correlations(const CanonicalForm& canon);

// Thermodynamic-limit band Lambda(theta) = 4t sqrt((U/2t)^2 + 1 - (U/t) cos theta)
// for the homogeneous sectors, U != 0, theta in [0, pi]. Band edges are
// 2|U - 2t| and 2(|U| + 2t), the extrema of the Bloch symbol |2U + 4t e^{ik}|.
double band_reference(double theta, double U, double t);

// Asymptotic smallest singular value for |U| < 2t (edge mode):
// 4t |alpha| (1-(U/2t)^2) / sqrt(1+(alpha^2-1)(U/2t)^2) * |U/2t|^L.
double edge_gap_reference(double U, double t, double alpha, int L);

}  // namespace mnchain
