#pragma once

#include <functional>
#include <vector>

#include "mnchain/canon.hpp"
#include "mnchain/model.hpp"

// Out-of-equilibrium evolution within a fixed sector: sudden boundary quench
// via closed-form trigonometric X matrices, nearest-neighbor charge/spin
// wavefronts and their velocities, and time-dependent ramps (real-space
// propagator ODE plus a momentum-space fast path for homogeneous periodic
// chains).

namespace mnchain {

struct QuenchSetup {
  ModelParams pre_params;   // boundary interaction scaled by alpha0
  ModelParams post_params;  // alpha = 1
  SectorConfig sector;
  CanonicalForm pre;   // U', V' of the initial Hamiltonian
  CanonicalForm post;  // U, V, Lambda of the evolving Hamiltonian
  int L = 0;
};

// Boundary quench of the paper's protocol: the interaction on the last site
// is alpha0 * U for tau < 0 and U for tau > 0, realized through the edge
// pairing delta0 = 2 (alpha0 - 1) U in the r = +1 homogeneous sector.
QuenchSetup make_boundary_quench(int L, double t, double U, double lambda,
                                 double alpha0,
                                 Boundary boundary = Boundary::Open);

// Equal-time correlations at time tau after the quench:
//   X11 = U cos(L t) U^T U',  X12 = U sin(L t) V^T V',
//   X21 = -V sin(L t) U^T U', X22 = V cos(L t) V^T V',
//   K_ab = X11 X22^T - X12 X21^T, K_aa = X11 X12^T - X12 X11^T,
//   K_bb = X21 X22^T - X22 X21^T.
MajoranaCorrelations quench_correlations_at(const QuenchSetup& setup, double tau);

// Stacked 2L x 2L propagator [[X11, X12], [X21, X22]]; orthogonal.
Eigen::MatrixXd quench_xmatrix(const QuenchSetup& setup, double tau);

// Expectation of the post-quench Hamiltonian in the state `corr`;
// conserved along the evolution.
double quench_energy(const QuenchSetup& setup, const MajoranaCorrelations& corr);

struct NNCorrelators {
  Eigen::VectorXd C;  // charge (pair-pair), entries i = 1..L-1
  Eigen::VectorXd S;  // spin (S^y S^y)
};

// C_i = (r_i r_{i+1}/16)(G_ii + 1 + W_i + G_{i+1,i+1}) and
// S_i = (r_i r_{i+1}/16)(G_ii - 1 - W_i + G_{i+1,i+1}), with G the K_ab
// diagonal and W_i = <(-i a_i b_i)(-i a_{i+1} b_{i+1})> evaluated by the
// Pfaffian Wick engine (K_aa, K_bb contribute out of equilibrium).
NNCorrelators nn_correlators(const MajoranaCorrelations& corr,
                             const SectorConfig& sector);

struct QuenchTrajectory {
  std::vector<double> tau;    // uniform grid
  Eigen::MatrixXd C;          // rows: times, cols: i = 1..L-1
  Eigen::MatrixXd S;
  Eigen::VectorXd R2_C;       // mean-square center (1/L) sum_i f_i (i-L)^2
  Eigen::VectorXd R2_S;
  int L = 0;
};

QuenchTrajectory run_quench(const QuenchSetup& setup, double tau_max,
                            double dtau = 0.1);

enum class WavefrontObservable { Charge, Spin };

struct VelocitySeries {
  Eigen::VectorXd v;      // d/dtau sqrt|R^2(tau) - R^2(0)|
  bool degenerate = false;  // R^2 never departs from its initial value
};

// Central finite differences on the trajectory grid; one-sided endpoints.
VelocitySeries wavefront_velocity(const QuenchTrajectory& traj,
                                  WavefrontObservable f);

struct RampResult {
  std::vector<double> tau;
  std::vector<Eigen::MatrixXd> Phi;  // 2L x 2L orthogonal propagators
};

// Integrates d Phi/d tau = [[0, B(tau)], [-B(tau)^T, 0]] Phi, Phi(0) = 1,
// with classical RK4 on the stored grid. If the orthogonality drift of a
// stored step exceeds `ortho_tol` the step is halved and retried (up to 10
// halvings). `base` supplies everything but the interaction, which is
// broadcast from U_of_tau.
RampResult ramp_evolve(const ModelParams& base, const SectorConfig& sector,
                       const std::function<double(double)>& U_of_tau,
                       const std::vector<double>& tau_grid,
                       double ortho_tol = 1e-8);

// Correlations of the initial state transported through Phi:
// Gamma(tau) = Phi Gamma(0) Phi^T in the stacked (a_1..a_L, b_1..b_L) basis.
MajoranaCorrelations correlations_from_propagator(
    const Eigen::MatrixXd& Phi, const MajoranaCorrelations& initial);

// P = <dH/dtau> = (dU/dtau) sum_j <-i a_j(tau) b_j(tau)>.
double instantaneous_power(const Eigen::MatrixXd& Phi, double dU_dtau,
                           const MajoranaCorrelations& initial);

// ---- Momentum-space fast path (homogeneous interaction, periodic chain,
// r = +1 sector). Each mode k evolves under the anti-Hermitian 2x2 generator
// [[0, b(k)], [-conj b(k), 0]] with b(k) = -2U - 4t e^{ik}; modes decouple,
// reducing the cost from O(L^3) per step to O(L).

struct BlochRampSample {
  double tau = 0.0;
  double U = 0.0;
  double power_per_site = 0.0;         // P/L
  double power_excess_per_site = 0.0;  // (P - P_adiabatic)/L
};

struct BlochRampResult {
  std::vector<BlochRampSample> samples;
  double n_excitation = 0.0;  // defect density vs the final ground state
  double dU_dtau = 0.0;
};

BlochRampResult ramp_evolve_bloch(int L, double t,
                                  const std::function<double(double)>& U_of_tau,
                                  const std::function<double(double)>& dU_dtau,
                                  double tau_max, double step = 0.01,
                                  double sample_dtau = 1.0);

// Linear ramp U(tau) = U_initial + tau / tau_Q run until U reaches U_final.
BlochRampResult kz_linear_ramp(int L, double t, double U_initial,
                               double U_final, double tau_Q,
                               double step = 0.01);

}  // namespace mnchain
