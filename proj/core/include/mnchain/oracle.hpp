#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <string>
#include <vector>

#include "mnchain/model.hpp"
#include "mnchain/observables.hpp"

// Brute-force many-body reference: the full spinful Hamiltonian on the
// 4^L-dimensional Fock space, its conserved charges, and the intermediate
// spin-ladder representation. Everything here is ground truth for the mapped
// solver at small L; nothing is performance-critical.

namespace mnchain {

// Jordan-Wigner mode ordering: site-major, spin up before down, i.e. mode
// m = 2(site-1) + (spin == Down). Occupation-number basis |n> indexed by the
// bits of n (bit m = occupation of mode m), with the canonical ordering
// c^dag_0^{n_0} c^dag_1^{n_1} ... |vac>.
class FockSpace {
 public:
  using Op = Eigen::SparseMatrix<std::complex<double>>;

  explicit FockSpace(int L);  // guard: L <= 6 (dimension 4096)

  int sites() const { return L_; }
  Eigen::Index dim() const { return dim_; }

  Op identity() const;
  Op annihilate(int site, Spin spin) const;  // 1-based site
  Op create(int site, Spin spin) const;
  Op majorana_a(int site, Spin spin) const;  // c + c^dag
  Op majorana_b(int site, Spin spin) const;  // -i c + i c^dag
  Op number(int site, Spin spin) const;
  Op spin_y(int site) const;

  // Conserved charge R_j = (prod_{i=j}^L i b_{i up} b_{i down})
  //                        (prod_{i=j+1}^L i a_{i down} a_{i up}).
  Op r_operator(int j) const;

  Op parity_zf() const;              // e^{i pi sum n} (diagonal)
  Op parity_zp() const;              // prod_{j,sigma} (c + (-1)^j c^dag)
  Op parity_zp_sigma(Spin s) const;  // single-spin factor, sites ascending
  Op spin_swap() const;              // Z_2^x: c_{j up} <-> c_{j down}

  // Max deviation of {c_i, c_j^dag} = delta_ij, {c_i, c_j} = 0 over all modes.
  double anticommutation_deviation() const;

 private:
  Op mode_annihilate(int m) const;

  int L_ = 0;
  Eigen::Index dim_ = 0;
};

// Inputs of the full fermionic Hamiltonian, deliberately more general than
// the mapped solver (mu, unequal pairings) for symmetry checks.
struct EDParams {
  int L = 0;
  double t = 1.0;
  double delta_up = 1.0;
  double delta_down = 1.0;
  double mu = 0.0;
  std::vector<double> u;       // per-site interaction, length L
  std::vector<double> lambda;  // per-molecule coupling, length L/2
  double h = 0.0;              // y field on site L
  double delta0 = 0.0;         // edge singlet pairing

  // Symmetric-point parameters matching a mapped-model configuration.
  static EDParams from_model(const ModelParams& p);
};

// H0 + H1 + H_edge verbatim:
//   H0 = sum_{j,sigma} [-t (c^dag_j c_{j+1} + h.c.) - Delta_sigma (c^dag_j
//        c^dag_{j+1} + h.c.)] + sum_j u_j (2n_up - 1)(2n_down - 1)
//        - mu sum (n - 1/2),
//   H1 = sum_j lambda_j (c_{2j u}+c^dag)(c_{2j d}+c^dag)(c_{2j-1 u}-c^dag)
//        (c^dag_{2j-1 d}-c),
//   H_edge = -h S^y_L - i Delta0 (c_{L u} c_{L d} - h.c.).
Eigen::MatrixXcd build_full_hamiltonian(const FockSpace& fock, const EDParams& p);

struct ManyBodyState {
  Eigen::VectorXcd psi;
  double energy = 0.0;
  std::vector<int> r;  // measured R_j eigenvalues
};

// Lowest eigenstate within the invariant subspace of prescribed {r_j},
// obtained by projecting H with prod_j (1 + r_j R_j)/2. A degenerate in-sector
// ground space is resolved toward even fermionic parity.
ManyBodyState ed_ground_sector(const FockSpace& fock, const Eigen::MatrixXcd& h,
                               const std::vector<int>& sector);

std::complex<double> ed_expectation(const ManyBodyState& state,
                                    const FockSpace::Op& op);

struct EDQuenchResult {
  std::vector<double> tau;
  Eigen::MatrixXd C;  // rows: times, cols: i = 1..L-1
  Eigen::MatrixXd S;
};

// Boundary quench evolved by the full many-body propagator: the initial
// state is the r = +1 sector ground state with the edge interaction scaled
// to alpha0 * U, evolution is generated by the unscaled Hamiltonian.
EDQuenchResult ed_boundary_quench(int L, double t, double U, double lambda,
                                  double alpha0, const std::vector<double>& taus);

struct LadderReport {
  bool spectra_match = false;      // fermionic vs ladder vs charge-explicit form
  double max_spectrum_dev = 0.0;
  bool parity_blocks_match = false;  // Z_2^f and Z_2^p resolved spectra
  double max_block_dev = 0.0;
};

// Builds the same model three times on the 4^L space -- fermions, the 2L-spin
// ladder, and the ladder with the conserved charges made explicit -- and
// compares the spectra as multisets, plus parity-resolved block spectra.
LadderReport spin_ladder_check(int L, double t, double U, double lambda);

struct AuditCheck {
  std::string name;
  bool passed = false;
  double deviation = 0.0;
  double tolerance = 0.0;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool all_passed() const;
};

// Full cross-validation sweep at one parameter point: operator algebra,
// conserved charges, symmetries, sector energies vs the SVD solver, static
// observables vs the Wick engine, parity criticality, ladder spectra, edge
// splitting, and quench dynamics vs the X-matrix engine.
AuditReport run_oracle_audit(int L, double t, double U, double lambda,
                             double delta0 = 0.0, double h = 0.0);

}  // namespace mnchain
