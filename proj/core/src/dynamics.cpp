#include "mnchain/dynamics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "mnchain/observables.hpp"

namespace mnchain {

namespace {

using Complex = std::complex<double>;

Eigen::MatrixXd trig_of_lambda(const Eigen::VectorXd& lambda, double tau,
                               bool use_cos) {
  Eigen::VectorXd d(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k)
    d(k) = use_cos ? std::cos(lambda(k) * tau) : std::sin(lambda(k) * tau);
  return d.asDiagonal();
}

struct XMatrices {
  Eigen::MatrixXd x11, x12, x21, x22;
};

XMatrices build_x(const QuenchSetup& setup, double tau) {
  const Eigen::MatrixXd& u = setup.post.Umat;
  const Eigen::MatrixXd& v = setup.post.Vmat;
  Eigen::MatrixXd c = trig_of_lambda(setup.post.Lambda, tau, true);
  Eigen::MatrixXd s = trig_of_lambda(setup.post.Lambda, tau, false);
  Eigen::MatrixXd utu = u.transpose() * setup.pre.Umat;
  Eigen::MatrixXd vtv = v.transpose() * setup.pre.Vmat;
  XMatrices x;
  x.x11 = u * c * utu;
  x.x12 = u * s * vtv;
  x.x21 = -v * s * utu;
  x.x22 = v * c * vtv;
  return x;
}

}  // namespace

QuenchSetup make_boundary_quench(int L, double t, double U, double lambda,
                                 double alpha0, Boundary boundary) {
  if (boundary != Boundary::Open)
    throw std::invalid_argument(
        "boundary quench requires an open chain (the edge term lives on site L)");
  QuenchSetup setup;
  setup.L = L;
  // Edge pairing delta0 = 2(alpha - 1) U turns the last-site interaction
  // into alpha U within the r_L = +1 sector.
  setup.pre_params = ModelParams::uniform(L, t, U, lambda, 2.0 * (alpha0 - 1.0) * U);
  setup.post_params = ModelParams::uniform(L, t, U, lambda);
  setup.sector = make_sector(SectorFamily::HomogeneousPlus, L);
  BMatrix b_pre = build_b_matrix(setup.pre_params, setup.sector);
  BMatrix b_post = build_b_matrix(setup.post_params, setup.sector);
  setup.pre = svd_canonical(b_pre.m, b_matrix_det_sign(setup.pre_params, setup.sector));
  setup.post = svd_canonical(b_post.m, b_matrix_det_sign(setup.post_params, setup.sector));
  return setup;
}

MajoranaCorrelations quench_correlations_at(const QuenchSetup& setup, double tau) {
  if (setup.pre.Umat.rows() != setup.post.Umat.rows())
    throw std::invalid_argument("quench setup dimension mismatch");
  if (tau < 0.0) throw std::invalid_argument("tau must be nonnegative");
  XMatrices x = build_x(setup, tau);
  MajoranaCorrelations corr;
  corr.K_ab = x.x11 * x.x22.transpose() - x.x12 * x.x21.transpose();
  corr.K_aa = x.x11 * x.x12.transpose() - x.x12 * x.x11.transpose();
  corr.K_bb = x.x21 * x.x22.transpose() - x.x22 * x.x21.transpose();
  corr.tau = tau;
  corr.zero_modes = std::max(setup.pre.zero_modes, setup.post.zero_modes);
  return corr;
}

Eigen::MatrixXd quench_xmatrix(const QuenchSetup& setup, double tau) {
  XMatrices x = build_x(setup, tau);
  const Eigen::Index n = x.x11.rows();
  Eigen::MatrixXd phi(2 * n, 2 * n);
  phi.topLeftCorner(n, n) = x.x11;
  phi.topRightCorner(n, n) = x.x12;
  phi.bottomLeftCorner(n, n) = x.x21;
  phi.bottomRightCorner(n, n) = x.x22;
  return phi;
}

double quench_energy(const QuenchSetup& setup, const MajoranaCorrelations& corr) {
  BMatrix b = build_b_matrix(setup.post_params, setup.sector);
  // <H> = (i/2) sum B_ij <a_i b_j> = -(1/2) sum B_ij (K_ab)_ij + offset.
  return -0.5 * b.m.cwiseProduct(corr.K_ab).sum() + b.offset;
}

NNCorrelators nn_correlators(const MajoranaCorrelations& corr,
                             const SectorConfig& sector) {
  const int L = corr.size();
  if (sector.size() != L)
    throw std::invalid_argument("sector/correlation size mismatch");
  NNCorrelators out;
  out.C.resize(L - 1);
  out.S.resize(L - 1);
  for (int i = 1; i < L; ++i) {
    const MajoranaOpRef ops[4] = {{MajoranaFlavor::A, i},
                                  {MajoranaFlavor::B, i},
                                  {MajoranaFlavor::A, i + 1},
                                  {MajoranaFlavor::B, i + 1}};
    // <(-i a_i b_i)(-i a_{i+1} b_{i+1})> = -<a_i b_i a_{i+1} b_{i+1}>
    double w = -wick_expectation_real(corr, ops, 1e-8);
    double gii = corr.K_ab(i - 1, i - 1);
    double gjj = corr.K_ab(i, i);
    double rr = sector.r[static_cast<std::size_t>(i - 1)] *
                sector.r[static_cast<std::size_t>(i)];
    out.C(i - 1) = (rr / 16.0) * (gii + 1.0 + w + gjj);
    out.S(i - 1) = (rr / 16.0) * (gii - 1.0 - w + gjj);
  }
  return out;
}

namespace {

double mean_square_center(const Eigen::VectorXd& f, int L) {
  double r2 = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    double d = static_cast<double>(i + 1) - L;
    r2 += f(i) * d * d;
  }
  return r2 / L;
}

}  // namespace

QuenchTrajectory run_quench(const QuenchSetup& setup, double tau_max, double dtau) {
  if (tau_max < 0.0 || dtau <= 0.0)
    throw std::invalid_argument("invalid time grid");
  const int L = setup.L;
  const int nt = static_cast<int>(std::floor(tau_max / dtau + 0.5)) + 1;
  QuenchTrajectory traj;
  traj.L = L;
  traj.tau.resize(static_cast<std::size_t>(nt));
  traj.C.resize(nt, L - 1);
  traj.S.resize(nt, L - 1);
  traj.R2_C.resize(nt);
  traj.R2_S.resize(nt);
  for (int n = 0; n < nt; ++n) {
    double tau = n * dtau;
    traj.tau[static_cast<std::size_t>(n)] = tau;
    MajoranaCorrelations corr = quench_correlations_at(setup, tau);
    NNCorrelators nn = nn_correlators(corr, setup.sector);
    traj.C.row(n) = nn.C.transpose();
    traj.S.row(n) = nn.S.transpose();
    traj.R2_C(n) = mean_square_center(nn.C, L);
    traj.R2_S(n) = mean_square_center(nn.S, L);
  }
  return traj;
}

VelocitySeries wavefront_velocity(const QuenchTrajectory& traj,
                                  WavefrontObservable f) {
  const Eigen::VectorXd& r2 =
      (f == WavefrontObservable::Charge) ? traj.R2_C : traj.R2_S;
  const Eigen::Index nt = r2.size();
  if (nt < 3) throw std::invalid_argument("need at least 3 time points");
  const double dtau = traj.tau[1] - traj.tau[0];

  Eigen::VectorXd g(nt);
  for (Eigen::Index n = 0; n < nt; ++n)
    g(n) = std::sqrt(std::abs(r2(n) - r2(0)));

  VelocitySeries out;
  out.v.resize(nt);
  double scale = std::max(1.0, std::abs(r2(0)));
  if ((r2.array() - r2(0)).abs().maxCoeff() < 1e-12 * scale) {
    out.v.setZero();
    out.degenerate = true;
    return out;
  }
  out.v(0) = (g(1) - g(0)) / dtau;
  out.v(nt - 1) = (g(nt - 1) - g(nt - 2)) / dtau;
  for (Eigen::Index n = 1; n + 1 < nt; ++n)
    out.v(n) = (g(n + 1) - g(n - 1)) / (2.0 * dtau);
  return out;
}

namespace {

Eigen::MatrixXd ramp_generator(const ModelParams& base, const SectorConfig& sector,
                               double U) {
  ModelParams p = base;
  std::fill(p.u.begin(), p.u.end(), U);
  BMatrix b = build_b_matrix(p, sector);
  const Eigen::Index n = b.m.rows();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n) = b.m;
  m.bottomLeftCorner(n, n) = -b.m.transpose();
  return m;
}

void rk4_step(const ModelParams& base, const SectorConfig& sector,
              const std::function<double(double)>& U_of_tau, double tau,
              double h, Eigen::MatrixXd& phi) {
  Eigen::MatrixXd m0 = ramp_generator(base, sector, U_of_tau(tau));
  Eigen::MatrixXd mh = ramp_generator(base, sector, U_of_tau(tau + 0.5 * h));
  Eigen::MatrixXd m1 = ramp_generator(base, sector, U_of_tau(tau + h));
  Eigen::MatrixXd k1 = m0 * phi;
  Eigen::MatrixXd k2 = mh * (phi + 0.5 * h * k1);
  Eigen::MatrixXd k3 = mh * (phi + 0.5 * h * k2);
  Eigen::MatrixXd k4 = m1 * (phi + h * k3);
  phi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double orthogonality_drift(const Eigen::MatrixXd& phi) {
  const Eigen::Index n = phi.rows();
  return (phi.transpose() * phi - Eigen::MatrixXd::Identity(n, n))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace

RampResult ramp_evolve(const ModelParams& base, const SectorConfig& sector,
                       const std::function<double(double)>& U_of_tau,
                       const std::vector<double>& tau_grid, double ortho_tol) {
  if (tau_grid.empty()) throw std::invalid_argument("empty time grid");
  for (std::size_t k = 1; k < tau_grid.size(); ++k)
    if (tau_grid[k] <= tau_grid[k - 1])
      throw std::invalid_argument("time grid must be strictly increasing");

  RampResult res;
  res.tau = tau_grid;
  const Eigen::Index n2 = 2 * base.L;
  Eigen::MatrixXd phi = Eigen::MatrixXd::Identity(n2, n2);
  res.Phi.reserve(tau_grid.size());
  res.Phi.push_back(phi);

  for (std::size_t k = 1; k < tau_grid.size(); ++k) {
    const double t0 = tau_grid[k - 1];
    const double span = tau_grid[k] - t0;
    int substeps = 1;
    for (int attempt = 0;; ++attempt) {
      Eigen::MatrixXd trial = phi;
      double h = span / substeps;
      for (int s = 0; s < substeps; ++s)
        rk4_step(base, sector, U_of_tau, t0 + s * h, h, trial);
      if (orthogonality_drift(trial) <= ortho_tol) {
        phi = std::move(trial);
        break;
      }
      if (attempt >= 10)
        throw std::runtime_error(
            "ramp_evolve: orthogonality drift persists after 10 step halvings");
      substeps *= 2;
    }
    res.Phi.push_back(phi);
  }
  return res;
}

MajoranaCorrelations correlations_from_propagator(
    const Eigen::MatrixXd& phi, const MajoranaCorrelations& initial) {
  const Eigen::Index n = initial.K_ab.rows();
  if (phi.rows() != 2 * n)
    throw std::invalid_argument("propagator/correlation size mismatch");
  Eigen::MatrixXd gamma0(2 * n, 2 * n);
  gamma0.topLeftCorner(n, n) = initial.K_aa;
  gamma0.topRightCorner(n, n) = initial.K_ab;
  gamma0.bottomLeftCorner(n, n) = -initial.K_ab.transpose();
  gamma0.bottomRightCorner(n, n) = initial.K_bb;
  Eigen::MatrixXd gamma = phi * gamma0 * phi.transpose();
  MajoranaCorrelations out;
  out.K_aa = gamma.topLeftCorner(n, n);
  out.K_ab = gamma.topRightCorner(n, n);
  out.K_bb = gamma.bottomRightCorner(n, n);
  out.zero_modes = initial.zero_modes;
  return out;
}

double instantaneous_power(const Eigen::MatrixXd& phi, double dU_dtau,
                           const MajoranaCorrelations& initial) {
  MajoranaCorrelations corr = correlations_from_propagator(phi, initial);
  return dU_dtau * corr.K_ab.trace();
}

namespace {

// One Magnus-midpoint step for the 2x2 mode generator M = [[0, b], [-conj b, 0]]:
// exp(h M) = cos(|b| h) I + (sin(|b| h)/|b|) M, exactly unitary.
void bloch_step(Eigen::Matrix2cd& w, Complex b, double h) {
  double ab = std::abs(b);
  double theta = ab * h;
  Complex c = std::cos(theta);
  Complex s_over = (ab < 1e-300) ? Complex(h) : Complex(std::sin(theta) / ab);
  Eigen::Matrix2cd e;
  e << c, s_over * b, -s_over * std::conj(b), c;
  w = e * w;
}

Complex bloch_symbol(double k, double U, double t) {
  return Complex(-2.0 * U - 4.0 * t * std::cos(k), -4.0 * t * std::sin(k));
}

}  // namespace

BlochRampResult ramp_evolve_bloch(int L, double t,
                                  const std::function<double(double)>& U_of_tau,
                                  const std::function<double(double)>& dU_dtau,
                                  double tau_max, double step,
                                  double sample_dtau) {
  if (L < 2 || L % 2 != 0) throw std::invalid_argument("L must be even, >= 2");
  if (step <= 0.0 || tau_max <= 0.0)
    throw std::invalid_argument("invalid integration parameters");

  // Modes k = 2 pi m / L; k and -k are complex conjugates, so only
  // m = 0..L/2 are evolved, interior modes with weight 2.
  const int nm = L / 2 + 1;
  std::vector<double> kvec(static_cast<std::size_t>(nm));
  std::vector<double> weight(static_cast<std::size_t>(nm));
  std::vector<Complex> g0(static_cast<std::size_t>(nm));
  std::vector<Eigen::Matrix2cd> w(static_cast<std::size_t>(nm),
                                  Eigen::Matrix2cd::Identity());
  const double U0 = U_of_tau(0.0);
  for (int m = 0; m < nm; ++m) {
    double k = 2.0 * M_PI * m / L;
    kvec[static_cast<std::size_t>(m)] = k;
    weight[static_cast<std::size_t>(m)] = (m == 0 || m == L / 2) ? 1.0 : 2.0;
    Complex b = bloch_symbol(k, U0, t);
    // Ground state of the initial Hamiltonian: <-i A_k^dag B_k> = e^{-i arg b}.
    g0[static_cast<std::size_t>(m)] =
        (std::abs(b) < 1e-300) ? Complex(1.0) : std::conj(b) / std::abs(b);
  }

  auto mode_g = [&](int m) {
    const Eigen::Matrix2cd& wm = w[static_cast<std::size_t>(m)];
    Complex g = g0[static_cast<std::size_t>(m)];
    return std::conj(wm(0, 0)) * wm(1, 1) * g -
           std::conj(wm(0, 1)) * wm(1, 0) * std::conj(g);
  };
  auto sample_at = [&](double tau) {
    BlochRampSample s;
    s.tau = tau;
    s.U = U_of_tau(tau);
    double du = dU_dtau(tau);
    double sum = 0.0, sum_ad = 0.0;
    for (int m = 0; m < nm; ++m) {
      double wt = weight[static_cast<std::size_t>(m)];
      sum += wt * mode_g(m).real();
      Complex b = bloch_symbol(kvec[static_cast<std::size_t>(m)], s.U, t);
      if (std::abs(b) > 1e-12) sum_ad += wt * (std::conj(b) / std::abs(b)).real();
    }
    s.power_per_site = du * sum / L;
    s.power_excess_per_site = du * (sum - sum_ad) / L;
    return s;
  };

  BlochRampResult res;
  res.samples.push_back(sample_at(0.0));
  const long nsteps = static_cast<long>(std::ceil(tau_max / step));
  const double h = tau_max / nsteps;
  double next_sample = sample_dtau;
  for (long n = 0; n < nsteps; ++n) {
    double tau = n * h;
    double u_mid = U_of_tau(tau + 0.5 * h);
    for (int m = 0; m < nm; ++m)
      bloch_step(w[static_cast<std::size_t>(m)],
                 bloch_symbol(kvec[static_cast<std::size_t>(m)], u_mid, t), h);
    double tau1 = (n + 1) * h;
    if (tau1 + 1e-12 >= next_sample || n + 1 == nsteps) {
      res.samples.push_back(sample_at(tau1));
      while (next_sample <= tau1 + 1e-12) next_sample += sample_dtau;
    }
  }

  const double Uf = U_of_tau(tau_max);
  res.dU_dtau = dU_dtau(tau_max);
  double nexc = 0.0;
  for (int m = 0; m < nm; ++m) {
    Complex b = bloch_symbol(kvec[static_cast<std::size_t>(m)], Uf, t);
    if (std::abs(b) < 1e-12) continue;
    Complex phase = b / std::abs(b);  // e^{i theta_f}
    double p = 0.5 * (1.0 - (phase * mode_g(m)).real());
    nexc += weight[static_cast<std::size_t>(m)] * p;
  }
  res.n_excitation = nexc / L;
  return res;
}

BlochRampResult kz_linear_ramp(int L, double t, double U_initial, double U_final,
                               double tau_Q, double step) {
  if (U_final <= U_initial) throw std::invalid_argument("ramp must increase U");
  if (tau_Q <= 0.0) throw std::invalid_argument("tau_Q must be positive");
  double tau_max = (U_final - U_initial) * tau_Q;
  auto u_of = [=](double tau) { return U_initial + tau / tau_Q; };
  auto du = [=](double) { return 1.0 / tau_Q; };
  return ramp_evolve_bloch(L, t, u_of, du, tau_max, step);
}

}  // namespace mnchain
