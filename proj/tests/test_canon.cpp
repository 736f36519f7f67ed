#include <doctest.h>

#include <cmath>
#include <random>

#include "mnchain/canon.hpp"
#include "mnchain/model.hpp"

using namespace mnchain;

namespace {

CanonicalForm decompose(const ModelParams& p, const SectorConfig& sec) {
  auto b = build_b_matrix(p, sec);
  return svd_canonical(b.m, b_matrix_det_sign(p, sec));
}

void check_form_invariants(const Eigen::MatrixXd& B, const CanonicalForm& c) {
  double scale = std::max(1.0, B.norm());
  CHECK((c.Umat * c.Lambda.asDiagonal() * c.Vmat.transpose() - B).norm() <
        1e-10 * scale);
  int n = static_cast<int>(B.rows());
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  CHECK((c.Umat.transpose() * c.Umat - eye).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((c.Vmat.transpose() * c.Vmat - eye).cwiseAbs().maxCoeff() < 1e-12);
  for (int k = 0; k < n; ++k) {
    CHECK(c.Lambda(k) >= 0.0);
    if (k) CHECK(c.Lambda(k) <= c.Lambda(k - 1) + 1e-14 * scale);
  }
  CHECK(c.E0 == doctest::Approx(-0.5 * c.Lambda.sum()));
}

}  // namespace

TEST_SUITE("canon") {

TEST_CASE("decoupled limits have closed-form spectra") {
  SUBCASE("free bond dimers") {
    auto c = decompose(ModelParams::uniform(4, 1.0, 0.0),
                       make_sector(SectorFamily::HomogeneousPlus, 4));
    CHECK(c.Lambda(0) == doctest::Approx(4.0));
    CHECK(c.Lambda(2) == doctest::Approx(4.0));
    CHECK(c.Lambda(3) == doctest::Approx(0.0));
    CHECK(c.E0 == doctest::Approx(-6.0));
    CHECK(c.zero_modes == 1);
  }
  SUBCASE("pure interaction") {
    auto c = decompose(ModelParams::uniform(4, 1e-300, 1.5),
                       make_sector(SectorFamily::HomogeneousPlus, 4));
    for (int k = 0; k < 4; ++k) CHECK(c.Lambda(k) == doctest::Approx(3.0));
    CHECK(c.E0 == doctest::Approx(-6.0));
  }
  SUBCASE("staggered molecules") {
    auto c = decompose(ModelParams::uniform(4, 1.0, 1.0),
                       make_sector(SectorFamily::StaggeredA, 4));
    CHECK(c.Lambda(0) == doctest::Approx(2 * (std::sqrt(2.0) + 1)));
    CHECK(c.Lambda(1) == doctest::Approx(2.0));
    CHECK(c.Lambda(2) == doctest::Approx(2.0));
    CHECK(c.Lambda(3) == doctest::Approx(2 * (std::sqrt(2.0) - 1)));
  }
}

TEST_CASE("decomposition invariants hold on random sector matrices") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> du(-3.0, 3.0), dl(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = ModelParams::uniform(10, 1.0, du(rng), dl(rng));
    std::vector<int> r(10);
    for (auto& x : r) x = (rng() & 1) ? 1 : -1;
    auto b = build_b_matrix(p, make_custom_sector(r));
    check_form_invariants(b.m, svd_canonical(b.m));
  }
  SUBCASE("degenerate block-repeated spectra are decomposed accurately") {
    // exercises the fallback path behind the divide-and-conquer backend
    auto p = ModelParams::uniform(16, 0.595560, -3.559255);
    auto sec = make_sector(SectorFamily::StaggeredA, 16);
    auto b = build_b_matrix(p, sec);
    check_form_invariants(b.m, svd_canonical(b.m));
  }
}

TEST_CASE("equilibrium correlations") {
  SUBCASE("pure interaction gives the negative identity") {
    auto corr = equilibrium_correlations(
        decompose(ModelParams::uniform(4, 1e-300, 2.0),
                  make_sector(SectorFamily::HomogeneousPlus, 4)));
    CHECK((corr.K_ab + Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK(corr.K_aa.cwiseAbs().maxCoeff() == 0.0);
    CHECK(corr.K_bb.cwiseAbs().maxCoeff() == 0.0);
    CHECK(corr.tau == 0.0);
  }
  SUBCASE("correlation matrix is the orthogonal polar factor") {
    auto p = ModelParams::uniform(4, 1.0, 1.0);
    auto sec = make_sector(SectorFamily::HomogeneousPlus, 4);
    auto b = build_b_matrix(p, sec);
    auto corr = equilibrium_correlations(decompose(p, sec));
    Eigen::MatrixXd s = b.m.transpose() * corr.K_ab;
    CHECK((s - s.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
  }
  SUBCASE("entries stay within physical bounds") {
    auto corr = equilibrium_correlations(
        decompose(ModelParams::uniform(12, 1.0, -1.7, 0.3),
                  make_sector(SectorFamily::HomogeneousMinus, 12)));
    CHECK(corr.K_ab.cwiseAbs().maxCoeff() <= 1.0 + 1e-10);
  }
  SUBCASE("staggered sectors give block-diagonal correlations") {
    double t = 1.3, U = 0.7;
    int L = 8;
    auto corr = equilibrium_correlations(
        decompose(ModelParams::uniform(L, t, U),
                  make_sector(SectorFamily::StaggeredA, L)));
    double n = std::sqrt(t * t + U * U);
    CHECK(corr.K_ab(0, 0) == doctest::Approx(-1.0));      // -U/|U| edge
    CHECK(corr.K_ab(L - 1, L - 1) == doctest::Approx(-1.0));
    auto sec = make_sector(SectorFamily::StaggeredA, L);
    for (int m = 1; m + 1 < L; m += 2) {  // molecules at (2,3), (4,5), ...
      double r = sec.r[m];  // both molecule sites share this sign
      CHECK(corr.K_ab(m, m) == doctest::Approx(-U / n));
      CHECK(corr.K_ab(m, m + 1) == doctest::Approx(-r * t / n));
      CHECK(corr.K_ab(m + 1, m) == doctest::Approx(r * t / n));
      CHECK(corr.K_ab(m + 1, m + 1) == doctest::Approx(-U / n));
    }
    CHECK(std::abs(corr.K_ab(0, 1)) < 1e-12);   // outside every block
    CHECK(std::abs(corr.K_ab(2, 4)) < 1e-12);
  }
}

TEST_CASE("ground-state fermionic parity is even for gapped homogeneous sectors") {
  for (double U : {0.7, -0.9, 3.0, -3.0}) {
    auto corr = equilibrium_correlations(
        decompose(ModelParams::uniform(10, 1.0, U),
                  make_sector(SectorFamily::HomogeneousPlus, 10)));
    CHECK(corr.K_ab.determinant() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("zero-mode sign is pinned by the structural determinant sign") {
  // shrink the edge coupling toward zero; the polar factor must stay on the
  // branch selected by sign det(B) instead of flipping arbitrarily
  int L = 8;
  double U = 1.0;
  auto sec = make_sector(SectorFamily::HomogeneousPlus, L);
  auto ref = ModelParams::uniform(L, 1.0, U, 0.0, 2 * (1e-4 - 1) * U);
  auto refK = equilibrium_correlations(decompose(ref, sec)).K_ab;
  auto tiny = ModelParams::uniform(L, 1.0, U, 0.0, 2 * (1e-9 - 1) * U);
  auto tinyK = equilibrium_correlations(decompose(tiny, sec)).K_ab;
  CHECK((refK - tinyK).cwiseAbs().maxCoeff() < 1e-3);
  CHECK(tinyK.determinant() ==
        doctest::Approx(b_matrix_det_sign(tiny, sec)).epsilon(1e-8));
}

TEST_CASE("band reference") {
  CHECK(band_reference(0.0, 2.0, 1.0) == doctest::Approx(0.0));
  CHECK(band_reference(M_PI, 2.0, 1.0) == doctest::Approx(8.0));
  CHECK(band_reference(M_PI / 2, 2.0, 1.0) == doctest::Approx(4 * std::sqrt(2.0)));
  SUBCASE("extrema bound the finite-size bulk spectrum") {
    double U = 3.0;
    auto c = decompose(ModelParams::uniform(64, 1.0, U),
                       make_sector(SectorFamily::HomogeneousPlus, 64));
    CHECK(c.Lambda(0) <= band_reference(M_PI, U, 1.0) + 1e-9);
    CHECK(c.Lambda(63) >= band_reference(0.0, U, 1.0) - 1e-9);
  }
  SUBCASE("smallest singular value approaches the lower band edge monotonically") {
    double U = 3.0, prev = -1.0;
    double edge = band_reference(0.0, U, 1.0);
    for (int L : {8, 16, 32, 64}) {
      auto c = decompose(ModelParams::uniform(L, 1.0, U),
                         make_sector(SectorFamily::HomogeneousPlus, L));
      double gap = c.Lambda(L - 1) - edge;
      CHECK(gap > 0.0);
      if (prev >= 0.0) CHECK(gap < prev);
      prev = gap;
    }
  }
}

TEST_CASE("edge-mode gap asymptotics") {
  CHECK(edge_gap_reference(0.0, 1.0, 1.0, 16) == doctest::Approx(0.0));
  CHECK(edge_gap_reference(1.0, 1.0, 0.0, 16) == doctest::Approx(0.0));
  CHECK_THROWS(edge_gap_reference(2.5, 1.0, 1.0, 16));
  SUBCASE("asymptotic formula matches the numeric gap within 20 percent") {
    auto c = decompose(ModelParams::uniform(16, 1.0, 1.0),
                       make_sector(SectorFamily::HomogeneousPlus, 16));
    double ref = edge_gap_reference(1.0, 1.0, 1.0, 16);
    CHECK(std::abs(c.Lambda(15) - ref) < 0.2 * ref);
  }
}

TEST_CASE("structural determinant sign handles under- and overflowing products") {
  int L = 400;
  auto p = ModelParams::uniform(L, 1.0, 1.0);  // det ~ (-2)^400 overflows
  auto sec = make_sector(SectorFamily::HomogeneousPlus, L);
  CHECK(b_matrix_det_sign(p, sec) == 1);
  auto m = ModelParams::uniform(L, 1.0, -1.0);
  CHECK(b_matrix_det_sign(m, sec) == 1);  // (+2)^400
}

}  // TEST_SUITE
