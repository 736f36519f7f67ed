#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mnchain/canon.hpp"
#include "mnchain/model.hpp"

using namespace mnchain;

TEST_SUITE("model") {

TEST_CASE("named sector families produce the documented sign patterns") {
  CHECK(make_sector(SectorFamily::HomogeneousPlus, 4).r ==
        std::vector<int>{1, 1, 1, 1});
  CHECK(make_sector(SectorFamily::HomogeneousMinus, 4).r ==
        std::vector<int>{-1, -1, -1, -1});
  CHECK(make_sector(SectorFamily::StaggeredA, 4).r ==
        std::vector<int>{1, -1, -1, 1});
  SUBCASE("staggered-B is the global sign flip of staggered-A") {
    auto a = make_sector(SectorFamily::StaggeredA, 8).r;
    auto b = make_sector(SectorFamily::StaggeredB, 8).r;
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == -a[i]);
  }
  SUBCASE("bulk-homogeneous keeps the bulk sign and prescribed edges") {
    CHECK(make_bulk_sector(4, -1, -1, 1).r == std::vector<int>{-1, 1, 1, -1});
  }
  CHECK_THROWS(make_sector(SectorFamily::HomogeneousPlus, 5));
}

TEST_CASE("coupling matrix entries follow the sector signs") {
  SUBCASE("homogeneous chain") {
    auto p = ModelParams::uniform(4, 1.0, 0.5, 0.7);
    auto sec = make_sector(SectorFamily::HomogeneousPlus, 4);
    auto b = build_b_matrix(p, sec);
    for (int i = 0; i < 4; ++i) CHECK(b.m(i, i) == doctest::Approx(-1.0));
    for (int i = 0; i < 3; ++i) CHECK(b.m(i, i + 1) == doctest::Approx(-4.0));
    CHECK(b.m(1, 0) == 0.0);
    CHECK(b.offset == doctest::Approx(2 * 0.7));
  }
  SUBCASE("alternating signs cancel every bond") {
    auto p = ModelParams::uniform(4, 1.0, 2.0);
    auto sec = make_custom_sector({1, -1, 1, -1});
    auto b = build_b_matrix(p, sec);
    for (int i = 0; i < 3; ++i) CHECK(b.m(i, i + 1) == 0.0);
  }
  SUBCASE("edge pairing rescales only the last diagonal entry") {
    auto p = ModelParams::uniform(4, 1.0, 1.0, 0.0, 2.0, 0.0);
    auto sec = make_sector(SectorFamily::HomogeneousPlus, 4);
    auto b = build_b_matrix(p, sec);
    CHECK(b.m(3, 3) == doctest::Approx(-4.0));  // -2U - delta0 r_L
    CHECK(b.m(0, 0) == doctest::Approx(-2.0));
  }
  SUBCASE("periodic boundary closes the ring and drops the edge term") {
    auto p = ModelParams::uniform(6, 1.0, 1.0, 0.0, 0.0, 0.0, Boundary::Periodic);
    auto sec = make_sector(SectorFamily::HomogeneousPlus, 6);
    auto b = build_b_matrix(p, sec);
    CHECK(b.m(5, 0) == doctest::Approx(-4.0));
    CHECK(b.m(5, 5) == doctest::Approx(-2.0));
  }
  SUBCASE("open boundary keeps the bidiagonal structure") {
    auto p = ModelParams::uniform(8, 1.3, 0.9, 0.2);
    auto sec = make_sector(SectorFamily::HomogeneousPlus, 8);
    auto b = build_b_matrix(p, sec);
    int nonzero = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (b.m(i, j) != 0.0) {
          ++nonzero;
          CHECK((j == i || j == i + 1));
        }
    CHECK(nonzero == 2 * 8 - 1);
  }
}

TEST_CASE("sector energy offset") {
  SUBCASE("staggered molecules minimize the dimerized coupling") {
    auto p = ModelParams::uniform(4, 1.0, 0.0, 1.0);
    CHECK(sector_offset(p, make_sector(SectorFamily::StaggeredA, 4)) ==
          doctest::Approx(-2.0));
    CHECK(sector_offset(p, make_sector(SectorFamily::HomogeneousPlus, 4)) ==
          doctest::Approx(2.0));
  }
  SUBCASE("edge constant enters with the sign of the last site") {
    auto p = ModelParams::uniform(4, 1.0, 1.0, 0.0, 1.0, 0.0);
    CHECK(p.c0() == doctest::Approx(0.5));
    CHECK(sector_offset(p, make_bulk_sector(4, 1, -1, 1)) ==
          doctest::Approx(-0.5));
  }
  SUBCASE("edge contributions cancel between sign-flipped partners") {
    auto p = ModelParams::uniform(6, 1.0, 0.8, 0.4, 0.3, -0.2);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> r(6), rf(6);
      for (int j = 0; j < 6; ++j) {
        r[j] = (rng() & 1) ? 1 : -1;
        rf[j] = -r[j];
      }
      double pair_sum = 0.0;
      for (int i = 0; i < 3; ++i) pair_sum += r[2 * i] * r[2 * i + 1];
      CHECK(sector_offset(p, make_custom_sector(r)) +
                sector_offset(p, make_custom_sector(rf)) ==
            doctest::Approx(2 * 0.4 * pair_sum));
    }
  }
}

TEST_CASE("singular spectrum is invariant under a global sector sign flip") {
  auto p = ModelParams::uniform(8, 0.9, 1.7, 0.0);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> r(8), rf(8);
    for (int j = 0; j < 8; ++j) {
      r[j] = (rng() & 1) ? 1 : -1;
      rf[j] = -r[j];
    }
    auto ca = svd_canonical(build_b_matrix(p, make_custom_sector(r)).m);
    auto cb = svd_canonical(build_b_matrix(p, make_custom_sector(rf)).m);
    CHECK((ca.Lambda - cb.Lambda).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("interaction patterns") {
  CHECK(disorder_pattern(0.0, 2, 3.0, 4) == std::vector<double>{0, 3, 0, 3});
  CHECK(disorder_pattern(0.5, 3, 2.0, 6) ==
        std::vector<double>{1, 1, 2, 1, 1, 2});
  SUBCASE("x = 1 collapses to the homogeneous vector") {
    for (double u : disorder_pattern(1.0, 4, 2.5, 8))
      CHECK(u == doctest::Approx(2.5));
  }
  CHECK_THROWS(disorder_pattern(0.5, 9, 1.0, 4));
  SUBCASE("randomized variant is seed-deterministic and two-valued") {
    auto a = random_disorder_pattern(0.25, 0.5, 2.0, 32, 42);
    auto b = random_disorder_pattern(0.25, 0.5, 2.0, 32, 42);
    CHECK(a == b);
    for (double u : a) CHECK((u == doctest::Approx(0.5) || u == doctest::Approx(2.0)));
    auto c = random_disorder_pattern(0.25, 0.5, 2.0, 32, 43);
    CHECK(a != c);
  }
}

TEST_CASE("parameter validation rejects ill-formed inputs") {
  CHECK_THROWS(ModelParams::uniform(5, 1.0, 1.0).validate());
  CHECK_THROWS(ModelParams::uniform(4, -1.0, 1.0).validate());
  SUBCASE("per-site interaction length must match the chain") {
    auto p = ModelParams::uniform(4, 1.0, 1.0);
    p.u.pop_back();
    CHECK_THROWS(p.validate());
  }
  SUBCASE("periodic chains exclude boundary couplings") {
    CHECK_THROWS(
        ModelParams::uniform(4, 1.0, 1.0, 0.0, 0.5, 0.0, Boundary::Periodic)
            .validate());
  }
  SUBCASE("sector length must match the model") {
    auto p = ModelParams::uniform(6, 1.0, 1.0);
    CHECK_THROWS(build_b_matrix(p, make_sector(SectorFamily::HomogeneousPlus, 4)));
  }
}

}  // TEST_SUITE
