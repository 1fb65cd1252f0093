#include <random>

#include "doctest.h"

#include "exdisc/distribution.hpp"
#include "exdisc/errors.hpp"
#include "exdisc/json_io.hpp"
#include "test_support.hpp"

using namespace exdisc;
using exdisc::testing::Q;

TEST_CASE("density of D for grids") {
  // translated grid: indicator of [-N delta, 1 - N delta)
  PiecewisePoly g = density_of_D(translated_grid(3, Q("1/9")));
  CHECK(g == PiecewisePoly::indicator(Q("-1/3"), Q("2/3")));
  CHECK(density_of_D(centered_grid(4)) == bspline(1));
  CHECK(density_of_D(translated_grid(5, Q("0"))) == PiecewisePoly::indicator(Q("0"), Q("1")));
  CHECK(density_of_D(PointSet({Q("0"), Q("1")})) ==
        PiecewisePoly::indicator(Q("-1"), Q("1")).scaled(Q("1/2")));
}

TEST_CASE("density invariants on random sets") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    long n = 1 + static_cast<long>(rng() % 12);
    PointSet p = random_set(n, rng(), 48);
    PiecewisePoly g = density_of_D(p);
    CHECK(g.integral() == 1);
    CHECK(g.is_step());
    for (const auto& piece : g.pieces()) {
      Rational v = piece.is_zero() ? Rational(0) : piece.coeffs()[0];
      CHECK(v >= 0);
      CHECK(v <= 1);
      Rational scaled = v * n;
      CHECK(is_integer(scaled));  // values lie in {j/N}
    }
    // support is an interval containing 0
    CHECK(g.support_lo() <= 0);
    CHECK(g.support_hi() >= 0);
  }
}

TEST_CASE("profile of |D| for the grid and simple sets") {
  DistributionProfile grid = grid_profile_D();
  CHECK(grid(Q("1/4")) == Q("1/2"));
  CHECK(grid(Q("1/2")) == 1);
  CHECK(grid(Q("2")) == 1);
  CHECK(grid(Q("0")) == 0);

  DistributionProfile one = dist_D(PointSet({Q("0")}));
  CHECK(one(Q("1/2")) == Q("1/2"));

  for (long n : {1L, 2L, 3L, 7L, 10L}) {
    CHECK(dist_D(centered_grid(n)) == grid);
  }
}

TEST_CASE("profile of |Dtilde| for the grid and frozen values") {
  DistributionProfile grid = grid_profile_Dtilde();
  CHECK(grid(Q("1/2")) == Q("3/4"));
  CHECK(grid(Q("1")) == 1);
  CHECK(grid(Q("2")) == 1);

  for (long n : {1L, 2L, 5L}) {
    CHECK(dist_Dtilde(centered_grid(n)) == grid);
    CHECK(dist_Dtilde(translated_grid(n, rat(1, 3 * n))) == grid);
  }

  DistributionProfile two = dist_Dtilde(PointSet({Q("0"), Q("1")}));
  CHECK(two(Q("1")) == Q("3/4"));
  CHECK(two(Q("1/2")) == Q("7/16"));
}

TEST_CASE("sublevel oracles agree with the convolution pipeline") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    long n = 1 + static_cast<long>(rng() % 10);
    PointSet p = random_set(n, rng(), 36);
    DistributionProfile d1 = dist_D(p);
    DistributionProfile d2 = dist_Dtilde(p);
    CHECK(area_profile_D_direct(p) == d1);
    CHECK(area_profile_Dtilde_direct(p) == d2);
    for (long k = 1; k <= 8; ++k) {
      Rational alpha = rat(k, 5);
      CHECK(sublevel_measure_D_direct(p, alpha) == d1(alpha));
      CHECK(sublevel_measure_Dtilde_direct(p, alpha) == d2(alpha));
    }
  }
  CHECK_THROWS_AS(sublevel_measure_D_direct(centered_grid(2), Q("0")), Error);
}

TEST_CASE("profiles saturate above the star discrepancies") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    PointSet p = random_set(1 + static_cast<long>(rng() % 8), rng(), 30);
    DistributionProfile d1 = dist_D(p);
    DistributionProfile d2 = dist_Dtilde(p);
    CHECK(d1.alpha_max == star_discrepancy_direct(p));
    CHECK(d2.alpha_max == extreme_star_direct(p));
    CHECK(d1(d1.alpha_max) == 1);
    CHECK(d2(d2.alpha_max) == 1);
    CHECK(sublevel_measure_D_direct(p, d1.alpha_max + 1) == 1);
    CHECK(sublevel_measure_Dtilde_direct(p, d2.alpha_max + 1) == 1);
  }
}

TEST_CASE("one-parameter profiles are 2-Lipschitz") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    PointSet p = random_set(1 + static_cast<long>(rng() % 10), rng(), 30);
    DistributionProfile prof = dist_D(p);
    const auto& bp = prof.cdf.breakpoints();
    const auto& ps = prof.cdf.pieces();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      Polynomial margin = Polynomial::constant(Q("2")) - ps[i].derivative();
      CHECK(nonneg_on(margin, bp[i], bp[i + 1]));
      CHECK(nonneg_on(ps[i].derivative(), bp[i], bp[i + 1]));  // non-decreasing
    }
  }
}

TEST_CASE("profile comparison: dominance, equality, strict gap witness") {
  DistributionProfile grid = grid_profile_D();
  auto equal_cmp = compare_profiles(dist_D(centered_grid(6)), grid);
  CHECK(equal_cmp.dominated);
  CHECK(equal_cmp.equal);

  PointSet p({Q("0"), Q("3/4")});
  auto cmp = compare_profiles(dist_D(p), grid);
  CHECK(cmp.dominated);
  CHECK_FALSE(cmp.equal);
  REQUIRE(cmp.strict_gap.has_value());
  auto [lo, hi] = *cmp.strict_gap;
  CHECK(lo < hi);
  Rational mid = (lo + hi) / 2;
  CHECK(dist_D(p)(mid) < grid(mid));  // witness re-evaluates strictly

  auto cmp2 = compare_profiles(dist_Dtilde(p), grid_profile_Dtilde());
  CHECK(cmp2.dominated);
  CHECK_FALSE(cmp2.equal);
  REQUIRE(cmp2.strict_gap.has_value());

  // a profile that exceeds the bound is reported with a witness
  auto bad = compare_profiles(grid, dist_D(p));
  CHECK_FALSE(bad.dominated);
  REQUIRE(bad.violation_alpha.has_value());
  CHECK(bad.violation_candidate > bad.violation_bound);
}

TEST_CASE("piecewise JSON round trip") {
  PiecewisePoly m2 = bspline(2);
  json j = piecewise_to_json(m2);
  CHECK(j["breakpoints"] == json::array({"-1", "0", "1"}));
  CHECK(piecewise_from_json(j) == m2);
  CHECK(piecewise_from_json(piecewise_to_json(PiecewisePoly())).is_zero());

  json m1 = json::parse(R"({"breakpoints": ["-1/2","1/2"], "pieces": [["1"]]})");
  CHECK(piecewise_from_json(m1) == bspline(1));
  CHECK_THROWS_AS(piecewise_from_json(json::parse(R"({"breakpoints": ["0"], "pieces": [["1"]]})")),
                  Error);
  CHECK_THROWS_AS(
      piecewise_from_json(json::parse(R"({"breakpoints": ["1","0"], "pieces": [["1"]]})")), Error);
}

TEST_CASE("survival and full cdf materializations") {
  DistributionProfile grid = grid_profile_D();
  PiecewisePoly surv = grid.survival();
  CHECK(surv(Q("1/4")) == Q("1/2"));
  CHECK(surv(Q("3/4")) == 0);
  CHECK(surv.integral() == Q("1/4"));  // integral of (1-2a) over (0,1/2)
  PiecewisePoly full = grid.full_cdf(Q("2"));
  CHECK(full(Q("1")) == 1);
  CHECK(full(Q("1/4")) == Q("1/2"));
}
