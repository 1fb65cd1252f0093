#include <cmath>
#include <random>

#include "doctest.h"

#include "exdisc/discrepancy.hpp"
#include "exdisc/errors.hpp"
#include "exdisc/norms.hpp"
#include "test_support.hpp"

using namespace exdisc;
using exdisc::testing::Q;

TEST_CASE("PsiSpec validation") {
  CHECK_NOTHROW(PsiSpec::power(1));
  CHECK_NOTHROW(PsiSpec::power(4));
  CHECK_NOTHROW(PsiSpec::preset("plinear"));
  CHECK_NOTHROW(PsiSpec::preset("pquad"));
  CHECK_THROWS_AS(PsiSpec::preset("nope"), Error);
  CHECK_THROWS_AS(PsiSpec::power(0), Error);

  // psi(0) != 0
  CHECK_THROWS_AS(PsiSpec::from_pieces(PiecewisePoly::from_pieces(
                      {Q("0"), Q("1")}, {Polynomial({Q("1"), Q("1")})})),
                  Error);
  // decreasing piece
  CHECK_THROWS_AS(PsiSpec::from_pieces(PiecewisePoly::from_pieces(
                      {Q("0"), Q("1")}, {Polynomial({Q("0"), Q("-1")})})),
                  Error);
  // discontinuity
  CHECK_THROWS_AS(PsiSpec::from_pieces(PiecewisePoly::from_pieces(
                      {Q("0"), Q("1"), Q("2")},
                      {Polynomial({Q("0"), Q("1")}), Polynomial({Q("5"), Q("1")})})),
                  Error);
  // constant plateau breaks strict monotonicity
  CHECK_THROWS_AS(PsiSpec::from_pieces(PiecewisePoly::from_pieces(
                      {Q("0"), Q("1"), Q("2")},
                      {Polynomial({Q("0"), Q("1")}), Polynomial::constant(Q("1"))})),
                  Error);
  // domain must start at 0
  CHECK_THROWS_AS(PsiSpec::from_pieces(PiecewisePoly::from_pieces(
                      {Q("1"), Q("2")}, {Polynomial({Q("-1"), Q("1")})})),
                  Error);
}

TEST_CASE("PsiSpec antiderivatives and extension") {
  PsiSpec p2 = PsiSpec::power(2);
  CHECK(p2.psi_at(Q("1/2")) == Q("1/4"));
  CHECK(p2.psi_at(Q("3")) == Q("9"));  // extension beyond S = 1
  CHECK(p2.big_psi_at(Q("1")) == Q("1/3"));
  CHECK(p2.big_psi_at(Q("2")) == Q("8/3"));
  CHECK(p2.big_t_at(Q("1")) == Q("1/12"));
  CHECK(p2.big_t_at(Q("2")) == Q("16/12"));

  PsiSpec plin = PsiSpec::preset("plinear");  // s, then 2s-1
  CHECK(plin.psi_at(Q("1/2")) == Q("1/2"));
  CHECK(plin.psi_at(Q("2")) == Q("3"));
  CHECK(plin.psi_at(Q("5")) == Q("9"));                 // extension
  CHECK(plin.big_psi_at(Q("2")) == Q("1/2") + Q("2"));  // 1/2 + int_1^2 (2s-1)
}

TEST_CASE("grid L_p powers are the published minima") {
  DistributionProfile d = grid_profile_D();
  DistributionProfile dt = grid_profile_Dtilde();
  CHECK(*lp_norm_pow(d, Q("1")).exact == Q("1/4"));
  CHECK(*lp_norm_pow(d, Q("2")).exact == Q("1/12"));
  CHECK(*lp_norm_pow(d, Q("3")).exact == Q("1/32"));
  CHECK(*lp_norm_pow(d, Q("4")).exact == Q("1/80"));
  CHECK(*lp_norm_pow(dt, Q("1")).exact == Q("1/3"));
  CHECK(*lp_norm_pow(dt, Q("2")).exact == Q("1/6"));
  CHECK(*lp_norm_pow(dt, Q("3")).exact == Q("1/10"));
  CHECK(*lp_norm_pow(dt, Q("4")).exact == Q("1/15"));
  CHECK_THROWS_AS(lp_norm_pow(d, Q("0")), Error);
  CHECK_THROWS_AS(lp_norm_pow(d, Q("-2")), Error);
}

TEST_CASE("distribution route equals direct integration of |D|^p") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    PointSet p = random_set(1 + static_cast<long>(rng() % 10), rng(), 30);
    DistributionProfile prof = dist_D(p);
    for (long e : {1L, 2L, 3L}) {
      auto v = lp_norm_pow(prof, Rational(e));
      REQUIRE(v.exact.has_value());
      CHECK(*v.exact == direct_lp_pow(p, e));
    }
  }
}

TEST_CASE("non-integer exponents fall back to quadrature") {
  DistributionProfile d = grid_profile_D();
  auto v = lp_norm_pow(d, Q("3/2"));
  CHECK_FALSE(v.exact.has_value());
  // closed form: 2^(-p)/(p+1) at p = 3/2
  double expected = std::pow(2.0, -1.5) / 2.5;
  CHECK(std::abs(v.approx - expected) < 1e-11);

  auto w = lp_norm_pow(d, Q("1/2"));  // integrable singularity at 0
  CHECK(std::abs(w.approx - std::pow(2.0, -0.5) / 1.5) < 1e-10);
}

TEST_CASE("psi membership integral identities") {
  DistributionProfile d = grid_profile_D();
  // with psi = s, K = ||D||_1 the membership integral is exactly 1
  CHECK(psi_membership_integral(d, PsiSpec::power(1), Q("1/4")) == 1);
  // psi = s^2, K^2 = 1/12 makes it 1; test at the rational K = 1/3 > 12^(-1/2)
  CHECK(psi_membership_integral(d, PsiSpec::power(2), Q("1/3")) < 1);
  CHECK(psi_membership_integral(d, PsiSpec::power(2), Q("1/4")) > 1);
}

TEST_CASE("psi_norm matches the L_p norms on the grid profile") {
  DistributionProfile d = grid_profile_D();
  Rational tol = Q("1/1000000000000");
  for (long p = 1; p <= 3; ++p) {
    NormValue v = psi_norm(d, PsiSpec::power(p), tol);
    double expected = std::pow(to_double(*min_lp_pow_D(Rational(p)).exact), 1.0 / p);
    CHECK(std::abs(v.approx - expected) < 1e-10);
  }
  CHECK_THROWS_AS(psi_norm(d, PsiSpec::power(1), Q("0")), Error);
  CHECK_THROWS_AS(psi_norm(d, PsiSpec::power(1), Q("-1")), Error);
}

TEST_CASE("minimum psi-norm solvers") {
  Rational tol = Q("1/1000000000000");
  NormValue a = min_psi_norm_D(PsiSpec::power(2), tol);
  CHECK(std::abs(a.approx - std::sqrt(1.0 / 12.0)) < 1e-10);
  NormValue b = min_psi_norm_Dtilde(PsiSpec::power(1), tol);
  CHECK(std::abs(b.approx - 1.0 / 3.0) < 1e-10);
  NormValue c = min_psi_norm_Dtilde(PsiSpec::power(2), tol);
  CHECK(std::abs(c.approx - std::sqrt(1.0 / 6.0)) < 1e-10);

  // solver agrees with the grid-profile norm within 2 tol for all presets
  DistributionProfile d = grid_profile_D();
  DistributionProfile dt = grid_profile_Dtilde();
  for (const char* name : {"power:1", "power:2", "power:3", "plinear", "pquad"}) {
    PsiSpec spec = PsiSpec::preset(name);
    CHECK(std::abs(min_psi_norm_D(spec, tol).approx - psi_norm(d, spec, tol).approx) <=
          2 * to_double(tol) + 1e-15);
    CHECK(std::abs(min_psi_norm_Dtilde(spec, tol).approx - psi_norm(dt, spec, tol).approx) <=
          2 * to_double(tol) + 1e-15);
  }
}

TEST_CASE("beta function") {
  CHECK(beta_exact(1, 1) == 1);
  CHECK(beta_exact(2, 2) == Q("1/6"));
  CHECK(beta_exact(2, 3) == Q("1/12"));
  CHECK(beta_exact(1, 3) == Q("1/3"));
  CHECK_THROWS_AS(beta_exact(0, 1), Error);
  for (long x = 1; x <= 5; ++x)
    for (long y = 1; y <= 5; ++y) {
      double rel = std::abs(beta_numeric(x, y) - to_double(beta_exact(x, y))) /
                   to_double(beta_exact(x, y));
      CHECK(rel < 1e-12);
    }
}

TEST_CASE("Lorentz norm powers on the grid profiles") {
  DistributionProfile d = grid_profile_D();
  DistributionProfile dt = grid_profile_Dtilde();
  CHECK(*lorentz_norm_pow(d, Q("1"), Q("1")).exact == Q("1/4"));
  CHECK(*lorentz_norm_pow(d, Q("2"), Q("2")).exact == Q("1/12"));
  CHECK(*lorentz_norm_pow(dt, Q("1"), Q("1")).exact == Q("1/3"));
  CHECK(*lorentz_norm_pow(dt, Q("2"), Q("2")).exact == Q("1/6"));
  // p/q integer with q = 1: exact on both routes
  CHECK(*lorentz_norm_pow(d, Q("2"), Q("1")).exact == Q("1/3"));
  CHECK(*min_lorentz_pow_D(Q("2"), Q("1")).exact == Q("1/3"));
  CHECK_THROWS_AS(lorentz_norm_pow(d, Q("0"), Q("1")), Error);
}

TEST_CASE("Lorentz minima closed forms and consistency") {
  for (long p = 1; p <= 3; ++p) {
    CHECK(*min_lorentz_pow_D(Rational(p), Rational(p)).exact ==
          *min_lp_pow_D(Rational(p)).exact);
    CHECK(*min_lorentz_pow_Dtilde(Rational(p), Rational(p)).exact ==
          *min_lp_pow_Dtilde(Rational(p)).exact);
  }
  // numeric-vs-exact cross checks for mixed pairs
  DistributionProfile d = grid_profile_D();
  DistributionProfile dt = grid_profile_Dtilde();
  for (long p = 1; p <= 3; ++p)
    for (long q = 1; q <= 3; ++q) {
      NormValue norm_d = lorentz_norm_pow(d, Rational(p), Rational(q));
      NormValue min_d = min_lorentz_pow_D(Rational(p), Rational(q));
      CHECK(std::abs(norm_d.approx - min_d.approx) < 1e-8);
      if (norm_d.exact && min_d.exact) CHECK(*norm_d.exact == *min_d.exact);
      NormValue norm_t = lorentz_norm_pow(dt, Rational(p), Rational(q));
      NormValue min_t = min_lorentz_pow_Dtilde(Rational(p), Rational(q));
      CHECK(std::abs(norm_t.approx - min_t.approx) < 1e-8);
      if (norm_t.exact && min_t.exact) CHECK(*norm_t.exact == *min_t.exact);
    }
}

TEST_CASE("L_p minima closed forms") {
  CHECK(*min_lp_pow_D(Q("1")).exact == Q("1/4"));
  CHECK(*min_lp_pow_D(Q("2")).exact == Q("1/12"));
  CHECK(*min_lp_pow_D(Q("3")).exact == Q("1/32"));
  CHECK(*min_lp_pow_Dtilde(Q("1")).exact == Q("1/3"));
  CHECK(*min_lp_pow_Dtilde(Q("2")).exact == Q("1/6"));
  CHECK(*min_lp_pow_Dtilde(Q("3")).exact == Q("1/10"));
  // quasi-norm range p < 1 stays available
  CHECK(*min_lp_pow_Dtilde(Q("1/2")).exact == Q("2") / (Q("3/2") * Q("5/2")));
  CHECK_FALSE(min_lp_pow_D(Q("1/2")).exact.has_value());
  CHECK_THROWS_AS(min_lp_pow_D(Q("0")), Error);
}

TEST_CASE("norms of non-grid sets exceed the minima, grids attain them") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    PointSet p = random_set(1 + static_cast<long>(rng() % 8), rng(), 20);
    bool centered = classify(p).kind == Classification::Kind::CenteredGrid;
    bool family = classify(p).is_grid_family();
    DistributionProfile prof_d = dist_D(p);
    DistributionProfile prof_t = dist_Dtilde(p);
    for (long e : {1L, 2L, 3L}) {
      Rational vd = *lp_norm_pow(prof_d, Rational(e)).exact;
      Rational vt = *lp_norm_pow(prof_t, Rational(e)).exact;
      CHECK(vd >= *min_lp_pow_D(Rational(e)).exact);
      CHECK((vd == *min_lp_pow_D(Rational(e)).exact) == centered);
      CHECK(vt >= *min_lp_pow_Dtilde(Rational(e)).exact);
      CHECK((vt == *min_lp_pow_Dtilde(Rational(e)).exact) == family);
    }
  }
}
