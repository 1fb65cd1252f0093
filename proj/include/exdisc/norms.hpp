#pragma once

#include <optional>
#include <string>

#include "exdisc/distribution.hpp"
#include "exdisc/piecewise.hpp"

namespace exdisc {

// Strictly increasing, absolutely continuous weight psi with psi(0) = 0,
// given piecewise polynomially on [0, S] and extended beyond S by its last
// piece. Psi and T are the exact antiderivatives with Psi(0) = T(0) = 0,
// Psi' = psi, T' = Psi.
class PsiSpec {
 public:
  // Validates: support starts at 0, psi(0) = 0, continuity at breakpoints,
  // strictly increasing on [0, infinity) including the extension.
  static PsiSpec from_pieces(const PiecewisePoly& psi);

  // psi_p(s) = s^p for integer p >= 1, specified on [0, 1].
  static PsiSpec power(long p);

  // Named presets: "power:<k>", "plinear", "pquad".
  static PsiSpec preset(const std::string& name);

  Rational psi_at(const Rational& s) const;
  Rational big_psi_at(const Rational& s) const;  // Psi
  Rational big_t_at(const Rational& s) const;    // T

  // psi' materialized on [0, upto] (derivative of the extension past S).
  PiecewisePoly derivative_on(const Rational& upto) const;

  const PiecewisePoly& pieces() const { return psi_; }
  const Rational& domain_end() const { return domain_end_; }

 private:
  PsiSpec() = default;
  PiecewisePoly psi_;         // on [0, S]
  PiecewisePoly big_psi_;     // Psi on [0, S]
  PiecewisePoly big_t_;       // T on [0, S]
  Polynomial ext_psi_;        // pieces for s >= S
  Polynomial ext_big_psi_;
  Polynomial ext_big_t_;
  Rational domain_end_ = Rational(0);  // S
};

struct NormValue {
  std::string kind;
  std::optional<Rational> exact;
  double approx = 0.0;
  double error_bound = 0.0;
};

// ||f||_p^p = integral of p alpha^(p-1) (1 - F(alpha)) d alpha. Exact
// rational for integer p; otherwise adaptive quadrature with absolute error
// <= 1e-12. Throws InvalidExponent for p <= 0.
NormValue lp_norm_pow(const DistributionProfile& profile, const Rational& p);

// Luxemburg-type norm inf{K > 0 : integral of psi(|f|/K) <= 1}, solved by
// bisection on the exact membership predicate; |result - K*| <= tol.
NormValue psi_norm(const DistributionProfile& profile, const PsiSpec& psi, const Rational& tol);

// Exact membership integral of psi(|f|/K) evaluated through the distribution
// function; exposed for the solver's bracket checks and for self-tests.
Rational psi_membership_integral(const DistributionProfile& profile, const PsiSpec& psi,
                                 const Rational& k);

// ||f||_{p,q}^q = p integral of alpha^(q-1) (1 - F(alpha))^(p/q) d alpha.
// Exact when q and p/q are positive integers; otherwise numeric with
// absolute error <= 1e-10.
NormValue lorentz_norm_pow(const DistributionProfile& profile, const Rational& p,
                           const Rational& q);

// Minimal values over all N-element point sets.
NormValue min_psi_norm_D(const PsiSpec& psi, const Rational& tol);       // 2K Psi(1/(2K)) <= 1
NormValue min_psi_norm_Dtilde(const PsiSpec& psi, const Rational& tol);  // 2K^2 T(1/K) <= 1

NormValue min_lp_pow_D(const Rational& p);       // 1 / (2^p (p+1))
NormValue min_lp_pow_Dtilde(const Rational& p);  // 2 / ((p+1)(p+2))

NormValue min_lorentz_pow_D(const Rational& p, const Rational& q);       // p/2^q B(q, 1+p/q)
NormValue min_lorentz_pow_Dtilde(const Rational& p, const Rational& q);  // p B(q, 1+2p/q)

// Beta function: exact rational for positive integer arguments, log-gamma
// based otherwise (relative error ~1e-12).
Rational beta_exact(long x, long y);
double beta_numeric(double x, double y);

}  // namespace exdisc
