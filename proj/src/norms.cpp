#include "exdisc/norms.hpp"

#include <cmath>
#include <functional>

#include "exdisc/errors.hpp"

namespace exdisc {

namespace {

double eval_poly_d(const Polynomial& p, double x) {
  double acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * x + to_double(*it);
  return acc;
}

// Double-exponential quadrature; handles integrable endpoint singularities.
// Nodes are anchored by their exact offset from the endpoints so integrands
// singular at a or b are evaluated without cancellation.
double tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol) {
  const double half = (b - a) / 2;
  const double tmax = 3.8;
  // one parameter t >= 0 drives the symmetric node pair (a + off, b - off)
  auto node_sum = [&](double t) {
    double s = std::sinh(t) * M_PI_2;
    double ch = std::cosh(s);
    double w = M_PI_2 * std::cosh(t) / (ch * ch);
    double off = half * 2.0 / (std::exp(2.0 * s) + 1.0);  // half * (1 - tanh s)
    double sum = 0;
    if (double xl = a + off; xl > a && xl < b) {
      double v = f(xl);
      if (std::isfinite(v)) sum += w * v;
    }
    if (t > 0) {
      if (double xr = b - off; xr > a && xr < b) {
        double v = f(xr);
        if (std::isfinite(v)) sum += w * v;
      }
    }
    return sum;
  };
  double prev = 0, result = 0;
  for (int level = 0; level <= 10; ++level) {
    double h = 1.0 / static_cast<double>(1 << level);
    double sum = 0;
    for (double t = 0; t <= tmax; t += h) sum += node_sum(t);
    result = sum * h * half;
    if (level > 3 && std::abs(result - prev) < tol) return result;
    prev = result;
  }
  return result;
}

long as_small_integer(const Rational& r) {
  if (!is_integer(r)) return -1;
  if (!r.get_num().fits_slong_p()) return -1;
  return r.get_num().get_si();
}

// Upper bound for the real roots of p (Cauchy bound).
Rational root_bound(const Polynomial& p) {
  const auto& c = p.coeffs();
  Rational m(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, Rational(abs(c[i] / c.back())));
  return m + 1;
}

}  // namespace

PsiSpec PsiSpec::from_pieces(const PiecewisePoly& psi) {
  if (psi.is_zero()) raise(Errc::hypothesis_violated, "psi must not be identically zero");
  if (psi.support_lo() != 0) raise(Errc::hypothesis_violated, "psi must be given on [0, S]");
  if (psi.pieces().front()(Rational(0)) != 0) raise(Errc::hypothesis_violated, "psi(0) must be 0");
  const auto& bp = psi.breakpoints();
  const auto& ps = psi.pieces();
  for (std::size_t i = 0; i + 1 < ps.size(); ++i)
    if (ps[i](bp[i + 1]) != ps[i + 1](bp[i + 1]))
      raise(Errc::hypothesis_violated, "psi must be continuous");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Polynomial d = ps[i].derivative();
    if (d.is_zero() || !nonneg_on(d, bp[i], bp[i + 1]))
      raise(Errc::hypothesis_violated, "psi must be strictly increasing");
  }
  // the last piece extends beyond S and must keep increasing there
  Polynomial ext = ps.back();
  Polynomial ext_d = ext.derivative();
  if (ext_d.is_zero()) raise(Errc::hypothesis_violated, "psi must be strictly increasing");
  if (ext_d.coeffs().back() <= 0 ||
      !nonneg_on(ext_d, bp.back(), std::max(bp.back(), root_bound(ext_d)) + 1))
    raise(Errc::hypothesis_violated, "psi extension must be increasing");

  PsiSpec spec;
  spec.psi_ = psi;
  spec.domain_end_ = bp.back();
  spec.ext_psi_ = ext;
  spec.big_psi_ = cumulative_from(psi, Rational(0));
  Rational psi_cap = spec.big_psi_.pieces().back()(spec.domain_end_);
  Polynomial anti = ext.antiderivative();
  spec.ext_big_psi_ = anti + Polynomial::constant(psi_cap - anti(spec.domain_end_));
  spec.big_t_ = cumulative_from(spec.big_psi_, Rational(0));
  Rational t_cap = spec.big_t_.pieces().back()(spec.domain_end_);
  Polynomial anti2 = spec.ext_big_psi_.antiderivative();
  spec.ext_big_t_ = anti2 + Polynomial::constant(t_cap - anti2(spec.domain_end_));
  return spec;
}

PsiSpec PsiSpec::power(long p) {
  if (p < 1) raise(Errc::invalid_exponent, "psi power must be a positive integer");
  std::vector<Rational> coeffs(static_cast<std::size_t>(p) + 1, Rational(0));
  coeffs.back() = 1;
  return from_pieces(
      PiecewisePoly::from_pieces({Rational(0), Rational(1)}, {Polynomial(std::move(coeffs))}));
}

PsiSpec PsiSpec::preset(const std::string& name) {
  if (name.rfind("power:", 0) == 0) {
    return power(std::stol(name.substr(6)));
  }
  if (name == "plinear") {
    // s on [0,1], 2s-1 on [1,2]
    return from_pieces(PiecewisePoly::from_pieces(
        {Rational(0), Rational(1), Rational(2)},
        {Polynomial({Rational(0), Rational(1)}), Polynomial({Rational(-1), Rational(2)})}));
  }
  if (name == "pquad") {
    // s^2 on [0,1], 3s-2 on [1,3]
    return from_pieces(PiecewisePoly::from_pieces(
        {Rational(0), Rational(1), Rational(3)},
        {Polynomial({Rational(0), Rational(0), Rational(1)}),
         Polynomial({Rational(-2), Rational(3)})}));
  }
  raise(Errc::parse_error, "unknown psi preset '" + name + "'");
}

Rational PsiSpec::psi_at(const Rational& s) const {
  if (s < 0) raise(Errc::out_of_range, "psi argument must be >= 0");
  if (s >= domain_end_) return ext_psi_(s);
  return psi_(s);
}

Rational PsiSpec::big_psi_at(const Rational& s) const {
  if (s < 0) raise(Errc::out_of_range, "Psi argument must be >= 0");
  if (s >= domain_end_) return ext_big_psi_(s);
  return big_psi_(s);
}

Rational PsiSpec::big_t_at(const Rational& s) const {
  if (s < 0) raise(Errc::out_of_range, "T argument must be >= 0");
  if (s >= domain_end_) return ext_big_t_(s);
  return big_t_(s);
}

PiecewisePoly PsiSpec::derivative_on(const Rational& upto) const {
  if (!(upto > 0)) return PiecewisePoly();
  std::vector<Rational> bps;
  std::vector<Polynomial> polys;
  const auto& bp = psi_.breakpoints();
  const auto& ps = psi_.pieces();
  bps.push_back(bp.front());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    bps.push_back(bp[i + 1]);
    polys.push_back(ps[i].derivative());
  }
  if (upto > domain_end_) {
    bps.push_back(upto);
    polys.push_back(ext_psi_.derivative());
  }
  return PiecewisePoly::from_pieces(std::move(bps), std::move(polys)).restricted(Rational(0), upto);
}

Rational psi_membership_integral(const DistributionProfile& profile, const PsiSpec& psi,
                                 const Rational& k) {
  if (!(k > 0)) raise(Errc::out_of_range, "K must be positive");
  if (profile.alpha_max == 0) return Rational(0);
  Rational upto = profile.alpha_max / k;
  PiecewisePoly weight = psi.derivative_on(upto);
  PiecewisePoly scaled_survival = profile.survival().compose_affine(Rational(0), k);
  return weight.inner(scaled_survival);
}

namespace {

// inf{K > 0 : fits(K)} for a non-increasing membership predicate, bisected to
// within tol. The initial bracket is verified exactly.
NormValue bisect_threshold(const std::function<bool(const Rational&)>& fits, Rational hi,
                           const Rational& tol, const std::string& kind) {
  if (!(tol > 0)) raise(Errc::tolerance_invalid, "tolerance must be positive");
  int guard = 0;
  while (!fits(hi)) {
    hi *= 2;
    if (++guard > 300) raise(Errc::hypothesis_violated, "no finite norm bracket");
  }
  Rational lo = hi / 2;
  guard = 0;
  while (fits(lo)) {
    hi = lo;
    lo /= 2;
    if (++guard > 300) raise(Errc::hypothesis_violated, "norm threshold not bounded away from 0");
  }
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (fits(mid))
      hi = mid;
    else
      lo = mid;
  }
  NormValue out;
  out.kind = kind;
  out.approx = to_double((lo + hi) / 2);
  out.error_bound = to_double((hi - lo) / 2);
  return out;
}

}  // namespace

NormValue psi_norm(const DistributionProfile& profile, const PsiSpec& psi, const Rational& tol) {
  if (!(tol > 0)) raise(Errc::tolerance_invalid, "tolerance must be positive");
  if (profile.alpha_max == 0) return {"psi", Rational(0), 0.0, 0.0};
  auto fits = [&](const Rational& k) { return psi_membership_integral(profile, psi, k) <= 1; };
  return bisect_threshold(fits, profile.alpha_max, tol, "psi");
}

NormValue lp_norm_pow(const DistributionProfile& profile, const Rational& p) {
  if (!(p > 0)) raise(Errc::invalid_exponent, "p must be positive");
  PiecewisePoly surv = profile.survival();
  long pi = as_small_integer(p);
  if (pi >= 1) {
    // integral of p alpha^(p-1) S(alpha), polynomial weight
    std::vector<Rational> w(static_cast<std::size_t>(pi), Rational(0));
    w.back() = p;
    Polynomial weight{std::move(w)};
    Rational total(0);
    const auto& bp = surv.breakpoints();
    const auto& ps = surv.pieces();
    for (std::size_t i = 0; i < ps.size(); ++i)
      total += (weight * ps[i]).integral(bp[i], bp[i + 1]);
    return {"lp_pow", total, to_double(total), 0.0};
  }
  const double pd = to_double(p);
  double total = 0;
  const auto& bp = surv.breakpoints();
  const auto& ps = surv.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Polynomial& piece = ps[i];
    auto f = [&](double x) { return pd * std::pow(x, pd - 1) * eval_poly_d(piece, x); };
    total += tanh_sinh(f, to_double(bp[i]), to_double(bp[i + 1]), 1e-13);
  }
  return {"lp_pow", std::nullopt, total, 1e-12};
}

NormValue lorentz_norm_pow(const DistributionProfile& profile, const Rational& p,
                           const Rational& q) {
  if (!(p > 0) || !(q > 0)) raise(Errc::invalid_exponent, "p and q must be positive");
  PiecewisePoly surv = profile.survival();
  long qi = as_small_integer(q);
  long ki = as_small_integer(p / q);
  if (qi >= 1 && ki >= 1) {
    std::vector<Rational> w(static_cast<std::size_t>(qi), Rational(0));
    w.back() = p;
    Polynomial weight{std::move(w)};
    Rational total(0);
    const auto& bp = surv.breakpoints();
    const auto& ps = surv.pieces();
    for (std::size_t i = 0; i < ps.size(); ++i)
      total += (weight * ps[i].pow(static_cast<unsigned>(ki))).integral(bp[i], bp[i + 1]);
    return {"lorentz_pow", total, to_double(total), 0.0};
  }
  const double pd = to_double(p), qd = to_double(q);
  double total = 0;
  const auto& bp = surv.breakpoints();
  const auto& ps = surv.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Polynomial& piece = ps[i];
    auto f = [&](double x) {
      double s = eval_poly_d(piece, x);
      if (s <= 0) return 0.0;
      return pd * std::pow(x, qd - 1) * std::pow(s, pd / qd);
    };
    total += tanh_sinh(f, to_double(bp[i]), to_double(bp[i + 1]), 1e-11);
  }
  return {"lorentz_pow", std::nullopt, total, 1e-10};
}

NormValue min_psi_norm_D(const PsiSpec& psi, const Rational& tol) {
  auto fits = [&](const Rational& k) { return 2 * k * psi.big_psi_at(1 / (2 * k)) <= 1; };
  return bisect_threshold(fits, Rational(1), tol, "min_psi_D");
}

NormValue min_psi_norm_Dtilde(const PsiSpec& psi, const Rational& tol) {
  auto fits = [&](const Rational& k) { return 2 * k * k * psi.big_t_at(1 / k) <= 1; };
  return bisect_threshold(fits, Rational(1), tol, "min_psi_Dtilde");
}

NormValue min_lp_pow_D(const Rational& p) {
  if (!(p > 0)) raise(Errc::invalid_exponent, "p must be positive");
  long pi = as_small_integer(p);
  if (pi >= 1) {
    mpz_class den = 1;
    den <<= static_cast<unsigned>(pi);
    den *= pi + 1;
    Rational v(1, den);
    v.canonicalize();
    return {"min_lp_D", v, to_double(v), 0.0};
  }
  double pd = to_double(p);
  return {"min_lp_D", std::nullopt, std::pow(2.0, -pd) / (pd + 1), 1e-12};
}

NormValue min_lp_pow_Dtilde(const Rational& p) {
  if (!(p > 0)) raise(Errc::invalid_exponent, "p must be positive");
  Rational v = 2 / ((p + 1) * (p + 2));
  return {"min_lp_Dtilde", v, to_double(v), 0.0};
}

Rational beta_exact(long x, long y) {
  if (x < 1 || y < 1) raise(Errc::invalid_exponent, "beta_exact needs positive integers");
  mpz_class fx, fy, fxy;
  mpz_fac_ui(fx.get_mpz_t(), static_cast<unsigned long>(x - 1));
  mpz_fac_ui(fy.get_mpz_t(), static_cast<unsigned long>(y - 1));
  mpz_fac_ui(fxy.get_mpz_t(), static_cast<unsigned long>(x + y - 1));
  Rational v(fx * fy, fxy);
  v.canonicalize();
  return v;
}

double beta_numeric(double x, double y) {
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

NormValue min_lorentz_pow_D(const Rational& p, const Rational& q) {
  if (!(p > 0) || !(q > 0)) raise(Errc::invalid_exponent, "p and q must be positive");
  long qi = as_small_integer(q);
  long ki = as_small_integer(p / q);
  if (qi >= 1 && ki >= 1) {
    mpz_class two_q = 1;
    two_q <<= static_cast<unsigned>(qi);
    Rational v = p * beta_exact(qi, 1 + ki) / Rational(two_q);
    return {"min_lorentz_D", v, to_double(v), 0.0};
  }
  double pd = to_double(p), qd = to_double(q);
  double v = pd * std::pow(2.0, -qd) * beta_numeric(qd, 1 + pd / qd);
  return {"min_lorentz_D", std::nullopt, v, 1e-12};
}

NormValue min_lorentz_pow_Dtilde(const Rational& p, const Rational& q) {
  if (!(p > 0) || !(q > 0)) raise(Errc::invalid_exponent, "p and q must be positive");
  long qi = as_small_integer(q);
  long ki = as_small_integer(2 * p / q);
  if (qi >= 1 && ki >= 1) {
    Rational v = p * beta_exact(qi, 1 + ki);
    return {"min_lorentz_Dtilde", v, to_double(v), 0.0};
  }
  double pd = to_double(p), qd = to_double(q);
  double v = pd * beta_numeric(qd, 1 + 2 * pd / qd);
  return {"min_lorentz_Dtilde", std::nullopt, v, 1e-12};
}

}  // namespace exdisc
