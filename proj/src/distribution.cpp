#include "exdisc/distribution.hpp"

#include <algorithm>
#include <cassert>

#include "exdisc/detail/linear_sweep.hpp"
#include "exdisc/errors.hpp"

namespace exdisc {

namespace {

struct Cell {
  Rational lo, hi;
  long intercept;
};

std::vector<Cell> cells_of(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  std::vector<Cell> cells;
  cells.reserve(p.size() + 1);
  Rational prev(0);
  for (long k = 0; k <= n; ++k) {
    Rational next = k < n ? p[static_cast<std::size_t>(k)] : Rational(1);
    if (prev < next) cells.push_back({prev, next, k});
    prev = next;
  }
  return cells;
}

}  // namespace

Rational DistributionProfile::operator()(const Rational& alpha) const {
  if (alpha <= 0) return Rational(0);
  if (alpha >= alpha_max) return plateau;
  return cdf(alpha);
}

PiecewisePoly DistributionProfile::survival() const {
  if (alpha_max == 0) return PiecewisePoly();
  PiecewisePoly plat = PiecewisePoly::constant_on(Rational(0), alpha_max, plateau);
  return plat - cdf.restricted(Rational(0), alpha_max);
}

PiecewisePoly DistributionProfile::full_cdf(const Rational& upto) const {
  PiecewisePoly out = cdf.restricted(Rational(0), upto);
  if (upto > alpha_max) out = out + PiecewisePoly::constant_on(alpha_max, upto, plateau);
  return out;
}

DistributionProfile profile_from_density(const PiecewisePoly& density) {
  DistributionProfile prof;
  if (density.is_zero()) return prof;
  prof.plateau = density.integral();
  prof.alpha_max = std::max(Rational(-density.support_lo()), density.support_hi());
  PiecewisePoly sym = density + density.reflected();
  prof.cdf = cumulative_from(sym.restricted(Rational(0), prof.alpha_max), Rational(0));
  return prof;
}

PiecewisePoly density_of_D(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  std::vector<std::pair<Rational, Rational>> intervals;
  std::vector<Rational> values;
  Rational prev(0);  // x_{n-1} with x_{-1} = 0
  for (long k = 0; k <= n; ++k) {
    Rational xk = k < n ? p[static_cast<std::size_t>(k)] : Rational(1);
    intervals.emplace_back(Rational(k) - Rational(n) * xk, Rational(k) - Rational(n) * prev);
    values.push_back(rat(1, n));
    prev = xk;
  }
  return make_step(intervals, values);
}

DistributionProfile dist_D(const PointSet& p) { return profile_from_density(density_of_D(p)); }

DistributionProfile dist_Dtilde(const PointSet& p) {
  PiecewisePoly g = density_of_D(p);
  return profile_from_density(convolve(g, g.reflected()));
}

DistributionProfile grid_profile_D() {
  DistributionProfile prof;
  prof.cdf = PiecewisePoly::from_pieces({Rational(0), rat(1, 2)},
                                        {Polynomial({Rational(0), Rational(2)})});
  prof.alpha_max = rat(1, 2);
  prof.plateau = Rational(1);
  return prof;
}

DistributionProfile grid_profile_Dtilde() {
  DistributionProfile prof;
  prof.cdf = PiecewisePoly::from_pieces(
      {Rational(0), Rational(1)}, {Polynomial({Rational(0), Rational(2), Rational(-1)})});
  prof.alpha_max = Rational(1);
  prof.plateau = Rational(1);
  return prof;
}

Rational sublevel_measure_D_direct(const PointSet& p, const Rational& alpha) {
  if (!(alpha > 0)) raise(Errc::out_of_range, "alpha must be positive");
  const long n = static_cast<long>(p.size());
  Rational total(0);
  for (const auto& c : cells_of(p)) {
    // |D| < alpha on the cell means t in ((k - alpha)/N, (k + alpha)/N)
    Rational lo = std::max(c.lo, Rational(rat(1, n) * (Rational(c.intercept) - alpha)));
    Rational hi = std::min(c.hi, Rational(rat(1, n) * (Rational(c.intercept) + alpha)));
    if (lo < hi) total += hi - lo;
  }
  return total;
}

namespace {

// integral over (lo, hi) of the overlap tent w -> |(p,q) cap (w+r, w+s)|.
Rational tent_mass(const Rational& p, const Rational& q, const Rational& r, const Rational& s,
                   const Rational& lo, const Rational& hi) {
  Rational w0 = p - s;
  Rational w3 = q - r;
  Rational w1 = std::min(Rational(p - r), Rational(q - s));
  Rational w2 = std::max(Rational(p - r), Rational(q - s));
  Rational h = w1 - w0;  // peak height = min(q-p, s-r)
  Rational total(0);
  {  // rising part on (w0, w1): value w - w0
    Rational a = std::max(lo, w0), b = std::min(hi, w1);
    if (a < b) total += ((b - w0) * (b - w0) - (a - w0) * (a - w0)) / 2;
  }
  {  // flat part
    Rational a = std::max(lo, w1), b = std::min(hi, w2);
    if (a < b) total += h * (b - a);
  }
  {  // falling part on (w2, w3): value w3 - w
    Rational a = std::max(lo, w2), b = std::min(hi, w3);
    if (a < b) total += ((w3 - a) * (w3 - a) - (w3 - b) * (w3 - b)) / 2;
  }
  return total;
}

}  // namespace

Rational sublevel_measure_Dtilde_direct(const PointSet& p, const Rational& alpha) {
  if (!(alpha > 0)) raise(Errc::out_of_range, "alpha must be positive");
  const long n = static_cast<long>(p.size());
  const Rational nn(n);
  auto cells = cells_of(p);
  Rational total(0);
  for (const auto& ci : cells) {    // t1 cell
    for (const auto& cj : cells) {  // t2 cell
      // |c + N (t1 - t2)| < alpha  <=>  t1 - t2 in ((-alpha - c)/N, (alpha - c)/N)
      Rational c(cj.intercept - ci.intercept);
      Rational lo = (-alpha - c) / nn;
      Rational hi = (alpha - c) / nn;
      total += tent_mass(ci.lo, ci.hi, cj.lo, cj.hi, lo, hi);
    }
  }
  return total;
}

DistributionProfile area_profile_D_direct(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  const Rational slope = rat(1, n);
  detail::LinearSweep sweep;
  for (const auto& c : cells_of(p)) {
    // measure{t in cell : |D| < alpha} = (1/N) |(A,B) cap (-alpha, alpha)|
    Rational a = Rational(c.intercept) - Rational(n) * c.hi;
    Rational b = Rational(c.intercept) - Rational(n) * c.lo;
    // split the window into its positive and reflected-negative halves
    sweep.add_slope_jump(std::max(a, Rational(0)), slope);
    sweep.add_slope_jump(std::max(b, Rational(0)), -slope);
    sweep.add_slope_jump(std::max(Rational(-b), Rational(0)), slope);
    sweep.add_slope_jump(std::max(Rational(-a), Rational(0)), -slope);
  }
  DistributionProfile prof;
  prof.cdf = sweep.build();
  prof.alpha_max = star_discrepancy_direct(p);
  prof.plateau = Rational(1);
  return prof;
}

DistributionProfile area_profile_Dtilde_direct(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  const Rational nn(n);
  auto cells = cells_of(p);
  detail::LinearSweep slope_sweep;  // accumulates dF/dalpha, piecewise linear
  for (const auto& ci : cells) {
    for (const auto& cj : cells) {
      Rational c(cj.intercept - ci.intercept);
      detail::LinearSweep tent;
      tent.add_tent(ci.lo, ci.hi, -cj.hi, -cj.lo, Rational(1));
      PiecewisePoly lambda = tent.build();  // overlap length as a function of t1 - t2
      if (lambda.is_zero()) continue;
      // d/dalpha of the strip area: (1/N) [lambda((alpha-c)/N) + lambda((-alpha-c)/N)]
      for (const PiecewisePoly& part :
           {lambda.compose_affine(-c / nn, 1 / nn), lambda.compose_affine(-c / nn, -1 / nn)}) {
        const auto& bp = part.breakpoints();
        const auto& ps = part.pieces();
        Rational prev_slope(0);
        for (std::size_t i = 0; i < ps.size(); ++i) {
          Rational s = ps[i].degree() >= 1 ? ps[i].coeffs()[1] : Rational(0);
          slope_sweep.add_slope_jump(bp[i], (s - prev_slope) / nn);
          prev_slope = s;
        }
        slope_sweep.add_slope_jump(bp.back(), -prev_slope / nn);
      }
    }
  }
  PiecewisePoly derivative = slope_sweep.build();
  DistributionProfile prof;
  prof.alpha_max = extreme_star_direct(p);
  prof.cdf = cumulative_from(derivative.restricted(Rational(0), prof.alpha_max), Rational(0));
  prof.plateau = Rational(1);
  return prof;
}

ProfileComparison compare_profiles(const DistributionProfile& candidate,
                                   const DistributionProfile& bound) {
  ProfileComparison out;
  Rational upto = std::max(candidate.alpha_max, bound.alpha_max);
  if (upto == 0) {
    out.dominated = candidate.plateau <= bound.plateau;
    out.equal = candidate.plateau == bound.plateau;
    return out;
  }
  PiecewisePoly gap = bound.full_cdf(upto) - candidate.full_cdf(upto);
  if (gap.is_zero()) {
    out.dominated = true;
    out.equal = true;
    return out;
  }
  out.dominated = true;
  const auto& bp = gap.breakpoints();
  const auto& ps = gap.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (nonneg_on(ps[i], bp[i], bp[i + 1])) continue;
    out.dominated = false;
    Polynomial neg = -ps[i];
    auto alpha = find_positive_point(neg, bp[i], bp[i + 1]);
    assert(alpha.has_value());
    out.violation_alpha = *alpha;
    out.violation_candidate = candidate(*alpha);
    out.violation_bound = bound(*alpha);
    return out;
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].is_zero()) continue;
    auto at = find_positive_point(ps[i], bp[i], bp[i + 1]);
    assert(at.has_value());
    out.strict_gap = positive_neighborhood(ps[i], bp[i], bp[i + 1], *at);
    break;
  }
  return out;
}

}  // namespace exdisc
