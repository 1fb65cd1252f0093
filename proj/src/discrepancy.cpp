#include "exdisc/discrepancy.hpp"

#include <algorithm>

#include "exdisc/errors.hpp"

namespace exdisc {

namespace {

void check_unit_interval(const Rational& t) {
  if (t < 0 || t > 1) raise(Errc::out_of_range, "argument " + to_string(t) + " outside [0,1]");
}

struct Cell {
  Rational lo, hi;  // (x_{n-1}, x_n), positive width
  long intercept;   // D(t) = intercept - N*t on the cell
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

Rational eval_D(const PointSet& p, const Rational& t) {
  check_unit_interval(t);
  long count = 0;
  for (const auto& x : p.points()) {
    if (x < t) ++count;
  }
  return Rational(count) - Rational(static_cast<long>(p.size())) * t;
}

Rational eval_Dtilde(const PointSet& p, const Rational& t1, const Rational& t2) {
  return eval_D(p, t2) - eval_D(p, t1);
}

PiecewisePoly curve_of_D(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  std::vector<Rational> bps;
  std::vector<Polynomial> polys;
  for (const auto& c : cells_of(p)) {
    if (bps.empty()) bps.push_back(c.lo);
    bps.push_back(c.hi);
    polys.push_back(Polynomial({Rational(c.intercept), Rational(-n)}));
  }
  return PiecewisePoly::from_pieces(std::move(bps), std::move(polys));
}

Rational star_discrepancy_direct(const PointSet& p) {
  Rational best(0);
  for (const auto& c : cells_of(p)) {
    const long n = static_cast<long>(p.size());
    Rational at_lo = abs(Rational(c.intercept) - Rational(n) * c.lo);
    Rational at_hi = abs(Rational(c.intercept) - Rational(n) * c.hi);
    best = std::max({best, at_lo, at_hi});
  }
  return best;
}

Rational closed_form_star(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  Rational m(0);
  for (long k = 0; k < n; ++k)
    m = std::max(m, Rational(abs(p[static_cast<std::size_t>(k)] - rat(2 * k + 1, 2 * n))));
  return Rational(n) * m + rat(1, 2);
}

Rational closed_form_l2_sq(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  Rational s(0);
  for (long k = 0; k < n; ++k) {
    Rational d = p[static_cast<std::size_t>(k)] - rat(2 * k + 1, 2 * n);
    s += d * d;
  }
  return Rational(n) * s + rat(1, 12);
}

Rational direct_l2_sq(const PointSet& p) {
  PiecewisePoly d = curve_of_D(p);
  return d.inner(d);
}

Rational direct_lp_pow(const PointSet& p, long power) {
  if (power < 1) raise(Errc::invalid_exponent, "integer exponent must be >= 1");
  const long n = static_cast<long>(p.size());
  Rational total(0);
  for (const auto& c : cells_of(p)) {
    Polynomial piece({Rational(c.intercept), Rational(-n)});
    // D vanishes at intercept/N; split the cell there to keep |D|^p polynomial
    Rational root = rat(c.intercept, n);
    std::vector<Rational> cuts{c.lo, c.hi};
    if (root > c.lo && root < c.hi) cuts.insert(cuts.begin() + 1, root);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      Rational seg = piece.pow(static_cast<unsigned>(power)).integral(cuts[k], cuts[k + 1]);
      Rational mid_val = piece((cuts[k] + cuts[k + 1]) / 2);
      if (mid_val < 0 && power % 2 == 1) seg = -seg;
      total += seg;
    }
  }
  return total;
}

Rational closed_form_extreme_star(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  Rational mx = rat(0, 1) - p[0];
  Rational mn = mx;
  for (long k = 0; k < n; ++k) {
    Rational v = rat(k, n) - p[static_cast<std::size_t>(k)];
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  return Rational(1) + Rational(n) * mx - Rational(n) * mn;
}

Rational extreme_star_direct(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  bool first = true;
  Rational sup(0), inf(0);
  for (const auto& c : cells_of(p)) {
    Rational at_lo = Rational(c.intercept) - Rational(n) * c.lo;
    Rational at_hi = Rational(c.intercept) - Rational(n) * c.hi;
    if (first) {
      sup = std::max(at_lo, at_hi);
      inf = std::min(at_lo, at_hi);
      first = false;
    } else {
      sup = std::max({sup, at_lo, at_hi});
      inf = std::min({inf, at_lo, at_hi});
    }
  }
  return sup - inf;
}

Rational closed_form_extreme_l2_sq(const PointSet& p, Region region) {
  const long n = static_cast<long>(p.size());
  Rational s(0);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      Rational d = p[static_cast<std::size_t>(a)] - p[static_cast<std::size_t>(b)] - rat(a - b, n);
      s += d * d;
    }
  Rational triangle = rat(1, 12) + s / 2;
  return region == Region::Triangle ? triangle : Rational(2) * triangle;
}

Rational direct_extreme_l2_sq(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  const Rational nn(n);
  auto cells = cells_of(p);
  Rational total(0);
  for (const auto& ci : cells) {
    for (const auto& cj : cells) {
      // integrand (c + N t1 - N t2)^2 over (ci) x (cj) in (t1, t2)
      Rational c(cj.intercept - ci.intercept);
      Polynomial a_of_t1({c, nn});  // c + N t1
      const Rational &r = cj.lo, &s = cj.hi;
      Rational len2 = s - r;
      Rational sq2 = s * s - r * r;
      Rational cb2 = s * s * s - r * r * r;
      // inner integral over t2: A^2 len - A N sq + N^2 cb / 3, A = a_of_t1
      Rational part = (a_of_t1 * a_of_t1).scaled(len2).integral(ci.lo, ci.hi);
      part -= a_of_t1.scaled(nn * sq2).integral(ci.lo, ci.hi);
      part += nn * nn * cb2 / 3 * (ci.hi - ci.lo);
      total += part;
    }
  }
  return total;
}

}  // namespace exdisc
