#include "exdisc/piecewise.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "exdisc/detail/linear_sweep.hpp"
#include "exdisc/errors.hpp"

namespace exdisc {

namespace {
constexpr std::size_t npos = static_cast<std::size_t>(-1);
}

PiecewisePoly PiecewisePoly::from_pieces(std::vector<Rational> breakpoints,
                                         std::vector<Polynomial> pieces) {
  if (pieces.empty()) return PiecewisePoly();
  if (breakpoints.size() != pieces.size() + 1)
    throw std::logic_error("piecewise: breakpoint/piece count mismatch");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw std::logic_error("piecewise: breakpoints not strictly increasing");

  PiecewisePoly out;
  out.breakpoints_.push_back(breakpoints[0]);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!out.pieces_.empty() && out.pieces_.back() == pieces[i]) {
      out.breakpoints_.back() = breakpoints[i + 1];  // merge with previous piece
    } else {
      out.pieces_.push_back(std::move(pieces[i]));
      out.breakpoints_.push_back(breakpoints[i + 1]);
    }
  }
  while (!out.pieces_.empty() && out.pieces_.front().is_zero()) {
    out.pieces_.erase(out.pieces_.begin());
    out.breakpoints_.erase(out.breakpoints_.begin());
  }
  while (!out.pieces_.empty() && out.pieces_.back().is_zero()) {
    out.pieces_.pop_back();
    out.breakpoints_.pop_back();
  }
  if (out.pieces_.empty()) out.breakpoints_.clear();
  return out;
}

PiecewisePoly PiecewisePoly::indicator(const Rational& lo, const Rational& hi) {
  return constant_on(lo, hi, Rational(1));
}

PiecewisePoly PiecewisePoly::constant_on(const Rational& lo, const Rational& hi,
                                         const Rational& value) {
  if (!(lo < hi) || value == 0) return PiecewisePoly();
  return from_pieces({lo, hi}, {Polynomial::constant(value)});
}

const Rational& PiecewisePoly::support_lo() const {
  assert(!is_zero());
  return breakpoints_.front();
}

const Rational& PiecewisePoly::support_hi() const {
  assert(!is_zero());
  return breakpoints_.back();
}

int PiecewisePoly::max_degree() const {
  int d = 0;
  for (const auto& p : pieces_) d = std::max(d, p.degree());
  return d;
}

bool PiecewisePoly::is_step() const {
  for (const auto& p : pieces_)
    if (p.degree() > 0) return false;
  return true;
}

std::size_t PiecewisePoly::piece_index(const Rational& t) const {
  if (is_zero() || t < breakpoints_.front() || t >= breakpoints_.back()) return npos;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

Rational PiecewisePoly::operator()(const Rational& t) const {
  std::size_t i = piece_index(t);
  if (i == npos) return Rational(0);
  return pieces_[i](t);
}

namespace {

std::vector<Rational> merged_breakpoints(const PiecewisePoly& f, const PiecewisePoly& g) {
  std::vector<Rational> grid;
  grid.reserve(f.breakpoints().size() + g.breakpoints().size());
  grid.insert(grid.end(), f.breakpoints().begin(), f.breakpoints().end());
  grid.insert(grid.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

PiecewisePoly PiecewisePoly::operator+(const PiecewisePoly& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  std::vector<Rational> grid = merged_breakpoints(*this, other);
  std::vector<Polynomial> polys;
  polys.reserve(grid.size() - 1);
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    Rational mid = (grid[k] + grid[k + 1]) / 2;
    Polynomial p;
    if (std::size_t i = piece_index(mid); i != npos) p = p + pieces_[i];
    if (std::size_t j = other.piece_index(mid); j != npos) p = p + other.pieces_[j];
    polys.push_back(std::move(p));
  }
  return from_pieces(std::move(grid), std::move(polys));
}

PiecewisePoly PiecewisePoly::operator-(const PiecewisePoly& other) const {
  return *this + other.scaled(Rational(-1));
}

PiecewisePoly PiecewisePoly::operator*(const PiecewisePoly& other) const {
  if (is_zero() || other.is_zero()) return PiecewisePoly();
  std::vector<Rational> grid = merged_breakpoints(*this, other);
  std::vector<Polynomial> polys;
  polys.reserve(grid.size() - 1);
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    Rational mid = (grid[k] + grid[k + 1]) / 2;
    std::size_t i = piece_index(mid);
    std::size_t j = other.piece_index(mid);
    if (i != npos && j != npos)
      polys.push_back(pieces_[i] * other.pieces_[j]);
    else
      polys.emplace_back();
  }
  return from_pieces(std::move(grid), std::move(polys));
}

PiecewisePoly PiecewisePoly::scaled(const Rational& c) const {
  if (c == 0 || is_zero()) return PiecewisePoly();
  std::vector<Polynomial> polys;
  polys.reserve(pieces_.size());
  for (const auto& p : pieces_) polys.push_back(p.scaled(c));
  return from_pieces(breakpoints_, std::move(polys));
}

PiecewisePoly PiecewisePoly::reflected() const { return compose_affine(Rational(0), Rational(-1)); }

PiecewisePoly PiecewisePoly::compose_affine(const Rational& a, const Rational& b) const {
  if (b == 0) throw std::logic_error("compose_affine requires b != 0");
  if (is_zero()) return PiecewisePoly();
  std::vector<Rational> bps;
  std::vector<Polynomial> polys;
  bps.reserve(breakpoints_.size());
  polys.reserve(pieces_.size());
  for (const auto& t : breakpoints_) bps.push_back((t - a) / b);
  for (const auto& p : pieces_) polys.push_back(p.compose_affine(a, b));
  if (b < 0) {
    std::reverse(bps.begin(), bps.end());
    std::reverse(polys.begin(), polys.end());
  }
  return from_pieces(std::move(bps), std::move(polys));
}

PiecewisePoly PiecewisePoly::restricted(const Rational& lo, const Rational& hi) const {
  if (is_zero() || !(lo < hi)) return PiecewisePoly();
  std::vector<Rational> bps;
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    Rational u = std::max(breakpoints_[i], lo);
    Rational v = std::min(breakpoints_[i + 1], hi);
    if (!(u < v)) continue;
    if (bps.empty()) bps.push_back(u);
    bps.push_back(v);
    polys.push_back(pieces_[i]);
  }
  if (polys.empty()) return PiecewisePoly();
  return from_pieces(std::move(bps), std::move(polys));
}

Rational PiecewisePoly::integral() const {
  Rational total(0);
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    total += pieces_[i].integral(breakpoints_[i], breakpoints_[i + 1]);
  return total;
}

Rational PiecewisePoly::integral(const Rational& a, const Rational& b) const {
  if (!(a <= b)) raise(Errc::malformed_interval, "integral bounds out of order");
  Rational total(0);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    Rational u = std::max(breakpoints_[i], a);
    Rational v = std::min(breakpoints_[i + 1], b);
    if (u < v) total += pieces_[i].integral(u, v);
  }
  return total;
}

Rational PiecewisePoly::integral(const std::optional<Rational>& a,
                                 const std::optional<Rational>& b) const {
  if (is_zero()) return Rational(0);
  Rational lo = a.value_or(support_lo());
  Rational hi = b.value_or(support_hi());
  if (a && b && !(*a <= *b)) raise(Errc::malformed_interval, "integral bounds out of order");
  lo = std::min(lo, support_hi());
  hi = std::max(hi, support_lo());
  if (!(lo <= hi)) return Rational(0);
  return integral(lo, hi);
}

Rational PiecewisePoly::inner(const PiecewisePoly& other) const {
  if (is_zero() || other.is_zero()) return Rational(0);
  Rational total(0);
  std::vector<Rational> grid = merged_breakpoints(*this, other);
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    Rational mid = (grid[k] + grid[k + 1]) / 2;
    std::size_t i = piece_index(mid);
    std::size_t j = other.piece_index(mid);
    if (i == npos || j == npos) continue;
    total += (pieces_[i] * other.pieces_[j]).integral(grid[k], grid[k + 1]);
  }
  return total;
}

PiecewisePoly make_step(const std::vector<std::pair<Rational, Rational>>& intervals,
                        const std::vector<Rational>& values) {
  if (intervals.size() != values.size())
    raise(Errc::malformed_interval, "make_step: interval/value count mismatch");
  std::map<Rational, Rational> delta;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& [lo, hi] = intervals[i];
    if (lo > hi) raise(Errc::malformed_interval, "make_step: interval with lower > upper");
    if (lo == hi || values[i] == 0) continue;  // null interval contributes nothing
    delta[lo] += values[i];
    delta[hi] -= values[i];
  }
  std::vector<Rational> bps;
  std::vector<Polynomial> polys;
  Rational running(0);
  const Rational* prev = nullptr;
  for (const auto& [at, d] : delta) {
    if (prev != nullptr && at > *prev) polys.push_back(Polynomial::constant(running));
    bps.push_back(at);
    running += d;
    prev = &at;
  }
  if (polys.empty()) return PiecewisePoly();
  return PiecewisePoly::from_pieces(std::move(bps), std::move(polys));
}

namespace {

// (f*g)(x0) by direct exact integration; used by the general convolution path.
Rational conv_value(const PiecewisePoly& f, const PiecewisePoly& g, const Rational& x0) {
  Rational lo = std::max(f.support_lo(), Rational(x0 - g.support_hi()));
  Rational hi = std::min(f.support_hi(), Rational(x0 - g.support_lo()));
  if (!(lo < hi)) return Rational(0);
  std::vector<Rational> cuts;
  for (const auto& t : f.breakpoints())
    if (t > lo && t < hi) cuts.push_back(t);
  for (const auto& t : g.breakpoints()) {
    Rational y = x0 - t;
    if (y > lo && y < hi) cuts.push_back(y);
  }
  cuts.push_back(lo);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Rational total(0);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Rational mid = (cuts[k] + cuts[k + 1]) / 2;
    const auto& fb = f.breakpoints();
    auto fi = std::upper_bound(fb.begin(), fb.end(), mid);
    if (fi == fb.begin() || fi == fb.end()) continue;
    const Polynomial& pf = f.pieces()[static_cast<std::size_t>(fi - fb.begin()) - 1];
    const auto& gb = g.breakpoints();
    Rational gy = x0 - mid;
    auto gi = std::upper_bound(gb.begin(), gb.end(), gy);
    if (gi == gb.begin() || gi == gb.end()) continue;
    const Polynomial& pg = g.pieces()[static_cast<std::size_t>(gi - gb.begin()) - 1];
    Polynomial integrand = pf * pg.compose_affine(x0, Rational(-1));
    total += integrand.integral(cuts[k], cuts[k + 1]);
  }
  return total;
}

// Fast path for two step functions: every piece pair contributes a tent
// v*w*|I cap (x - J)|; accumulate slope jumps and sweep once.
PiecewisePoly conv_steps(const PiecewisePoly& f, const PiecewisePoly& g) {
  detail::LinearSweep sweep;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    if (f.pieces()[i].is_zero()) continue;
    const Rational& v = f.pieces()[i].coeffs()[0];
    const Rational& a = f.breakpoints()[i];
    const Rational& b = f.breakpoints()[i + 1];
    for (std::size_t j = 0; j < g.piece_count(); ++j) {
      if (g.pieces()[j].is_zero()) continue;
      const Rational& w = g.pieces()[j].coeffs()[0];
      sweep.add_tent(a, b, g.breakpoints()[j], g.breakpoints()[j + 1], v * w);
    }
  }
  return sweep.build();
}

// Convolution against a step function via shifted cumulative differences:
// f * (w 1_(c,d)) (x) = w (F(x-c) - F(x-d)) with F the running integral of f.
PiecewisePoly conv_with_step(const PiecewisePoly& f, const PiecewisePoly& s) {
  const Rational lo = f.support_lo();
  const Rational hi = f.support_hi();
  const Rational mass = f.integral();
  PiecewisePoly cum = cumulative_from(f, lo);  // on [lo, hi]

  // F~ piece as a polynomial of its argument: 0 below lo, `mass` above hi.
  auto cum_piece = [&](const Rational& u) -> Polynomial {
    if (u < lo) return Polynomial();
    if (u > hi) return Polynomial::constant(mass);
    const auto& bp = cum.breakpoints();
    auto it = std::upper_bound(bp.begin(), bp.end(), u);
    std::size_t idx = it == bp.begin() ? 0 : static_cast<std::size_t>(it - bp.begin()) - 1;
    idx = std::min(idx, cum.pieces().size() - 1);
    return cum.pieces()[idx];
  };

  PiecewisePoly total;
  for (std::size_t j = 0; j < s.piece_count(); ++j) {
    if (s.pieces()[j].is_zero()) continue;
    const Rational& w = s.pieces()[j].coeffs()[0];
    const Rational& c = s.breakpoints()[j];
    const Rational& d = s.breakpoints()[j + 1];
    std::vector<Rational> grid;
    grid.reserve(2 * f.breakpoints().size());
    for (const auto& t : f.breakpoints()) {
      grid.push_back(t + c);
      grid.push_back(t + d);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<Polynomial> polys;
    polys.reserve(grid.size() - 1);
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      Rational mid = (grid[k] + grid[k + 1]) / 2;
      Polynomial upper = cum_piece(mid - c).compose_affine(-c, Rational(1));
      Polynomial lower = cum_piece(mid - d).compose_affine(-d, Rational(1));
      polys.push_back((upper - lower).scaled(w));
    }
    total = total + PiecewisePoly::from_pieces(std::move(grid), std::move(polys));
  }
  return total;
}

}  // namespace

PiecewisePoly convolve(const PiecewisePoly& f, const PiecewisePoly& g) {
  if (f.is_zero() || g.is_zero()) return PiecewisePoly();
  if (f.is_step() && g.is_step()) return conv_steps(f, g);
  if (g.is_step()) return conv_with_step(f, g);
  if (f.is_step()) return conv_with_step(g, f);

  const int target_degree = f.max_degree() + g.max_degree() + 1;
  std::vector<Rational> grid;
  grid.reserve(f.breakpoints().size() * g.breakpoints().size());
  for (const auto& s : f.breakpoints())
    for (const auto& t : g.breakpoints()) grid.push_back(s + t);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<Polynomial> polys;
  polys.reserve(grid.size() - 1);
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const Rational& lo = grid[k];
    const Rational width = grid[k + 1] - grid[k];
    std::vector<Rational> xs, ys;
    xs.reserve(target_degree + 1);
    ys.reserve(target_degree + 1);
    for (int r = 1; r <= target_degree + 1; ++r) {
      Rational x = lo + width * rat(r, target_degree + 2);
      xs.push_back(x);
      ys.push_back(conv_value(f, g, x));
    }
    polys.push_back(interpolate(xs, ys));
  }
  return PiecewisePoly::from_pieces(std::move(grid), std::move(polys));
}

PiecewisePoly bspline(int n) {
  if (n < 1) raise(Errc::out_of_range, "bspline order must be >= 1");
  PiecewisePoly m1 = PiecewisePoly::indicator(rat(-1, 2), rat(1, 2));
  PiecewisePoly acc = m1;
  for (int k = 2; k <= n; ++k) acc = convolve(acc, m1);
  return acc;
}

PiecewisePoly sd_rearrange(const PiecewisePoly& f) {
  if (f.is_zero()) return f;
  if (!f.is_step()) raise(Errc::not_a_step, "sd_rearrange is defined for step functions");
  std::map<Rational, Rational> length_by_value;  // value -> total length
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    if (f.pieces()[i].is_zero()) continue;
    const Rational& v = f.pieces()[i].coeffs()[0];
    if (v < 0) raise(Errc::negative_values, "sd_rearrange requires a non-negative function");
    length_by_value[v] += f.breakpoints()[i + 1] - f.breakpoints()[i];
  }
  // Largest value innermost; shells grow outward symmetrically.
  std::vector<Rational> radii;  // outer radius of each shell
  std::vector<Rational> shell_values;
  Rational r(0);
  for (auto it = length_by_value.rbegin(); it != length_by_value.rend(); ++it) {
    r += it->second / 2;
    radii.push_back(r);
    shell_values.push_back(it->first);
  }
  if (radii.empty()) return PiecewisePoly();
  const std::size_t k = radii.size();
  std::vector<Rational> bps;
  std::vector<Polynomial> polys;
  for (std::size_t i = k; i-- > 0;) bps.push_back(-radii[i]);
  for (std::size_t i = 0; i < k; ++i) bps.push_back(radii[i]);
  for (std::size_t i = k; i-- > 1;) polys.push_back(Polynomial::constant(shell_values[i]));
  polys.push_back(Polynomial::constant(shell_values[0]));  // center piece (-r_1, r_1)
  for (std::size_t i = 1; i < k; ++i) polys.push_back(Polynomial::constant(shell_values[i]));
  return PiecewisePoly::from_pieces(std::move(bps), std::move(polys));
}

bool is_sd(const PiecewisePoly& f) {
  if (f.is_zero()) return true;
  if (f.reflected() != f) return false;
  // Non-increasing on (0, inf): piecewise derivative <= 0, downward jumps only,
  // and a non-negative drop to zero at the support end.
  const auto& bp = f.breakpoints();
  const auto& ps = f.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (bp[i + 1] <= 0) continue;
    Rational lo = std::max(bp[i], Rational(0));
    if (!nonneg_on(-ps[i].derivative(), lo, bp[i + 1])) return false;
  }
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    const Rational& t = bp[i + 1];
    if (t <= 0) continue;
    if (ps[i](t) < ps[i + 1](t)) return false;
  }
  if (bp.back() > 0 && ps.back()(bp.back()) < 0) return false;
  return true;
}

PiecewisePoly cumulative_from(const PiecewisePoly& f, const Rational& origin) {
  if (f.is_zero()) return PiecewisePoly();
  std::vector<Rational> bps{origin};
  std::vector<Polynomial> polys;
  Rational value(0);
  const auto& bp = f.breakpoints();
  const auto& ps = f.pieces();
  if (bp.front() > origin) {
    bps.push_back(bp.front());
    polys.push_back(Polynomial());  // flat zero before the support starts
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Polynomial anti = ps[i].antiderivative();
    Polynomial piece = anti + Polynomial::constant(value - anti(bp[i]));
    value = piece(bp[i + 1]);
    bps.push_back(bp[i + 1]);
    polys.push_back(std::move(piece));
  }
  return PiecewisePoly::from_pieces(std::move(bps), std::move(polys));
}

Rational PiecewisePoly::level_measure(const Rational& lambda) const {
  if (!(lambda > 0)) raise(Errc::out_of_range, "level_measure requires lambda > 0");
  Rational total(0);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Rational& u = breakpoints_[i];
    const Rational& v = breakpoints_[i + 1];
    Polynomial q = pieces_[i] - Polynomial::constant(lambda);
    if (q.is_zero()) {
      total += v - u;
      continue;
    }
    std::vector<Rational> cuts = sign_change_points(q, u, v);
    cuts.insert(cuts.begin(), u);
    cuts.push_back(v);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (!(cuts[k] < cuts[k + 1])) continue;
      // sample a non-root point to read off the constant sign of this gap
      Rational width = cuts[k + 1] - cuts[k];
      long num = 1, den = 2;
      Rational val(0);
      for (int tries = 0; tries <= q.degree() + 1; ++tries) {
        val = q(cuts[k] + width * rat(num, den));
        if (val != 0) break;
        num = den + 1;
        den = 2 * den + 1;
      }
      if (val > 0) total += width;
    }
  }
  return total;
}

}  // namespace exdisc
