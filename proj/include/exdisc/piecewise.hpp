#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exdisc/polynomial.hpp"
#include "exdisc/rational.hpp"

namespace exdisc {

// Compactly supported piecewise polynomial on the real line.
//
// breakpoints_ = t_0 < ... < t_m; pieces_[i] lives on the open interval
// (t_i, t_{i+1}); the function is identically zero outside [t_0, t_m].
// The zero function is the empty piece list.
//
// All operations treat functions as equivalence classes modulo null sets:
// values at breakpoints carry no semantic weight (evaluation uses the
// right-limit convention). Every constructor canonicalizes -- adjacent equal
// pieces are merged and zero pieces are trimmed from the support boundary,
// so structural equality coincides with equality almost everywhere.
class PiecewisePoly {
 public:
  PiecewisePoly() = default;  // the zero function

  static PiecewisePoly from_pieces(std::vector<Rational> breakpoints,
                                   std::vector<Polynomial> pieces);
  static PiecewisePoly indicator(const Rational& lo, const Rational& hi);
  static PiecewisePoly constant_on(const Rational& lo, const Rational& hi, const Rational& value);

  bool is_zero() const { return pieces_.empty(); }
  std::size_t piece_count() const { return pieces_.size(); }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const Rational& support_lo() const;
  const Rational& support_hi() const;
  int max_degree() const;
  bool is_step() const;

  // Value of the piece whose open interval contains t; at a breakpoint the
  // right limit (0 at and beyond the upper support end).
  Rational operator()(const Rational& t) const;

  PiecewisePoly operator+(const PiecewisePoly& other) const;
  PiecewisePoly operator-(const PiecewisePoly& other) const;
  PiecewisePoly operator*(const PiecewisePoly& other) const;  // pointwise product
  PiecewisePoly scaled(const Rational& c) const;
  PiecewisePoly reflected() const;  // x -> f(-x)

  // x -> f(a + b*x), b != 0.
  PiecewisePoly compose_affine(const Rational& a, const Rational& b) const;

  // f restricted to (lo, hi), zero elsewhere.
  PiecewisePoly restricted(const Rational& lo, const Rational& hi) const;

  Rational integral() const;
  Rational integral(const Rational& a, const Rational& b) const;
  // Bounds may be absent, meaning -inf / +inf (compact support keeps all
  // integrals finite).
  Rational integral(const std::optional<Rational>& a, const std::optional<Rational>& b) const;

  Rational inner(const PiecewisePoly& other) const;  // integral of f*g over the line

  bool operator==(const PiecewisePoly& other) const = default;

  // Exact Lebesgue measure of {t : f(t) >= lambda}, lambda > 0.
  Rational level_measure(const Rational& lambda) const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;

  // Index of the piece whose closed-open interval [t_i, t_{i+1}) contains t,
  // or npos when t is outside.
  std::size_t piece_index(const Rational& t) const;
};

// Sum of values[i] * indicator(intervals[i]); overlapping intervals add.
// Throws Error(Errc::malformed_interval) if an interval has lower > upper.
PiecewisePoly make_step(const std::vector<std::pair<Rational, Rational>>& intervals,
                        const std::vector<Rational>& values);

// Exact convolution (f*g)(x) = integral of f(y) g(x-y) dy.
PiecewisePoly convolve(const PiecewisePoly& f, const PiecewisePoly& g);

// Centered cardinal B-spline of order n >= 1: the n-fold convolution power of
// the indicator of (-1/2, 1/2).
PiecewisePoly bspline(int n);

// Symmetric decreasing rearrangement of a non-negative step function.
PiecewisePoly sd_rearrange(const PiecewisePoly& f);

// True iff f is (a.e.) even and non-increasing on (0, infinity).
bool is_sd(const PiecewisePoly& f);

// x -> integral of f over (origin, x), as pieces on [origin, support_hi(f)].
// f must vanish below origin. The result is left on its natural domain; it is
// not compactly supported as a function (callers track the constant tail).
PiecewisePoly cumulative_from(const PiecewisePoly& f, const Rational& origin);

}  // namespace exdisc
