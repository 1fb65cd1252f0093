#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "exdisc/rational.hpp"

namespace exdisc {

// Dense univariate polynomial with rational coefficients, stored in ascending
// degree with no trailing zeros. The zero polynomial is the empty vector.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned k) const;

  Polynomial derivative() const;
  Polynomial antiderivative() const;  // constant of integration 0
  Rational integral(const Rational& a, const Rational& b) const;

  // p(a + b*x); used for reflection (a=0, b=-1), shifting and rescaling.
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

// Exact interpolation through distinct nodes (Newton divided differences).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Number of distinct real roots of p in the open interval (a, b).
// Requires p != 0, p(a) != 0, p(b) != 0.
int sturm_count(const Polynomial& p, const Rational& a, const Rational& b);

// True iff p(x) >= 0 for every x in (a, b). Exact.
bool nonneg_on(const Polynomial& p, const Rational& a, const Rational& b);

// Some x in (a, b) with p(x) > 0, if one exists.
std::optional<Rational> find_positive_point(const Polynomial& p, const Rational& a,
                                            const Rational& b);

// A subinterval of (a, b) containing `at` on which p is strictly positive.
// Requires p(at) > 0.
std::pair<Rational, Rational> positive_neighborhood(const Polynomial& p, const Rational& a,
                                                    const Rational& b, const Rational& at);

// Points in (a, b) where p changes sign, sorted increasingly. Exact: every
// crossing is pinned to its rational location; throws
// Error(Errc::irrational_boundary) when a crossing provably (degree <= 2) or
// presumably (after exhausting the denominator budget) has no rational
// location.
std::vector<Rational> sign_change_points(const Polynomial& p, const Rational& a,
                                         const Rational& b);

}  // namespace exdisc
