#pragma once

#include "exdisc/piecewise.hpp"
#include "exdisc/pointset.hpp"

namespace exdisc {

// D(t) = #{n : x_n < t} - N*t for t in [0,1]. Throws OutOfRange.
Rational eval_D(const PointSet& p, const Rational& t);

// Two-parameter discrepancy on the full unit square, D(t2) - D(t1);
// antisymmetric in (t1, t2).
Rational eval_Dtilde(const PointSet& p, const Rational& t1, const Rational& t2);

// Exact piecewise-linear representation of D on [0,1]: slope -N everywhere,
// intercept n on (x_{n-1}, x_n), degenerate pieces merged.
PiecewisePoly curve_of_D(const PointSet& p);

// sup |D| over [0,1] taken in the essential sense (one-sided limits at the
// jump points). Direct reading of the piecewise representation.
Rational star_discrepancy_direct(const PointSet& p);

// N max_n |x_n - (2n+1)/(2N)| + 1/2.
Rational closed_form_star(const PointSet& p);

// N sum_n (x_n - (2n+1)/(2N))^2 + 1/12; the squared L2 norm of D.
Rational closed_form_l2_sq(const PointSet& p);

// Direct counterpart: integral of D(t)^2 over [0,1] from the curve.
Rational direct_l2_sq(const PointSet& p);

// integral of |D(t)|^p over [0,1] for integer p >= 1, split exactly at the
// sign changes of D.
Rational direct_lp_pow(const PointSet& p, long power);

// 1 + N max_n (n/N - x_n) - N min_n (n/N - x_n).
Rational closed_form_extreme_star(const PointSet& p);

// sup D - inf D over [0,1] via one-sided limits; equals sup |Dtilde| on the
// square.
Rational extreme_star_direct(const PointSet& p);

enum class Region { Triangle, Square };

// Triangle: 1/12 + (1/2) sum_{n,m} (x_n - x_m - (n-m)/N)^2, the integral of
// Dtilde^2 over {t1 <= t2}. Square doubles it.
Rational closed_form_extreme_l2_sq(const PointSet& p, Region region);

// Cell-wise exact double integral of Dtilde^2 over the full square.
Rational direct_extreme_l2_sq(const PointSet& p);

}  // namespace exdisc
