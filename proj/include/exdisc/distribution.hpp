#pragma once

#include <optional>
#include <utility>

#include "exdisc/discrepancy.hpp"
#include "exdisc/piecewise.hpp"
#include "exdisc/pointset.hpp"

namespace exdisc {

// Exact distribution profile: F(alpha) = P(|f| < alpha) for alpha >= 0.
// cdf holds F on [0, alpha_max]; F equals `plateau` (total mass, 1 for
// probability densities) for alpha >= alpha_max.
struct DistributionProfile {
  PiecewisePoly cdf;
  Rational alpha_max = Rational(0);
  Rational plateau = Rational(0);

  Rational operator()(const Rational& alpha) const;

  // Survival function plateau - F as a compactly supported piecewise
  // polynomial on [0, alpha_max].
  PiecewisePoly survival() const;

  // F materialized as an ordinary piecewise polynomial on [0, upto],
  // including the plateau piece.
  PiecewisePoly full_cdf(const Rational& upto) const;

  bool operator==(const DistributionProfile& other) const = default;
};

// F(alpha) = integral of `density` over (-alpha, alpha); `density` must be
// non-negative with finite mass.
DistributionProfile profile_from_density(const PiecewisePoly& density);

// Density g of D: (1/N) sum of indicators of I_n = (n - N x_n, n - N x_{n-1})
// with x_{-1} = 0, x_N = 1. Satisfies 0 <= g <= 1, integral 1, values in
// {j/N}.
PiecewisePoly density_of_D(const PointSet& p);

DistributionProfile dist_D(const PointSet& p);

// Profile of |Dtilde| over the unit square, via the convolution identity
// P(|Dtilde| < alpha) = integral of g * reflect(g) over (-alpha, alpha).
DistributionProfile dist_Dtilde(const PointSet& p);

// Closed forms for the centered grid, independent of N:
// F(alpha) = min(2 alpha, 1) and F(alpha) = 1 - (1 - min(alpha, 1))^2.
DistributionProfile grid_profile_D();
DistributionProfile grid_profile_Dtilde();

// Direct geometric oracles, bypassing the density construction entirely.
Rational sublevel_measure_D_direct(const PointSet& p, const Rational& alpha);
Rational sublevel_measure_Dtilde_direct(const PointSet& p, const Rational& alpha);

// The same oracles as full profiles in alpha (piece-growth bookkeeping over
// the curve pieces / grid cells). Agreeing with dist_D / dist_Dtilde as
// canonical piecewise forms validates the density and convolution identities
// for every alpha at once.
DistributionProfile area_profile_D_direct(const PointSet& p);
DistributionProfile area_profile_Dtilde_direct(const PointSet& p);

struct ProfileComparison {
  bool dominated = false;  // candidate <= bound everywhere
  bool equal = false;
  // First alpha-interval (increasing alpha) on which bound - candidate is
  // strictly positive, when the profiles differ.
  std::optional<std::pair<Rational, Rational>> strict_gap;
  // Witness of a domination failure (would indicate a bug).
  std::optional<Rational> violation_alpha;
  Rational violation_candidate = Rational(0);
  Rational violation_bound = Rational(0);
};

// Exact universal comparison of candidate against the dominating bound.
ProfileComparison compare_profiles(const DistributionProfile& candidate,
                                   const DistributionProfile& bound);

}  // namespace exdisc
