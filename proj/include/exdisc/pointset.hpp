#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exdisc/rational.hpp"

namespace exdisc {

// Immutable sorted N-element point set in [0, 1] with exact coordinates.
// Duplicate coordinates are permitted.
class PointSet {
 public:
  // Sorts the input. Throws EmptySet / OutOfRange.
  explicit PointSet(std::vector<Rational> points);

  std::size_t size() const { return points_.size(); }
  const std::vector<Rational>& points() const { return points_; }
  const Rational& operator[](std::size_t i) const { return points_[i]; }

  bool operator==(const PointSet& other) const = default;

 private:
  std::vector<Rational> points_;
};

// Gamma_N: x_n = (2n+1)/(2N), n = 0..N-1.
PointSet centered_grid(long n);

// Gamma_N^delta: x_n = n/N + delta, delta in [0, 1/N). Throws DeltaOutOfRange.
PointSet translated_grid(long n, const Rational& delta);

struct Classification {
  enum class Kind { CenteredGrid, TranslatedGrid, Other } kind;
  // Offset delta for TranslatedGrid / CenteredGrid (1/(2N) in the latter case).
  std::optional<Rational> delta;

  bool is_grid_family() const { return kind != Kind::Other; }
};

// Exact structural classification. TranslatedGrid iff x_n - n/N is one common
// value in [0, 1/N); CenteredGrid iff additionally that value is 1/(2N).
Classification classify(const PointSet& p);

// x_n = (n+1)/N for all n: the right-endpoint twin of translated_grid(N, 0).
// The point at 1 lies in no half-open interval [t1, t2), so the two-parameter
// discrepancy of this set coincides a.e. with that of the delta = 0 grid; it
// is the one extremal set of |Dtilde| that classify() does not recognize as a
// translated grid.
bool is_wrapped_grid(const PointSet& p);

// Deterministic pseudo-random set: N draws from {k/denominator_bound : 0 <= k
// <= denominator_bound}, sorted. Identical (n, seed, denominator_bound)
// always produce identical sets.
PointSet random_set(long n, std::uint64_t seed, long denominator_bound);

}  // namespace exdisc
