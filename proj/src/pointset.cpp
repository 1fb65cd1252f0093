#include "exdisc/pointset.hpp"

#include <algorithm>
#include <random>

#include "exdisc/errors.hpp"

namespace exdisc {

PointSet::PointSet(std::vector<Rational> points) : points_(std::move(points)) {
  if (points_.empty()) raise(Errc::empty_set, "a point set needs at least one point");
  for (const auto& x : points_)
    if (x < 0 || x > 1) raise(Errc::out_of_range, "coordinate " + to_string(x) + " outside [0,1]");
  std::sort(points_.begin(), points_.end());
}

PointSet centered_grid(long n) {
  if (n < 1) raise(Errc::out_of_range, "grid size must be >= 1");
  std::vector<Rational> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) pts.push_back(rat(2 * k + 1, 2 * n));
  return PointSet(std::move(pts));
}

PointSet translated_grid(long n, const Rational& delta) {
  if (n < 1) raise(Errc::out_of_range, "grid size must be >= 1");
  if (delta < 0 || delta >= rat(1, n))
    raise(Errc::delta_out_of_range, "delta " + to_string(delta) + " outside [0, 1/N)");
  std::vector<Rational> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) pts.push_back(rat(k, n) + delta);
  return PointSet(std::move(pts));
}

Classification classify(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  Rational delta = p[0];  // x_0 - 0/N
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] - rat(static_cast<long>(i), n) != delta)
      return {Classification::Kind::Other, std::nullopt};
  }
  if (delta < 0 || delta >= rat(1, n)) return {Classification::Kind::Other, std::nullopt};
  if (delta == rat(1, 2 * n)) return {Classification::Kind::CenteredGrid, delta};
  return {Classification::Kind::TranslatedGrid, delta};
}

bool is_wrapped_grid(const PointSet& p) {
  const long n = static_cast<long>(p.size());
  for (long k = 0; k < n; ++k)
    if (p[static_cast<std::size_t>(k)] != rat(k + 1, n)) return false;
  return true;
}

PointSet random_set(long n, std::uint64_t seed, long denominator_bound) {
  if (n < 1) raise(Errc::out_of_range, "random_set size must be >= 1");
  if (denominator_bound < 2) raise(Errc::out_of_range, "denominator bound must be >= 2");
  std::mt19937_64 rng(seed);
  std::vector<Rational> pts;
  pts.reserve(static_cast<std::size_t>(n));
  const std::uint64_t m = static_cast<std::uint64_t>(denominator_bound) + 1;
  for (long i = 0; i < n; ++i) {
    // raw modulo reduction: identical draws on every platform
    std::uint64_t k = rng() % m;
    pts.push_back(rat(static_cast<long>(k), denominator_bound));
  }
  return PointSet(std::move(pts));
}

}  // namespace exdisc
