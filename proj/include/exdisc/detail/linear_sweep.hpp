#pragma once

#include <map>

#include "exdisc/piecewise.hpp"

namespace exdisc::detail {

// Accumulates a sum of continuous piecewise-linear functions, each expressed
// through its slope jumps (second-derivative impulses), and assembles the
// canonical piecewise form. The sum must vanish at -infinity and, for a
// compactly supported result, have total slope jump zero and total mass
// consistent with value zero at +infinity.
class LinearSweep {
 public:
  void add_slope_jump(const Rational& at, const Rational& jump) {
    auto [it, inserted] = jumps_.try_emplace(at, jump);
    if (!inserted) it->second += jump;
  }

  // Adds the "tent" overlap function x -> s * |(a,b) cap (x - d, x - c)|.
  void add_tent(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                const Rational& s) {
    if (s == 0) return;
    Rational m1 = a + d, m2 = b + c;
    if (m2 < m1) std::swap(m1, m2);
    add_slope_jump(a + c, s);
    add_slope_jump(m1, -s);
    add_slope_jump(m2, -s);
    add_slope_jump(b + d, s);
  }

  PiecewisePoly build() const {
    std::vector<Rational> bps;
    std::vector<Polynomial> polys;
    bps.reserve(jumps_.size());
    Rational slope(0), value(0);
    const Rational* prev = nullptr;
    for (const auto& [at, jump] : jumps_) {
      if (prev != nullptr) {
        if (at > *prev) {
          polys.push_back(Polynomial({value - slope * *prev, slope}));
          value += slope * (at - *prev);
          bps.push_back(at);
        }
      } else {
        bps.push_back(at);
      }
      slope += jump;
      prev = &at;
    }
    if (polys.empty()) return PiecewisePoly();
    return PiecewisePoly::from_pieces(std::move(bps), std::move(polys));
  }

 private:
  std::map<Rational, Rational> jumps_;
};

}  // namespace exdisc::detail
