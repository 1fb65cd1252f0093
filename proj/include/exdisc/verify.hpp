#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exdisc/distribution.hpp"
#include "exdisc/piecewise.hpp"
#include "exdisc/pointset.hpp"

namespace exdisc {

enum class Outcome { Holds, HoldsWithEquality, StrictViolation };

const char* outcome_name(Outcome o);

struct Witness {
  Rational alpha_lo, alpha_hi;  // witness interval (a point when equal)
  Rational lhs, rhs;
};

// Outcome record of one inequality check. For the convolution checks the
// equality classification is universal: HoldsWithEquality means equality for
// the whole family h = 1_(-alpha,alpha), alpha > 0, decided exactly on the
// piecewise representations; lhs/rhs record the one evaluated instance.
struct VerificationReport {
  std::string check_name;
  std::string instance;
  Outcome outcome = Outcome::Holds;
  Rational lhs, rhs;                    // the evaluated instance, where applicable
  bool equality_all_h = false;          // universal equality over symmetric indicators
  bool rearrangements_are_m1 = false;   // all g_j rearrange to M_1 (nconv / thm_main)
  std::optional<Witness> witness;       // strict gap, or violation point
  std::string note;
  double elapsed_seconds = 0;

  bool violated() const { return outcome == Outcome::StrictViolation; }
};

// integral over symmetric intervals: int_I g <= int_I M_1 for every interval
// I symmetric around 0. Requires 0 <= g <= 1 and integral g = 1 (throws
// HypothesisViolated otherwise). `alphas` are additionally evaluated and the
// largest-gap ladder point is recorded.
VerificationReport check_charest(const PiecewisePoly& g, const std::vector<Rational>& alphas);

// integral of h (f*g) <= integral of h (f*M_1) for s.d. f, h and a density g.
VerificationReport check_thm_main(const PiecewisePoly& f, const PiecewisePoly& g,
                                  const PiecewisePoly& h);

// Hardy-Littlewood / Riesz / Luttinger: integral f (g_1*...*g_n) <=
// integral f* (g_1^* * ... * g_n^*), non-negative step inputs, n <= 3.
VerificationReport check_riesz(const PiecewisePoly& f, const std::vector<PiecewisePoly>& gs);

// integral h (g_1*...*g_n) <= integral h* M_n for densities g_j and h >= 0.
VerificationReport check_nconv(const std::vector<PiecewisePoly>& gs, const PiecewisePoly& h);

// Full-profile dominance of the grid distribution, with exact equality
// classification against the structural point-set classification.
VerificationReport check_theorem1(const PointSet& p);
VerificationReport check_theorem2(const PointSet& p);

enum class CheckKind { Charest, ThmMain, Riesz, Nconv, Theorem1, Theorem2 };

// "charest", "main", "riesz", "nconv", "thm1", "thm2" or "all".
std::vector<CheckKind> parse_check_selection(const std::string& name);
const char* check_kind_name(CheckKind k);

struct CheckStats {
  std::string name;
  long trials = 0;
  long holds = 0;
  long equalities = 0;        // HoldsWithEquality
  long rearrangement_m1 = 0;  // instances whose rearrangements were all M_1
  std::vector<VerificationReport> violations;
};

struct CampaignSummary {
  std::uint64_t seed = 0;
  long trials = 0;
  long n_max = 0;
  std::vector<CheckStats> checks;
  double elapsed_seconds = 0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.violations.empty()) return false;
    return true;
  }
};

// Runs `trials` seeded random instances of each selected check; instances are
// generated sequentially from the seed and evaluated in parallel (capped by
// EXDISC_THREADS), so summaries are schedule-independent.
CampaignSummary campaign(std::uint64_t seed, long trials, long n_max,
                         const std::vector<CheckKind>& checks);

}  // namespace exdisc
