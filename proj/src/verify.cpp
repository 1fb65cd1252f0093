#include "exdisc/verify.hpp"

#include <atomic>
#include <random>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "exdisc/errors.hpp"

namespace exdisc {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::HoldsWithEquality: return "HoldsWithEquality";
    case Outcome::StrictViolation: return "StrictViolation";
  }
  return "?";
}

const char* check_kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::Charest: return "charest";
    case CheckKind::ThmMain: return "main";
    case CheckKind::Riesz: return "riesz";
    case CheckKind::Nconv: return "nconv";
    case CheckKind::Theorem1: return "thm1";
    case CheckKind::Theorem2: return "thm2";
  }
  return "?";
}

std::vector<CheckKind> parse_check_selection(const std::string& name) {
  if (name == "all")
    return {CheckKind::Charest, CheckKind::ThmMain, CheckKind::Riesz,
            CheckKind::Nconv,   CheckKind::Theorem1, CheckKind::Theorem2};
  for (CheckKind k : {CheckKind::Charest, CheckKind::ThmMain, CheckKind::Riesz, CheckKind::Nconv,
                      CheckKind::Theorem1, CheckKind::Theorem2})
    if (name == check_kind_name(k)) return {k};
  raise(Errc::parse_error, "unknown check '" + name + "'");
}

namespace {

std::string describe(const PiecewisePoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    if (i) os << ", ";
    os << "(" << to_string(f.breakpoints()[i]) << "," << to_string(f.breakpoints()[i + 1]) << "):";
    os << "[";
    const auto& c = f.pieces()[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) os << " ";
      os << to_string(c[j]);
    }
    os << "]";
  }
  os << "}";
  return os.str();
}

std::string describe(const PointSet& p) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << to_string(p[i]);
  }
  os << "}";
  return os.str();
}

void validate_density(const PiecewisePoly& g, const char* who) {
  if (g.integral() != 1)
    raise(Errc::hypothesis_violated, std::string(who) + ": density must have integral 1");
  for (std::size_t i = 0; i < g.piece_count(); ++i) {
    const auto& piece = g.pieces()[i];
    const Rational& lo = g.breakpoints()[i];
    const Rational& hi = g.breakpoints()[i + 1];
    if (!nonneg_on(piece, lo, hi) ||
        !nonneg_on(Polynomial::constant(Rational(1)) - piece, lo, hi))
      raise(Errc::hypothesis_violated, std::string(who) + ": density must satisfy 0 <= g <= 1");
  }
}

void validate_nonneg_step(const PiecewisePoly& f, const char* who) {
  if (!f.is_step()) raise(Errc::not_a_step, std::string(who) + ": step function required");
  for (const auto& piece : f.pieces())
    if (!piece.is_zero() && piece.coeffs()[0] < 0)
      raise(Errc::negative_values, std::string(who) + ": negative value");
}

PiecewisePoly fold_convolve(const std::vector<PiecewisePoly>& gs) {
  PiecewisePoly acc = gs.front();
  for (std::size_t i = 1; i < gs.size(); ++i) acc = convolve(acc, gs[i]);
  return acc;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

Witness gap_witness(const ProfileComparison& cmp, const DistributionProfile& cand,
                    const DistributionProfile& bound) {
  Witness w;
  if (cmp.violation_alpha) {
    w.alpha_lo = w.alpha_hi = *cmp.violation_alpha;
    w.lhs = cmp.violation_candidate;
    w.rhs = cmp.violation_bound;
  } else if (cmp.strict_gap) {
    w.alpha_lo = cmp.strict_gap->first;
    w.alpha_hi = cmp.strict_gap->second;
    Rational mid = (w.alpha_lo + w.alpha_hi) / 2;
    w.lhs = cand(mid);
    w.rhs = bound(mid);
  }
  return w;
}

}  // namespace

VerificationReport check_charest(const PiecewisePoly& g, const std::vector<Rational>& alphas) {
  Timer timer;
  validate_nonneg_step(g, "charest");
  validate_density(g, "charest");
  VerificationReport rep;
  rep.check_name = "charest";
  rep.instance = "g=" + describe(g);

  const PiecewisePoly m1 = bspline(1);
  DistributionProfile prof = profile_from_density(g);
  DistributionProfile grid = grid_profile_D();
  ProfileComparison cmp = compare_profiles(prof, grid);

  // ladder spot checks on top of the universal comparison
  std::vector<Rational> ladder = alphas;
  for (const auto& b : g.breakpoints()) {
    Rational a = abs(b);
    if (a > 0) ladder.push_back(a);
  }
  for (const auto& a : ladder) {
    Rational lhs = g.integral(-a, a);
    Rational rhs = std::min(Rational(2 * a), Rational(1));
    if (lhs > rhs) {
      rep.outcome = Outcome::StrictViolation;
      rep.witness = Witness{a, a, lhs, rhs};
      rep.note = "ladder point exceeds the bound";
      rep.elapsed_seconds = timer.seconds();
      return rep;
    }
  }

  if (!cmp.dominated) {
    rep.outcome = Outcome::StrictViolation;
    rep.witness = gap_witness(cmp, prof, grid);
    rep.elapsed_seconds = timer.seconds();
    return rep;
  }
  rep.equality_all_h = cmp.equal;
  rep.rearrangements_are_m1 = sd_rearrange(g) == m1;
  bool is_m1 = g == m1;
  if (cmp.equal != is_m1) {
    rep.outcome = Outcome::StrictViolation;
    rep.note = "equality classification disagrees with g == M_1";
    rep.elapsed_seconds = timer.seconds();
    return rep;
  }
  rep.outcome = cmp.equal ? Outcome::HoldsWithEquality : Outcome::Holds;
  if (cmp.strict_gap) rep.witness = gap_witness(cmp, prof, grid);
  Rational probe = cmp.strict_gap ? (cmp.strict_gap->first + cmp.strict_gap->second) / 2 : rat(1, 4);
  rep.lhs = prof(probe);
  rep.rhs = grid(probe);
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

VerificationReport check_thm_main(const PiecewisePoly& f, const PiecewisePoly& g,
                                  const PiecewisePoly& h) {
  Timer timer;
  if (!is_sd(f)) raise(Errc::hypothesis_violated, "thm_main: f must be symmetrically decreasing");
  if (!is_sd(h)) raise(Errc::hypothesis_violated, "thm_main: h must be symmetrically decreasing");
  validate_density(g, "thm_main");

  VerificationReport rep;
  rep.check_name = "main";
  rep.instance = "f=" + describe(f) + " g=" + describe(g) + " h=" + describe(h);

  const PiecewisePoly m1 = bspline(1);
  PiecewisePoly fg = convolve(f, g);
  PiecewisePoly fm = convolve(f, m1);
  rep.lhs = h.inner(fg);
  rep.rhs = h.inner(fm);
  if (rep.lhs > rep.rhs) {
    rep.outcome = Outcome::StrictViolation;
    rep.witness = Witness{Rational(0), Rational(0), rep.lhs, rep.rhs};
    rep.note = "instance inequality fails";
    rep.elapsed_seconds = timer.seconds();
    return rep;
  }

  DistributionProfile prof_fg = profile_from_density(fg);
  DistributionProfile prof_fm = profile_from_density(fm);
  ProfileComparison cmp = compare_profiles(prof_fg, prof_fm);
  if (!cmp.dominated) {
    rep.outcome = Outcome::StrictViolation;
    rep.witness = gap_witness(cmp, prof_fg, prof_fm);
    rep.note = "indicator-family inequality fails";
    rep.elapsed_seconds = timer.seconds();
    return rep;
  }
  rep.equality_all_h = cmp.equal;
  rep.rearrangements_are_m1 = g == m1;
  if (!f.is_zero() && rep.equality_all_h != rep.rearrangements_are_m1) {
    rep.outcome = Outcome::StrictViolation;
    rep.note = "equality clause violated: equality for all h must pin g = M_1";
    rep.elapsed_seconds = timer.seconds();
    return rep;
  }
  rep.outcome = rep.equality_all_h ? Outcome::HoldsWithEquality : Outcome::Holds;
  if (cmp.strict_gap) rep.witness = gap_witness(cmp, prof_fg, prof_fm);
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

VerificationReport check_riesz(const PiecewisePoly& f, const std::vector<PiecewisePoly>& gs) {
  Timer timer;
  if (gs.empty() || gs.size() > 3) raise(Errc::out_of_range, "riesz: 1..3 factors supported");
  validate_nonneg_step(f, "riesz");
  for (const auto& g : gs) validate_nonneg_step(g, "riesz");

  VerificationReport rep;
  rep.check_name = "riesz";
  std::ostringstream os;
  os << "f=" << describe(f);
  for (std::size_t i = 0; i < gs.size(); ++i) os << " g" << i + 1 << "=" << describe(gs[i]);
  rep.instance = os.str();

  PiecewisePoly conv = fold_convolve(gs);
  std::vector<PiecewisePoly> rearranged;
  rearranged.reserve(gs.size());
  for (const auto& g : gs) rearranged.push_back(sd_rearrange(g));
  PiecewisePoly conv_star = fold_convolve(rearranged);
  rep.lhs = f.inner(conv);
  rep.rhs = sd_rearrange(f).inner(conv_star);
  if (rep.lhs > rep.rhs) {
    rep.outcome = Outcome::StrictViolation;
    rep.witness = Witness{Rational(0), Rational(0), rep.lhs, rep.rhs};
  } else {
    rep.outcome = rep.lhs == rep.rhs ? Outcome::HoldsWithEquality : Outcome::Holds;
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

VerificationReport check_nconv(const std::vector<PiecewisePoly>& gs, const PiecewisePoly& h) {
  Timer timer;
  if (gs.empty() || gs.size() > 3) raise(Errc::out_of_range, "nconv: 1..3 factors supported");
  for (const auto& g : gs) validate_density(g, "nconv");
  validate_nonneg_step(h, "nconv");

  VerificationReport rep;
  rep.check_name = "nconv";
  std::ostringstream os;
  for (std::size_t i = 0; i < gs.size(); ++i) os << (i ? " " : "") << "g" << i + 1 << "=" << describe(gs[i]);
  os << " h=" << describe(h);
  rep.instance = os.str();

  const PiecewisePoly m1 = bspline(1);
  const PiecewisePoly mn = bspline(static_cast<int>(gs.size()));
  PiecewisePoly conv = fold_convolve(gs);
  rep.lhs = h.inner(conv);
  rep.rhs = sd_rearrange(h).inner(mn);
  if (rep.lhs > rep.rhs) {
    rep.outcome = Outcome::StrictViolation;
    rep.witness = Witness{Rational(0), Rational(0), rep.lhs, rep.rhs};
    rep.note = "instance inequality fails";
    rep.elapsed_seconds = timer.seconds();
    return rep;
  }

  DistributionProfile prof_conv = profile_from_density(conv);
  DistributionProfile prof_mn = profile_from_density(mn);
  ProfileComparison cmp = compare_profiles(prof_conv, prof_mn);
  if (!cmp.dominated) {
    rep.outcome = Outcome::StrictViolation;
    rep.witness = gap_witness(cmp, prof_conv, prof_mn);
    rep.note = "indicator-family inequality fails";
    rep.elapsed_seconds = timer.seconds();
    return rep;
  }
  rep.equality_all_h = cmp.equal;
  rep.rearrangements_are_m1 = true;
  for (const auto& g : gs)
    if (sd_rearrange(g) != m1) rep.rearrangements_are_m1 = false;
  if (rep.equality_all_h && !rep.rearrangements_are_m1) {
    rep.outcome = Outcome::StrictViolation;
    rep.note = "equality clause violated: equality for all h must pin rearrangements to M_1";
    rep.elapsed_seconds = timer.seconds();
    return rep;
  }
  rep.outcome = rep.equality_all_h ? Outcome::HoldsWithEquality : Outcome::Holds;
  if (cmp.strict_gap) rep.witness = gap_witness(cmp, prof_conv, prof_mn);
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

namespace {

VerificationReport check_theorem_common(const char* name, const PointSet& p,
                                        const DistributionProfile& prof,
                                        const DistributionProfile& grid, bool expect_equality) {
  Timer timer;
  VerificationReport rep;
  rep.check_name = name;
  rep.instance = "P=" + describe(p);
  ProfileComparison cmp = compare_profiles(prof, grid);
  if (!cmp.dominated) {
    rep.outcome = Outcome::StrictViolation;
    rep.witness = gap_witness(cmp, prof, grid);
    rep.note = "profile dominance fails";
    rep.elapsed_seconds = timer.seconds();
    return rep;
  }
  rep.equality_all_h = cmp.equal;
  if (cmp.equal != expect_equality) {
    rep.outcome = Outcome::StrictViolation;
    rep.note = "equality classification disagrees with the structural classification";
    rep.elapsed_seconds = timer.seconds();
    return rep;
  }
  rep.outcome = cmp.equal ? Outcome::HoldsWithEquality : Outcome::Holds;
  if (cmp.strict_gap) rep.witness = gap_witness(cmp, prof, grid);
  Rational probe = cmp.strict_gap ? (cmp.strict_gap->first + cmp.strict_gap->second) / 2 : rat(1, 4);
  rep.lhs = prof(probe);
  rep.rhs = grid(probe);
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

}  // namespace

VerificationReport check_theorem1(const PointSet& p) {
  return check_theorem_common("thm1", p, dist_D(p), grid_profile_D(),
                              classify(p).kind == Classification::Kind::CenteredGrid);
}

VerificationReport check_theorem2(const PointSet& p) {
  // The extremal family of |Dtilde| is Gamma_N^delta for delta in the CLOSED
  // range [0, 1/N]: delta = 1/N is the wrapped grid, whose point at 1 is
  // counted by no interval [t1, t2).
  bool extremal = classify(p).is_grid_family() || is_wrapped_grid(p);
  VerificationReport rep =
      check_theorem_common("thm2", p, dist_Dtilde(p), grid_profile_Dtilde(), extremal);
  if (rep.outcome == Outcome::HoldsWithEquality && is_wrapped_grid(p) &&
      !classify(p).is_grid_family())
    rep.note = "equality via the right-endpoint twin of the delta = 0 grid";
  return rep;
}

// ---------------------------------------------------------------------------
// campaign: seeded instance generation + parallel evaluation
// ---------------------------------------------------------------------------

namespace {

struct Gen {
  std::mt19937_64 eng;
  explicit Gen(std::uint64_t seed) : eng(seed) {}

  std::uint64_t u(std::uint64_t bound) { return eng() % bound; }  // 0..bound-1
  long li(long lo, long hi) { return lo + static_cast<long>(u(static_cast<std::uint64_t>(hi - lo + 1))); }

  Rational fraction(long max_den, long lo_num = 0) {
    long den = li(1, max_den);
    long num = li(lo_num, den);
    return rat(num, den);
  }

  // value in (0,1]
  Rational unit_value() { return fraction(8, 1); }

  // value strictly inside (0,1)
  Rational interior_value() {
    long den = li(2, 9);
    long num = li(1, den - 1);
    return rat(num, den);
  }

  // Disjoint blocks with the given values, total mass exactly 1.
  PiecewisePoly density_blocks(const std::vector<Rational>& values) {
    std::vector<Rational> lengths;
    Rational mass(0);
    for (const auto& v : values) {
      Rational len = fraction(6, 1) + rat(1, 6);
      lengths.push_back(len);
      mass += v * len;
    }
    std::vector<std::pair<Rational, Rational>> intervals;
    Rational pos = -fraction(4) - 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
      Rational len = lengths[i] / mass;  // scaled so the total is exactly 1
      intervals.emplace_back(pos, pos + len);
      pos += len;
      if (u(2) == 0) pos += fraction(5);  // occasional gap
    }
    return make_step(intervals, values);
  }

  // Random density: M_1, a point-set density, or synthetic blocks with an
  // interior value (the latter never rearranges to M_1).
  PiecewisePoly density(long n_max, bool allow_translates) {
    std::uint64_t pick = u(8);
    if (pick == 0) return bspline(1);
    if (pick <= 3 && allow_translates) {
      PointSet p = random_set(li(1, std::max(2L, n_max)), eng(), li(4, 16));
      return density_of_D(p);
    }
    std::vector<Rational> values{interior_value()};
    std::size_t extra = u(3);
    for (std::size_t i = 0; i < extra; ++i) values.push_back(unit_value());
    return density_blocks(values);
  }

  // Non-negative step function on a few intervals.
  PiecewisePoly nonneg_step(int max_blocks, long value_bound) {
    long k = li(1, max_blocks);
    std::vector<std::pair<Rational, Rational>> intervals;
    std::vector<Rational> values;
    Rational pos = -fraction(6) - fraction(3);
    for (long i = 0; i < k; ++i) {
      Rational len = fraction(5, 1);
      intervals.emplace_back(pos, pos + len);
      pos += len + (u(2) ? fraction(4) : Rational(0));
      values.push_back(fraction(4) * value_bound);
    }
    PiecewisePoly out = make_step(intervals, values);
    if (out.is_zero()) out = PiecewisePoly::indicator(Rational(0), Rational(1));
    return out;
  }

  // Symmetric decreasing step: nested symmetric shells.
  PiecewisePoly sd_step(int max_shells, long value_bound) {
    long k = li(1, max_shells);
    std::vector<std::pair<Rational, Rational>> intervals;
    std::vector<Rational> values;
    Rational radius(0);
    for (long i = 0; i < k; ++i) {
      radius += fraction(5, 1);
      intervals.emplace_back(-radius, radius);
      values.push_back(fraction(4, 1) * Rational(value_bound) / 4);
    }
    return make_step(intervals, values);
  }

  PointSet point_set(long n_max) {
    std::uint64_t pick = u(10);
    long n = li(1, n_max);
    if (pick == 0) return centered_grid(n);
    if (pick == 1) {
      long den = li(1, 8);
      Rational delta = rat(li(0, den - 1), den) / n;  // in [0, 1/N)
      return translated_grid(n, delta);
    }
    long denoms[] = {8, 12, 16, 100, 1000};
    return random_set(n, eng(), denoms[u(5)]);
  }
};

unsigned worker_count(std::size_t tasks) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("EXDISC_THREADS")) {
    long cap = std::atol(env);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  if (tasks < hw) hw = static_cast<unsigned>(tasks);
  return hw;
}

void parallel_run(std::vector<std::function<VerificationReport()>>& tasks,
                  std::vector<VerificationReport>& out) {
  out.resize(tasks.size());
  unsigned workers = worker_count(tasks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      try {
        out[i] = tasks[i]();
      } catch (const std::exception& e) {
        VerificationReport rep;
        rep.check_name = "internal";
        rep.outcome = Outcome::StrictViolation;
        rep.note = std::string("exception: ") + e.what();
        out[i] = rep;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
}

std::vector<std::function<VerificationReport()>> build_tasks(CheckKind kind, std::uint64_t seed,
                                                             long trials, long n_max) {
  Gen gen(seed);
  std::vector<std::function<VerificationReport()>> tasks;
  tasks.reserve(static_cast<std::size_t>(trials));
  const std::vector<Rational> ladder = {rat(1, 8), rat(1, 4), rat(3, 8), rat(1, 2),
                                        rat(3, 4), Rational(1), rat(3, 2), Rational(2)};
  for (long t = 0; t < trials; ++t) {
    switch (kind) {
      case CheckKind::Charest: {
        PiecewisePoly g = gen.density(n_max, true);
        tasks.emplace_back([g, ladder] { return check_charest(g, ladder); });
        break;
      }
      case CheckKind::ThmMain: {
        PiecewisePoly f =
            gen.u(5) == 0 ? bspline(static_cast<int>(gen.li(2, 3))).scaled(gen.fraction(3, 1))
                          : gen.sd_step(3, 2);
        PiecewisePoly g = gen.density(4, true);
        PiecewisePoly h = gen.sd_step(2, 2);
        tasks.emplace_back([f, g, h] { return check_thm_main(f, g, h); });
        break;
      }
      case CheckKind::Riesz: {
        bool all_sd = gen.u(6) == 0;
        PiecewisePoly f = all_sd ? gen.sd_step(3, 2) : gen.nonneg_step(3, 2);
        std::vector<PiecewisePoly> gs;
        std::size_t n = 1 + gen.u(3);
        for (std::size_t i = 0; i < n; ++i)
          gs.push_back(all_sd ? gen.sd_step(2, 2) : gen.nonneg_step(2, 2));
        tasks.emplace_back([f, gs] { return check_riesz(f, gs); });
        break;
      }
      case CheckKind::Nconv: {
        std::size_t n = 1 + gen.u(3);
        std::vector<PiecewisePoly> gs;
        if (n == 1) {
          gs.push_back(gen.density(4, false));  // M_1 or interior-valued blocks
        } else if (n == 2) {
          PiecewisePoly g = gen.density(4, true);
          gs.push_back(g);
          gs.push_back(g.reflected());
        } else {
          PiecewisePoly g = gen.density(3, true);
          gs.push_back(g);
          gs.push_back(g.reflected());
          PiecewisePoly g2 = gen.density(3, true);
          gs.push_back((g2 + g2.reflected()).scaled(rat(1, 2)));
        }
        PiecewisePoly h = gen.u(2) ? gen.sd_step(2, 2) : gen.nonneg_step(2, 2);
        tasks.emplace_back([gs, h] { return check_nconv(gs, h); });
        break;
      }
      case CheckKind::Theorem1: {
        PointSet p = gen.point_set(n_max);
        tasks.emplace_back([p] { return check_theorem1(p); });
        break;
      }
      case CheckKind::Theorem2: {
        PointSet p = gen.point_set(n_max);
        tasks.emplace_back([p] { return check_theorem2(p); });
        break;
      }
    }
  }
  return tasks;
}

}  // namespace

CampaignSummary campaign(std::uint64_t seed, long trials, long n_max,
                         const std::vector<CheckKind>& checks) {
  Timer timer;
  CampaignSummary summary;
  summary.seed = seed;
  summary.trials = trials;
  summary.n_max = n_max;
  for (CheckKind kind : checks) {
    // per-check stream, independent of which other checks run
    std::uint64_t check_seed = seed * 1000003ULL + static_cast<std::uint64_t>(kind) * 7919ULL + 1;
    auto tasks = build_tasks(kind, check_seed, trials, n_max);
    std::vector<VerificationReport> reports;
    parallel_run(tasks, reports);
    CheckStats stats;
    stats.name = check_kind_name(kind);
    stats.trials = trials;
    for (const auto& rep : reports) {
      if (rep.outcome == Outcome::StrictViolation) {
        stats.violations.push_back(rep);
      } else {
        ++stats.holds;
        if (rep.outcome == Outcome::HoldsWithEquality) ++stats.equalities;
      }
      if (rep.rearrangements_are_m1) ++stats.rearrangement_m1;
      // the equality classification must match the rearrangement condition
      if ((kind == CheckKind::Nconv || kind == CheckKind::ThmMain) &&
          rep.outcome != Outcome::StrictViolation &&
          rep.equality_all_h != rep.rearrangements_are_m1) {
        VerificationReport mismatch = rep;
        mismatch.outcome = Outcome::StrictViolation;
        mismatch.note = "equality/rearrangement classification mismatch";
        stats.violations.push_back(mismatch);
      }
    }
    summary.checks.push_back(std::move(stats));
  }
  summary.elapsed_seconds = timer.seconds();
  return summary;
}

}  // namespace exdisc
