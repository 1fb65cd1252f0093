#include "exdisc/json_io.hpp"

#include <algorithm>
#include <ostream>

#include "exdisc/errors.hpp"

namespace exdisc {

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  raise(Errc::parse_error, "expected a rational as \"p/q\", decimal string or integer");
}

}  // namespace

json pointset_to_json(const PointSet& p) {
  json points = json::array();
  for (const auto& x : p.points()) points.push_back(to_string(x));
  return json{{"points", points}};
}

PointSet pointset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    raise(Errc::parse_error, "expected {\"points\": [...]}");
  std::vector<Rational> pts;
  for (const auto& v : j["points"]) pts.push_back(rational_from_json(v));
  return PointSet(std::move(pts));
}

json piecewise_to_json(const PiecewisePoly& f) {
  json bps = json::array();
  json pieces = json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(to_string(b));
  for (const auto& p : f.pieces()) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    if (coeffs.empty()) coeffs.push_back("0");
    pieces.push_back(coeffs);
  }
  return json{{"breakpoints", bps}, {"pieces", pieces}};
}

PiecewisePoly piecewise_from_json(const json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("pieces"))
    raise(Errc::parse_error, "expected {\"breakpoints\": [...], \"pieces\": [[...]]}");
  std::vector<Rational> bps;
  std::vector<Polynomial> pieces;
  for (const auto& v : j["breakpoints"]) bps.push_back(rational_from_json(v));
  for (const auto& arr : j["pieces"]) {
    if (!arr.is_array()) raise(Errc::parse_error, "piece coefficients must be an array");
    std::vector<Rational> coeffs;
    for (const auto& c : arr) coeffs.push_back(rational_from_json(c));
    pieces.emplace_back(std::move(coeffs));
  }
  if (pieces.empty()) return PiecewisePoly();
  if (bps.size() != pieces.size() + 1)
    raise(Errc::parse_error, "need exactly one more breakpoint than pieces");
  for (std::size_t i = 0; i + 1 < bps.size(); ++i)
    if (!(bps[i] < bps[i + 1])) raise(Errc::parse_error, "breakpoints must increase strictly");
  return PiecewisePoly::from_pieces(std::move(bps), std::move(pieces));
}

json profile_to_json(const DistributionProfile& prof) {
  return json{{"cdf", piecewise_to_json(prof.cdf)},
              {"alpha_max", to_string(prof.alpha_max)},
              {"plateau", to_string(prof.plateau)}};
}

json norm_value_to_json(const NormValue& v) {
  json out{{"kind", v.kind}, {"approx", v.approx}, {"error_bound", v.error_bound}};
  if (v.exact) out["exact"] = to_string(*v.exact);
  return out;
}

json report_to_json(const VerificationReport& rep) {
  json out{{"check", rep.check_name},
           {"instance", rep.instance},
           {"outcome", outcome_name(rep.outcome)},
           {"lhs", to_string(rep.lhs)},
           {"rhs", to_string(rep.rhs)},
           {"equality_all_h", rep.equality_all_h},
           {"rearrangements_are_M1", rep.rearrangements_are_m1}};
  if (rep.witness) {
    out["witness"] = json{{"alpha_lo", to_string(rep.witness->alpha_lo)},
                          {"alpha_hi", to_string(rep.witness->alpha_hi)},
                          {"lhs", to_string(rep.witness->lhs)},
                          {"rhs", to_string(rep.witness->rhs)}};
  }
  if (!rep.note.empty()) out["note"] = rep.note;
  return out;
}

json summary_to_json(const CampaignSummary& summary) {
  json checks = json::array();
  for (const auto& c : summary.checks) {
    json violations = json::array();
    for (const auto& v : c.violations) violations.push_back(report_to_json(v));
    checks.push_back(json{{"name", c.name},
                          {"trials", c.trials},
                          {"holds", c.holds},
                          {"holds_with_equality", c.equalities},
                          {"rearrangements_m1", c.rearrangement_m1},
                          {"violations", violations}});
  }
  return json{{"seed", summary.seed},
              {"trials", summary.trials},
              {"n_max", summary.n_max},
              {"checks", checks}};
}

void write_samples_csv(std::ostream& os, const PiecewisePoly& f, const Rational& lo,
                       const Rational& hi, int refine) {
  os << "t,f\n";
  std::vector<Rational> ts;
  ts.push_back(lo);
  for (const auto& b : f.breakpoints())
    if (b > lo && b < hi) ts.push_back(b);
  ts.push_back(hi);
  std::vector<Rational> rows;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    rows.push_back(ts[i]);
    for (int r = 1; r <= refine; ++r)
      rows.push_back(ts[i] + (ts[i + 1] - ts[i]) * rat(r, refine + 1));
  }
  rows.push_back(ts.back());
  for (const auto& t : rows) os << to_string(t) << "," << to_string(f(t)) << "\n";
}

void write_profile_csv(std::ostream& os, const DistributionProfile& prof,
                       const DistributionProfile& grid, int refine, bool decimal) {
  os << "alpha,F,F_grid,gap";
  if (decimal) os << ",alpha_dec,F_dec,F_grid_dec,gap_dec";
  os << "\n";
  Rational hi = std::max(prof.alpha_max, grid.alpha_max);
  std::vector<Rational> alphas{Rational(0)};
  for (const auto& b : prof.cdf.breakpoints())
    if (b > 0 && b < hi) alphas.push_back(b);
  for (const auto& b : grid.cdf.breakpoints())
    if (b > 0 && b < hi) alphas.push_back(b);
  alphas.push_back(hi);
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  std::vector<Rational> rows;
  for (std::size_t i = 0; i + 1 < alphas.size(); ++i) {
    rows.push_back(alphas[i]);
    for (int r = 1; r <= refine; ++r)
      rows.push_back(alphas[i] + (alphas[i + 1] - alphas[i]) * rat(r, refine + 1));
  }
  rows.push_back(alphas.back());
  for (const auto& a : rows) {
    Rational fp = prof(a);
    Rational fg = grid(a);
    Rational gap = fg - fp;
    os << to_string(a) << "," << to_string(fp) << "," << to_string(fg) << "," << to_string(gap);
    if (decimal)
      os << "," << to_double(a) << "," << to_double(fp) << "," << to_double(fg) << ","
         << to_double(gap);
    os << "\n";
  }
}

}  // namespace exdisc
