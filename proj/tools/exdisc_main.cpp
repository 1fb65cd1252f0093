#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "exdisc/discrepancy.hpp"
#include "exdisc/distribution.hpp"
#include "exdisc/errors.hpp"
#include "exdisc/json_io.hpp"
#include "exdisc/norms.hpp"
#include "exdisc/pointset.hpp"
#include "exdisc/verify.hpp"

namespace {

using exdisc::json;
using exdisc::PointSet;
using exdisc::Rational;

PointSet load_pointset(const std::string& input, const std::string& inline_points) {
  if (!inline_points.empty()) {
    std::vector<Rational> pts;
    std::stringstream ss(inline_points);
    std::string tok;
    while (std::getline(ss, tok, ',')) pts.push_back(exdisc::parse_rational(tok));
    return PointSet(std::move(pts));
  }
  json doc;
  if (input == "-") {
    try {
      doc = json::parse(std::cin);
    } catch (const json::exception& e) {
      exdisc::raise(exdisc::Errc::parse_error, e.what());
    }
  } else {
    std::ifstream in(input);
    if (!in) exdisc::raise(exdisc::Errc::io_error, "cannot read '" + input + "'");
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      exdisc::raise(exdisc::Errc::parse_error, e.what());
    }
  }
  return exdisc::pointset_from_json(doc);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) exdisc::raise(exdisc::Errc::io_error, "cannot write '" + path + "'");
  out << text;
  if (!out) exdisc::raise(exdisc::Errc::io_error, "write failed for '" + path + "'");
}

int run_grid(long n, const std::string& delta, const std::string& output) {
  PointSet p = delta.empty() ? exdisc::centered_grid(n)
                             : exdisc::translated_grid(n, exdisc::parse_rational(delta));
  write_text(output, exdisc::pointset_to_json(p).dump(2) + "\n");
  return 0;
}

int run_analyze(const std::string& input, const std::string& inline_points,
                const std::vector<std::string>& ps, const std::vector<std::string>& lorentz,
                const std::vector<std::string>& psis, const std::string& tol_str, bool decimal,
                const std::string& output) {
  PointSet p = load_pointset(input, inline_points);
  Rational tol = exdisc::parse_rational(tol_str);

  json out;
  out["n_points"] = p.size();
  auto cls = exdisc::classify(p);
  json cj;
  switch (cls.kind) {
    case exdisc::Classification::Kind::CenteredGrid: cj["kind"] = "CenteredGrid"; break;
    case exdisc::Classification::Kind::TranslatedGrid: cj["kind"] = "TranslatedGrid"; break;
    case exdisc::Classification::Kind::Other: cj["kind"] = "Other"; break;
  }
  if (cls.delta) cj["delta"] = exdisc::to_string(*cls.delta);
  out["classification"] = cj;

  Rational star = exdisc::closed_form_star(p);
  Rational l2 = exdisc::closed_form_l2_sq(p);
  Rational estar = exdisc::closed_form_extreme_star(p);
  Rational el2_tri = exdisc::closed_form_extreme_l2_sq(p, exdisc::Region::Triangle);
  Rational el2_sq = exdisc::closed_form_extreme_l2_sq(p, exdisc::Region::Square);
  out["star"] = exdisc::to_string(star);
  out["l2_sq"] = exdisc::to_string(l2);
  out["extreme_star"] = exdisc::to_string(estar);
  out["extreme_l2_sq_triangle"] = exdisc::to_string(el2_tri);
  out["extreme_l2_sq_square"] = exdisc::to_string(el2_sq);
  if (decimal) {
    out["star_dec"] = exdisc::to_double(star);
    out["l2_sq_dec"] = exdisc::to_double(l2);
    out["extreme_star_dec"] = exdisc::to_double(estar);
    out["extreme_l2_sq_triangle_dec"] = exdisc::to_double(el2_tri);
    out["extreme_l2_sq_square_dec"] = exdisc::to_double(el2_sq);
  }

  out["density"] = exdisc::piecewise_to_json(exdisc::density_of_D(p));
  auto prof_d = exdisc::dist_D(p);
  auto prof_dt = exdisc::dist_Dtilde(p);
  out["dist_D"] = exdisc::profile_to_json(prof_d);
  out["dist_Dtilde"] = exdisc::profile_to_json(prof_dt);

  json norms = json::array();
  for (const auto& pstr : ps) {
    Rational pr = exdisc::parse_rational(pstr);
    for (const auto* which : {"D", "Dtilde"}) {
      auto v = exdisc::lp_norm_pow(std::string(which) == "D" ? prof_d : prof_dt, pr);
      json nj = exdisc::norm_value_to_json(v);
      nj["of"] = which;
      nj["p"] = pstr;
      norms.push_back(nj);
    }
  }
  for (const auto& pq : lorentz) {
    auto comma = pq.find(',');
    if (comma == std::string::npos)
      exdisc::raise(exdisc::Errc::parse_error, "--lorentz expects \"p,q\"");
    Rational pr = exdisc::parse_rational(pq.substr(0, comma));
    Rational qr = exdisc::parse_rational(pq.substr(comma + 1));
    for (const auto* which : {"D", "Dtilde"}) {
      auto v = exdisc::lorentz_norm_pow(std::string(which) == "D" ? prof_d : prof_dt, pr, qr);
      json nj = exdisc::norm_value_to_json(v);
      nj["of"] = which;
      nj["p"] = pq.substr(0, comma);
      nj["q"] = pq.substr(comma + 1);
      norms.push_back(nj);
    }
  }
  for (const auto& name : psis) {
    exdisc::PsiSpec spec = [&] {
      if (!name.empty() && name.front() == '{') {  // inline piecewise spec
        json doc;
        try {
          doc = json::parse(name);
        } catch (const json::exception& e) {
          exdisc::raise(exdisc::Errc::parse_error, e.what());
        }
        return exdisc::PsiSpec::from_pieces(exdisc::piecewise_from_json(doc));
      }
      return exdisc::PsiSpec::preset(name);
    }();
    for (const auto* which : {"D", "Dtilde"}) {
      auto v = exdisc::psi_norm(std::string(which) == "D" ? prof_d : prof_dt, spec, tol);
      json nj = exdisc::norm_value_to_json(v);
      nj["of"] = which;
      nj["psi"] = name;
      norms.push_back(nj);
    }
  }
  out["norms"] = norms;

  write_text(output, out.dump(2) + "\n");
  return 0;
}

int run_verify(const std::string& check, long trials, unsigned long long seed, long n_max,
               const std::string& json_path) {
  auto kinds = exdisc::parse_check_selection(check);
  auto summary = exdisc::campaign(seed, trials, n_max, kinds);
  for (const auto& c : summary.checks) {
    std::cout << "check=" << c.name << " trials=" << c.trials << " holds=" << c.holds
              << " equality=" << c.equalities << " violations=" << c.violations.size() << "\n";
    for (const auto& v : c.violations) {
      std::cout << "  VIOLATION " << v.instance;
      if (!v.note.empty()) std::cout << "  (" << v.note << ")";
      std::cout << "\n";
    }
  }
  std::cerr << "elapsed: " << summary.elapsed_seconds << "s\n";
  if (!json_path.empty()) write_text(json_path, exdisc::summary_to_json(summary).dump(2) + "\n");
  return summary.ok() ? 0 : 1;
}

int run_export(const std::string& input, const std::string& inline_points, const std::string& what,
               int refine, bool decimal, const std::string& output) {
  PointSet p = load_pointset(input, inline_points);
  std::ostringstream os;
  if (what == "dist" || what == "dist-tilde") {
    auto prof = what == "dist" ? exdisc::dist_D(p) : exdisc::dist_Dtilde(p);
    auto grid = what == "dist" ? exdisc::grid_profile_D() : exdisc::grid_profile_Dtilde();
    exdisc::write_profile_csv(os, prof, grid, refine, decimal);
  } else if (what == "density") {
    auto g = exdisc::density_of_D(p);
    exdisc::write_samples_csv(os, g, g.support_lo(), g.support_hi(), refine);
  } else if (what == "curve") {
    exdisc::write_samples_csv(os, exdisc::curve_of_D(p), Rational(0), Rational(1), refine);
  } else {
    exdisc::raise(exdisc::Errc::parse_error, "unknown export target '" + what + "'");
  }
  write_text(output, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exdisc: exact discrepancy functions, distributions and norms"};
  app.require_subcommand(1);

  auto* grid = app.add_subcommand("grid", "emit a centered or translated regular grid");
  long grid_n = 1;
  std::string grid_delta, grid_output = "-";
  grid->add_option("--n", grid_n, "number of points")->required();
  grid->add_option("--delta", grid_delta, "translation offset in [0, 1/N)");
  grid->add_option("--output,-o", grid_output, "output path ('-' for stdout)");

  auto* analyze = app.add_subcommand("analyze", "closed forms, profiles and norms of a point set");
  std::string an_input = "-", an_points, an_tol = "1/1000000000000", an_output = "-";
  std::vector<std::string> an_p, an_lorentz, an_psi;
  bool an_decimal = false;
  analyze->add_option("--input,-i", an_input, "point-set JSON path ('-' for stdin)");
  analyze->add_option("--points", an_points, "inline coordinates, e.g. \"1/4,3/4\"");
  analyze->add_option("--p", an_p, "L_p exponents to evaluate");
  analyze->add_option("--lorentz", an_lorentz, "Lorentz pairs \"p,q\"");
  analyze->add_option("--psi", an_psi,
                      "psi preset (power:<k>, plinear, pquad) or inline piecewise JSON");
  analyze->add_option("--tol", an_tol, "bisection tolerance for psi norms");
  analyze->add_flag("--decimal", an_decimal, "add rounded decimal columns");
  analyze->add_option("--output,-o", an_output, "output path ('-' for stdout)");

  auto* verify = app.add_subcommand("verify", "property-verification campaigns");
  std::string v_check = "all", v_json;
  long v_trials = 100, v_nmax = 30;
  unsigned long long v_seed = 0;
  verify->add_option("--check", v_check, "charest|main|riesz|nconv|thm1|thm2|all");
  verify->add_option("--trials", v_trials, "instances per check");
  verify->add_option("--seed", v_seed, "campaign seed");
  verify->add_option("--n-max", v_nmax, "largest point-set size");
  verify->add_option("--json", v_json, "write the JSON summary here");

  auto* exp = app.add_subcommand("export", "CSV export of profiles, densities and curves");
  std::string e_input = "-", e_points, e_what = "dist", e_output = "-";
  int e_refine = 1;
  bool e_decimal = false;
  exp->add_option("--input,-i", e_input, "point-set JSON path ('-' for stdin)");
  exp->add_option("--points", e_points, "inline coordinates");
  exp->add_option("--what", e_what, "dist|dist-tilde|density|curve");
  exp->add_option("--refine", e_refine, "extra sample points per piece");
  exp->add_flag("--decimal", e_decimal, "add rounded decimal columns");
  exp->add_option("--output,-o", e_output, "output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (grid->parsed()) return run_grid(grid_n, grid_delta, grid_output);
    if (analyze->parsed())
      return run_analyze(an_input, an_points, an_p, an_lorentz, an_psi, an_tol, an_decimal,
                         an_output);
    if (verify->parsed()) return run_verify(v_check, v_trials, v_seed, v_nmax, v_json);
    if (exp->parsed()) return run_export(e_input, e_points, e_what, e_refine, e_decimal, e_output);
  } catch (const exdisc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == exdisc::Errc::io_error ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
