#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "exdisc/distribution.hpp"
#include "exdisc/norms.hpp"
#include "exdisc/piecewise.hpp"
#include "exdisc/pointset.hpp"
#include "exdisc/verify.hpp"

namespace exdisc {

using json = nlohmann::json;

// {"points": ["1/4", "3/4"]}; accepts "p/q", decimal strings and JSON
// integers. Throws ParseError on malformed documents.
json pointset_to_json(const PointSet& p);
PointSet pointset_from_json(const json& j);

// {"breakpoints": ["-1/2","1/2"], "pieces": [["1"]]}, coefficients ascending.
json piecewise_to_json(const PiecewisePoly& f);
PiecewisePoly piecewise_from_json(const json& j);

json profile_to_json(const DistributionProfile& prof);

json norm_value_to_json(const NormValue& v);

json report_to_json(const VerificationReport& rep);

// Deterministic summary: no timing fields, fixed key order (nlohmann
// serializes objects with sorted keys), so identical campaigns produce
// byte-identical documents.
json summary_to_json(const CampaignSummary& summary);

// (t, f(t)) sample rows at the breakpoints plus `refine` evenly spaced
// points per piece.
void write_samples_csv(std::ostream& os, const PiecewisePoly& f, const Rational& lo,
                       const Rational& hi, int refine);

// Profile export: alpha, F_P(alpha), F_grid(alpha), gap.
void write_profile_csv(std::ostream& os, const DistributionProfile& prof,
                       const DistributionProfile& grid, int refine, bool decimal);

}  // namespace exdisc
