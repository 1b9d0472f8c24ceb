#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "heatsum/heat.hpp"
#include "heatsum/resummation.hpp"
#include "heatsum/series.hpp"
#include "heatsum/transforms.hpp"

namespace heatsum {

using Json = nlohmann::json;

// Series wire format: {mode, truncation: [J,N] or [N], coeffs: row-major
// strings}, "p/q" in exact mode ("p" when the denominator is 1), "re,im" in
// float mode.  Bit-exact round trip in exact mode.
Json series_to_json(const TSeries& s);
Json series_to_json(const ZSeries& s);
Json series_to_json(const BivariateSeries& s);
TSeries tseries_from_json(const Json& j);
ZSeries zseries_from_json(const Json& j);
BivariateSeries bivariate_from_json(const Json& j);

// Problem wire format: {a: expression text or coefficient list,
// f: expression text, truncation: [J,N], mode}.
struct ProblemSpec {
    std::string a_text;                    // empty when a_coeffs given
    std::vector<std::string> a_coeffs;     // divided coefficients
    std::string f_text;
    int jmax = 12, nmax = 26;
    Mode mode = Mode::exact;
};
ProblemSpec problem_spec_from_json(const Json& j);
Json problem_spec_to_json(const ProblemSpec& spec);
HeatProblem build_problem(const ProblemSpec& spec);

Json verdicts_to_json(const std::vector<SummabilityVerdict>& vs);
void verdicts_to_csv(std::ostream& os, const std::vector<SummabilityVerdict>& vs);

Json criterion_to_json(const CriterionReport& rep);

// Solution table as CSV (staircase-masked entries blank; float cells quoted).
void solution_to_csv(std::ostream& os, const HeatSolution& sol);
std::string csv_cell(const Coefficient& c);

void trace_family_to_json(Json& j, const TraceFamilyReport& rep);

}  // namespace heatsum
