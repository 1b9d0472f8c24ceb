#include "heatsum/io.hpp"

#include <cmath>
#include <ostream>

#include "heatsum/parse.hpp"

namespace heatsum {

namespace {

Mode mode_from_string(const std::string& s) {
    if (s == "exact") return Mode::exact;
    if (s == "float") return Mode::floating;
    throw Error("unknown mode '" + s + "' (want \"exact\" or \"float\")");
}

template <class S>
Json univariate_to_json(const S& s) {
    Json j;
    j["mode"] = mode_name(s.mode());
    j["truncation"] = {s.order()};
    Json coeffs = Json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(s[n].str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

template <class S>
S univariate_from_json(const Json& j) {
    Mode m = mode_from_string(j.at("mode").get<std::string>());
    auto trunc = j.at("truncation");
    if (!trunc.is_array() || trunc.size() != 1)
        throw Error("univariate series wants truncation [N]");
    int order = trunc[0].get<int>();
    const Json& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != order + 1)
        throw Error("coefficient count does not match the truncation");
    std::vector<Coefficient> c;
    for (const auto& e : coeffs) c.push_back(Coefficient::parse(e.get<std::string>(), m));
    return S::from_divided(m, std::move(c));
}

}  // namespace

Json series_to_json(const TSeries& s) { return univariate_to_json(s); }
Json series_to_json(const ZSeries& s) { return univariate_to_json(s); }

Json series_to_json(const BivariateSeries& s) {
    Json j;
    j["mode"] = mode_name(s.mode());
    j["truncation"] = {s.jmax(), s.nmax()};
    Json coeffs = Json::array();
    for (int jj = 0; jj <= s.jmax(); ++jj)
        for (int n = 0; n <= s.nmax(); ++n) coeffs.push_back(s(jj, n).str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

TSeries tseries_from_json(const Json& j) { return univariate_from_json<TSeries>(j); }
ZSeries zseries_from_json(const Json& j) { return univariate_from_json<ZSeries>(j); }

BivariateSeries bivariate_from_json(const Json& j) {
    Mode m = mode_from_string(j.at("mode").get<std::string>());
    auto trunc = j.at("truncation");
    if (!trunc.is_array() || trunc.size() != 2)
        throw Error("bivariate series wants truncation [J,N]");
    int jmax = trunc[0].get<int>(), nmax = trunc[1].get<int>();
    const Json& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != (jmax + 1) * (nmax + 1))
        throw Error("coefficient count does not match the truncation");
    BivariateSeries s(m, jmax, nmax);
    std::size_t i = 0;
    for (int jj = 0; jj <= jmax; ++jj)
        for (int n = 0; n <= nmax; ++n)
            s.at(jj, n) = Coefficient::parse(coeffs[i++].get<std::string>(), m);
    return s;
}

ProblemSpec problem_spec_from_json(const Json& j) {
    ProblemSpec spec;
    for (const auto& [key, val] : j.items()) {
        if (key == "a") {
            if (val.is_string())
                spec.a_text = val.get<std::string>();
            else if (val.is_array())
                for (const auto& e : val) spec.a_coeffs.push_back(e.get<std::string>());
            else
                throw Error("problem key 'a' wants an expression or a coefficient list");
        } else if (key == "f") {
            spec.f_text = val.get<std::string>();
        } else if (key == "truncation") {
            if (!val.is_array() || val.size() != 2)
                throw Error("problem truncation wants [J,N]");
            spec.jmax = val[0].get<int>();
            spec.nmax = val[1].get<int>();
        } else if (key == "mode") {
            spec.mode = mode_from_string(val.get<std::string>());
        } else {
            throw Error("unknown problem key '" + key + "'");
        }
    }
    if (spec.f_text.empty()) throw Error("problem needs an 'f' expression");
    if (spec.a_text.empty() && spec.a_coeffs.empty())
        throw Error("problem needs 'a' (expression or coefficient list)");
    return spec;
}

Json problem_spec_to_json(const ProblemSpec& spec) {
    Json j;
    if (!spec.a_text.empty())
        j["a"] = spec.a_text;
    else
        j["a"] = spec.a_coeffs;
    j["f"] = spec.f_text;
    j["truncation"] = {spec.jmax, spec.nmax};
    j["mode"] = mode_name(spec.mode);
    return j;
}

HeatProblem build_problem(const ProblemSpec& spec) {
    BivariateSeries f = parse_bivariate(spec.f_text, spec.jmax, spec.nmax);
    ZSeries a = [&] {
        if (!spec.a_text.empty()) return parse_rational_z(spec.a_text, spec.nmax);
        std::vector<Coefficient> c;
        for (const auto& s : spec.a_coeffs) c.push_back(Coefficient::parse(s, Mode::exact));
        ZSeries raw_a = ZSeries::from_divided(Mode::exact, std::move(c));
        if (raw_a.order() >= spec.nmax) return raw_a.truncated(spec.nmax);
        // pad with zeros to cover f's z-truncation
        ZSeries out(Mode::exact, spec.nmax);
        for (int n = 0; n <= raw_a.order(); ++n) out.at(n) = raw_a[n];
        return out;
    }();
    HeatProblem p = HeatProblem::make(std::move(a), std::move(f));
    return spec.mode == Mode::floating ? p.to_float() : p;
}

namespace {

double theta_degrees(double theta) { return theta * 180.0 / M_PI; }

}  // namespace

Json verdicts_to_json(const std::vector<SummabilityVerdict>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs) {
        Json jv;
        jv["theta_degrees"] = theta_degrees(v.theta);
        jv["summable"] = v.summable;
        Json poles = Json::array();
        for (const auto& p : v.evidence)
            poles.push_back({{"re", p.location.real()},
                             {"im", p.location.imag()},
                             {"stability", p.stability}});
        jv["poles"] = std::move(poles);
        Json samples = Json::array();
        for (const auto& [t, f] : v.samples)
            samples.push_back({{"t_re", t.real()},
                               {"t_im", t.imag()},
                               {"f_re", f.real()},
                               {"f_im", f.imag()}});
        jv["samples"] = std::move(samples);
        arr.push_back(std::move(jv));
    }
    return arr;
}

void verdicts_to_csv(std::ostream& os, const std::vector<SummabilityVerdict>& vs) {
    os << "theta_degrees,summable,nearest_pole_re,nearest_pole_im,pole_count\n";
    for (const auto& v : vs) {
        os << theta_degrees(v.theta) << ',' << (v.summable ? 1 : 0) << ',';
        if (v.evidence.empty())
            os << ",," << 0 << '\n';
        else
            os << v.evidence.front().location.real() << ','
               << v.evidence.front().location.imag() << ',' << v.evidence.size() << '\n';
    }
}

Json criterion_to_json(const CriterionReport& rep) {
    Json j;
    j["case"] = rep.kind;
    j["theta_degrees"] = theta_degrees(rep.theta);
    Json dirs = Json::array();
    for (double d : rep.criterion_directions) dirs.push_back(theta_degrees(d));
    j["criterion_directions_degrees"] = std::move(dirs);
    j["criterion_verdict"] = rep.criterion_summable;
    j["direct_verdict"] = rep.direct_summable;
    j["agree"] = rep.agree;
    j["transformed_series_head"] = rep.transformed_head;
    return j;
}

// Float coefficients serialize as "re,im"; quote them so the embedded comma
// survives CSV.
std::string csv_cell(const Coefficient& c) {
    std::string s = c.str();
    if (s.find(',') != std::string::npos) return '"' + s + '"';
    return s;
}

void solution_to_csv(std::ostream& os, const HeatSolution& sol) {
    os << "j\\n";
    for (int n = 0; n <= sol.u.nmax(); ++n) os << ',' << n;
    os << '\n';
    for (int j = 0; j <= sol.u.jmax(); ++j) {
        os << j;
        for (int n = 0; n <= sol.u.nmax(); ++n) {
            os << ',';
            if (n <= sol.valid_to[j]) os << csv_cell(sol.u(j, n));
        }
        os << '\n';
    }
}

void trace_family_to_json(Json& j, const TraceFamilyReport& rep) {
    j["ok"] = rep.ok;
    j["reason"] = rep.reason;
    Json probes = Json::array();
    for (const auto& p : rep.probes)
        probes.push_back({{"t_re", p.t.real()},
                          {"t_im", p.t.imag()},
                          {"evaluated", p.evaluated},
                          {"columns_used", p.columns_used},
                          {"growth_excess", p.growth_excess},
                          {"rejected", p.rejected}});
    j["probes"] = std::move(probes);
}

}  // namespace heatsum
