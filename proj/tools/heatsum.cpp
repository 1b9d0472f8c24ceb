// Batch driver: solve / analyze / transform / reproduce pipelines over the
// heat operator D = 1 - a(z) dt_inv dz2 on truncated series.
//
// Exit codes: 0 ok, 1 reproduction diff, 2 config error, 3 solver
// precondition failure, 4 insufficient coefficients for an analysis stage.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "heatsum/gevrey.hpp"
#include "heatsum/heat.hpp"
#include "heatsum/io.hpp"
#include "heatsum/parse.hpp"
#include "heatsum/resummation.hpp"
#include "heatsum/transforms.hpp"

using namespace heatsum;

namespace {

struct Knobs {
    NagumoGrid grid;
    int pade_order = 0;  // 0 = auto
    double clearance_deg = 5.0;
    double radius = 0.0;  // 0 = auto from denominator roots
    Cplx probe{0.1, 0.0};
    bool with_samples = false;
    std::vector<double> directions_deg;
};

struct RunConfig {
    ProblemSpec problem;
    std::vector<std::string> pipeline;  // empty = auto
    std::string format = "json";
    std::string out = "-";
    Knobs knobs;
};

std::vector<double> default_directions_deg() {
    std::vector<double> d;
    for (int k = 0; k < 24; ++k) d.push_back(15.0 * k);
    return d;
}

Knobs knobs_from_json(const Json& j) {
    Knobs k;
    for (const auto& [key, val] : j.items()) {
        if (key == "grid") {
            k.grid.radial = val.at(0).get<int>();
            k.grid.angular = val.at(1).get<int>();
        } else if (key == "pade") {
            k.pade_order = val.get<int>();
        } else if (key == "clearance_deg") {
            k.clearance_deg = val.get<double>();
        } else if (key == "radius") {
            if (val.is_string() && val.get<std::string>() == "auto")
                k.radius = 0.0;
            else
                k.radius = val.get<double>();
        } else if (key == "probe") {
            k.probe = Cplx(val.at(0).get<double>(), val.at(1).get<double>());
        } else if (key == "samples") {
            k.with_samples = val.get<bool>();
        } else if (key == "directions_deg") {
            for (const auto& e : val) k.directions_deg.push_back(e.get<double>());
        } else {
            throw Error("unknown knob '" + key + "'");
        }
    }
    return k;
}

RunConfig config_from_json(const Json& j) {
    RunConfig cfg;
    for (const auto& [key, val] : j.items()) {
        if (key == "problem") {
            cfg.problem = problem_spec_from_json(val);
        } else if (key == "pipeline") {
            for (const auto& e : val) cfg.pipeline.push_back(e.get<std::string>());
        } else if (key == "output") {
            for (const auto& [ok, ov] : val.items()) {
                if (ok == "format")
                    cfg.format = ov.get<std::string>();
                else if (ok == "path")
                    cfg.out = ov.get<std::string>();
                else
                    throw Error("unknown output key '" + ok + "'");
            }
        } else if (key == "knobs") {
            cfg.knobs = knobs_from_json(val);
        } else {
            throw Error("unknown config key '" + key + "'");
        }
    }
    if (cfg.format != "json" && cfg.format != "csv")
        throw Error("format must be json or csv");
    return cfg;
}

ScanOptions scan_options(const Knobs& k) {
    ScanOptions o;
    o.pade_order = k.pade_order;
    o.clearance = k.clearance_deg * M_PI / 180.0;
    o.with_samples = k.with_samples;
    return o;
}

std::vector<double> directions_radians(const Knobs& k) {
    std::vector<double> degs =
        k.directions_deg.empty() ? default_directions_deg() : k.directions_deg;
    std::vector<double> out;
    for (double d : degs) out.push_back(d * M_PI / 180.0);
    return out;
}

double resolve_radius(const RunConfig& cfg) {
    if (cfg.knobs.radius > 0.0) return cfg.knobs.radius;
    std::vector<double> roots;
    auto add_roots = [&roots](const std::string& text) {
        if (text.empty()) return;
        auto rf = rational_form(*parse_expression(text), 'z');
        if (rf) roots.push_back(nearest_denominator_root(*rf));
    };
    add_roots(cfg.problem.a_text);
    add_roots(cfg.problem.f_text);
    return default_radius(roots);
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw Error("cannot open output path " + cfg.out);
    f << text;
}

bool stage_enabled(const RunConfig& cfg, const std::string& name, bool auto_on) {
    if (cfg.pipeline.empty()) return auto_on;
    for (const auto& s : cfg.pipeline)
        if (s == name) return true;
    return false;
}

// ---- solve -----------------------------------------------------------------

int cmd_solve(const RunConfig& cfg) {
    HeatProblem p = build_problem(cfg.problem);
    HeatSolution sol = solve(p);
    BivariateSeries residual =
        apply_D(p, sol.u) - p.f.truncated(p.f.jmax(), p.f.nmax() - 2);
    std::string residual_str = "0";
    bool exact_zero = true;
    double max_res = 0.0;
    for (int j = 0; j <= residual.jmax(); ++j)
        for (int n = 0; n <= std::min(residual.nmax(), sol.valid_to[j]); ++n) {
            if (!residual(j, n).is_zero()) exact_zero = false;
            max_res = std::max(max_res, std::abs(residual(j, n).to_cplx()));
        }
    if (!exact_zero) {
        std::ostringstream os;
        os << max_res;
        residual_str = os.str();
    }

    auto [t0, t1] = traces(sol.u);
    if (cfg.format == "csv") {
        std::ostringstream os;
        solution_to_csv(os, sol);
        os << "\ntrace,j,value\n";
        for (int j = 0; j <= sol.trace_rows(0); ++j)
            os << "0," << j << ',' << csv_cell(t0[j]) << '\n';
        for (int j = 0; j <= sol.trace_rows(1); ++j)
            os << "1," << j << ',' << csv_cell(t1[j]) << '\n';
        os << "\nresidual," << residual_str << '\n';
        write_output(cfg, os.str());
    } else {
        Json out;
        out["class"] = diffusivity_class_name(p.cls);
        out["solution"] = series_to_json(sol.masked());
        Json valid = Json::array();
        for (int v : sol.valid_to) valid.push_back(v);
        out["valid_to"] = std::move(valid);
        out["trace0"] = series_to_json(sol.trace0());
        out["trace1"] = series_to_json(sol.trace1());
        out["residual"] = residual_str;
        write_output(cfg, out.dump(2) + "\n");
    }
    return 0;
}

// ---- analyze ---------------------------------------------------------------

std::vector<double> log_magnitudes(const std::vector<Coefficient>& coeffs) {
    std::vector<double> lm(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        lm[i] = std::abs(coeffs[i].to_cplx()) > 0
                    ? std::log(std::abs(coeffs[i].to_cplx()))
                    : -std::numeric_limits<double>::infinity();
    return lm;
}

Json gevrey_stage_values(const std::vector<double>& lm) {
    Json j;
    auto [lo, hi] = default_fit_window(static_cast<int>(lm.size()));
    for (int i = lo; i <= hi; ++i)
        if (!std::isfinite(lm[i])) {
            j["note"] = "degenerate series: zero coefficients in the fit window";
            return j;
        }
    GevreyEstimate est = gevrey_order(lm, lo, hi);
    j["order_s"] = est.order_s;
    j["logK"] = est.logK;
    j["logC"] = est.logC;
    j["residual"] = est.residual;
    j["window"] = {est.window_lo, est.window_hi};
    if (est.subanalytic) j["note"] = "sub-analytic growth";
    return j;
}

Json gevrey_stage(const TSeries& trace) { return gevrey_stage_values(log_magnitudes(trace.coeffs())); }

int cmd_analyze(const RunConfig& cfg) {
    HeatProblem p = build_problem(cfg.problem);
    HeatSolution sol = solve(p);
    TSeries t0 = sol.trace0(), t1 = sol.trace1();
    ScanOptions opts = scan_options(cfg.knobs);
    std::vector<double> dirs = directions_radians(cfg.knobs);
    double r = resolve_radius(cfg);

    Json out;
    out["class"] = diffusivity_class_name(p.cls);
    out["radius"] = r;

    if (stage_enabled(cfg, "gevrey", true))
        out["gevrey"] = {{"trace0", gevrey_stage(t0)},
                         {"trace1", gevrey_stage(t1)},
                         {"f_row0", gevrey_stage_values(log_magnitudes(p.f.t_row(0).coeffs()))}};

    MajorantReport majorant;
    bool have_majorant = false;
    if (stage_enabled(cfg, "majorant", true) && p.f.jmax() <= kMaxFloatOrder &&
        p.f.nmax() <= kMaxFloatOrder) {
        try {
            majorant = majorant_sequence(p, r, std::min(12, p.f.jmax()), cfg.knobs.grid);
            have_majorant = true;
            out["majorant"] = {{"dominated", majorant.dominated},
                               {"alpha", majorant.alpha},
                               {"v", majorant.v},
                               {"lhs", majorant.lhs}};
        } catch (const OverflowError& e) {
            out["majorant"] = {{"note", std::string("skipped: ") + e.what()}};
        }
    }

    if (stage_enabled(cfg, "nagumo", true)) {
        ZSeries f0 = p.f.t_row(0);
        NagumoCheck prod = check_nagumo_product(p.a, f0, 1, 1, r, cfg.knobs.grid);
        NagumoCheck der = check_nagumo_derivative(f0, 1, r, cfg.knobs.grid);
        out["nagumo"] = {{"product_ok", prod.ok},
                         {"product_lhs", prod.lhs},
                         {"product_rhs", prod.rhs},
                         {"derivative_ok", der.ok},
                         {"derivative_lhs", der.lhs},
                         {"derivative_rhs", der.rhs}};
    }

    std::vector<SummabilityVerdict> verdicts;
    if (stage_enabled(cfg, "scan", true)) {
        auto v0 = direction_scan(t0, dirs, opts);
        auto v1 = direction_scan(t1, dirs, opts);
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            SummabilityVerdict v = v0[i];
            v.summable = v0[i].summable && v1[i].summable;
            for (const auto& pol : v1[i].evidence) v.evidence.push_back(pol);
            verdicts.push_back(std::move(v));
        }
        out["verdicts"] = verdicts_to_json(verdicts);
    }

    if (stage_enabled(cfg, "criterion", true)) {
        std::optional<CriterionCase> cs;
        if (p.cls == DiffusivityClass::unit) {
            bool constant = true;
            for (int n = 1; n <= p.a.order(); ++n)
                if (!p.a[n].is_zero()) constant = false;
            if (constant) cs = CriterionCase{CriterionCase::constant_a, p.a[0]};
        } else if (p.cls == DiffusivityClass::simple_zero) {
            bool linear = true;
            for (int n = 2; n <= p.a.order(); ++n)
                if (!p.a[n].is_zero()) linear = false;
            if (linear) cs = CriterionCase{CriterionCase::linear_bz, p.a[1]};
        }
        if (cs) {
            Json arr = Json::array();
            for (double theta : dirs)
                arr.push_back(criterion_to_json(criterion_report(p.f, *cs, theta, opts)));
            out["criterion"] = std::move(arr);
        } else if (p.cls == DiffusivityClass::higher_zero) {
            out["criterion"] = {{"note", "no criterion available for a(z) = O(z^2)"}};
        } else {
            out["criterion"] = {{"note",
                                 "criterion implemented for constant a and a = b z only"}};
        }
    }

    if (stage_enabled(cfg, "family", p.cls == DiffusivityClass::higher_zero)) {
        Json arr = Json::array();
        bool any_ok = false;
        for (double theta : dirs) {
            TraceFamilyReport rep = check_trace_family(
                sol.u, theta, std::polar(std::abs(cfg.knobs.probe), theta), opts);
            any_ok = any_ok || rep.ok;
            Json jr;
            jr["theta_degrees"] = theta * 180.0 / M_PI;
            trace_family_to_json(jr, rep);
            arr.push_back(std::move(jr));
        }
        out["trace_family"] = std::move(arr);
        if (!any_ok) out["trace_family_summary"] = "1-summable in no direction";
    }

    if (cfg.format == "csv") {
        std::ostringstream os;
        std::vector<double> lm = log_magnitudes(t0.coeffs());
        auto [lo, hi] = default_fit_window(static_cast<int>(lm.size()));
        bool fit_ok = true;
        for (int i = lo; i <= hi; ++i) fit_ok = fit_ok && std::isfinite(lm[i]);
        if (fit_ok)
            write_gevrey_csv(os, gevrey_order(lm, lo, hi), lm,
                             have_majorant ? majorant.v : std::vector<double>{});
        os << '\n';
        verdicts_to_csv(os, verdicts);
        write_output(cfg, os.str());
    } else {
        write_output(cfg, out.dump(2) + "\n");
    }
    return 0;
}

// ---- transform ---------------------------------------------------------------

int cmd_transform(const RunConfig& cfg, const std::string& op, const std::string& value) {
    Coefficient v = Coefficient::parse(value.empty() ? "1" : value, cfg.problem.mode);
    Json out;
    out["op"] = op;
    auto dump_series = [](const TSeries& s) {
        Json arr = Json::array();
        for (int k = 0; k <= s.order(); ++k) arr.push_back(s[k].str());
        return arr;
    };
    if (op == "two_laplace") {
        ZSeries fz = parse_rational_z(cfg.problem.f_text, cfg.problem.nmax);
        if (cfg.problem.mode == Mode::floating) fz = fz.to_float();
        Json arr = Json::array();
        for (const Coefficient& c : two_laplace(fz)) arr.push_back(c.str());
        out["raw_coeffs"] = std::move(arr);
    } else {
        HeatProblem p = build_problem(cfg.problem);
        if (op == "capf") {
            HalfIntegerSeries F = capF_const_a(p.f, v);
            out["even"] = dump_series(F.even);
            out["odd"] = dump_series(F.odd);
        } else if (op == "ghat") {
            out["ghat"] = dump_series(g_hat_bz(p.f, v));
        } else if (op == "traces_const") {
            auto [tc0, tc1] = traces_const_a(p.f, v);
            out["trace0"] = dump_series(tc0);
            out["trace1"] = dump_series(tc1);
        } else if (op == "traces_bz") {
            auto [tb0, tb1] = traces_bz(p.f, v);
            out["trace0"] = dump_series(tb0);
            out["trace1"] = dump_series(tb1);
        } else {
            throw Error("unknown transform op '" + op + "'");
        }
    }
    write_output(cfg, out.dump(2) + "\n");
    return 0;
}

// ---- reproduce ---------------------------------------------------------------

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot read golden file " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool diff_exact(const std::string& got, const std::string& path, std::ostream& log) {
    std::string want = slurp(path);
    if (got == want) return true;
    log << "MISMATCH against " << path << "\n";
    return false;
}

struct FixtureOutputs {
    std::string solution_csv;
    Json trace_json;      // classical: trace0; counterexample: both traces
    Json verdict_json;    // classical: summable flags + gevrey_s; cex: family flags
};

FixtureOutputs run_classical() {
    ProblemSpec spec;
    spec.a_text = "1";
    spec.f_text = "1/(1-z)";
    spec.jmax = 12;
    spec.nmax = 26;
    HeatSolution sol = solve(build_problem(spec));
    FixtureOutputs out;
    std::ostringstream table;
    solution_to_csv(table, sol);
    out.solution_csv = table.str();
    out.trace_json = series_to_json(sol.trace0());

    // verdicts need a longer trace: 33 coefficients
    ProblemSpec wide = spec;
    wide.jmax = 32;
    wide.nmax = 66;
    HeatSolution wsol = solve(build_problem(wide));
    Knobs knobs;
    auto verdicts = direction_scan(wsol.trace0(), directions_radians(knobs),
                                   scan_options(knobs));
    out.verdict_json["gevrey_s"] = gevrey_stage(sol.trace0())["order_s"];
    Json flags = Json::array();
    for (const auto& v : verdicts) flags.push_back(v.summable);
    out.verdict_json["summable"] = std::move(flags);
    return out;
}

FixtureOutputs run_counterexample() {
    ProblemSpec spec;
    spec.a_text = "z^2";
    spec.f_text = "1/(1-z)";
    spec.jmax = 24;
    spec.nmax = 24;
    HeatSolution sol = solve(build_problem(spec));
    FixtureOutputs out;
    std::ostringstream table;
    solution_to_csv(table, sol);
    out.solution_csv = table.str();
    auto [t0, t1] = traces(sol.u);
    out.trace_json["trace0"] = series_to_json(t0);
    out.trace_json["trace1"] = series_to_json(t1);

    // family rejection needs deep t-resolution for the direct sums
    ProblemSpec deep = spec;
    deep.jmax = 60;
    deep.nmax = 12;
    HeatSolution dsol = solve(build_problem(deep));
    Knobs knobs;
    Json flags = Json::array();
    for (double theta : directions_radians(knobs))
        flags.push_back(check_trace_family(dsol.u, theta, std::polar(0.1, theta)).ok);
    out.verdict_json["family_ok"] = std::move(flags);
    return out;
}

int cmd_reproduce(const std::string& name, const std::string& data_dir, bool emit) {
    FixtureOutputs got;
    std::string sol_file, trace_file, verdict_file;
    if (name == "classical") {
        got = run_classical();
        sol_file = data_dir + "/classical_solution.csv";
        trace_file = data_dir + "/classical_trace0.json";
        verdict_file = data_dir + "/classical_verdicts.json";
    } else if (name == "counterexample") {
        got = run_counterexample();
        sol_file = data_dir + "/counterexample_solution.csv";
        trace_file = data_dir + "/counterexample_traces.json";
        verdict_file = data_dir + "/counterexample_family.json";
    } else {
        std::cerr << "unknown fixture '" << name << "'\n";
        return 2;
    }

    if (emit) {
        std::ofstream(sol_file) << got.solution_csv;
        std::ofstream(trace_file) << got.trace_json.dump(2) + "\n";
        std::ofstream(verdict_file) << got.verdict_json.dump(2) + "\n";
        std::cout << "golden files written to " << data_dir << "\n";
        return 0;
    }

    bool pass = diff_exact(got.solution_csv, sol_file, std::cerr);
    pass &= diff_exact(got.trace_json.dump(2) + "\n", trace_file, std::cerr);
    Json want = Json::parse(slurp(verdict_file));
    bool vok = true;
    if (name == "classical") {
        vok = want["summable"] == got.verdict_json["summable"] &&
              std::abs(want["gevrey_s"].get<double>() -
                       got.verdict_json["gevrey_s"].get<double>()) < 1e-6;
    } else {
        vok = want["family_ok"] == got.verdict_json["family_ok"];
    }
    if (!vok) std::cerr << "MISMATCH against " << verdict_file << "\n";
    pass &= vok;

    std::cout << (pass ? "reproduce: PASS" : "reproduce: FAIL") << " (" << name << ")\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"formal heat-equation series: solve, Gevrey analysis, Borel-Laplace "
                 "resummation"};
    app.require_subcommand(1);

    std::string config_path, mode_flag, trunc_flag, dirs_flag, out_flag, format_flag;
    std::string a_flag, f_flag, grid_flag, probe_flag;
    int pade_flag = -1;
    double clearance_flag = -1.0, radius_flag = 0.0;
    bool samples_flag = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file");
        cmd->add_option("--mode", mode_flag, "exact|float");
        cmd->add_option("--truncation", trunc_flag, "J,N");
        cmd->add_option("-a,--diffusivity", a_flag, "a(z) expression");
        cmd->add_option("-f,--inhomogeneity", f_flag, "f(t,z) expression");
        cmd->add_option("--directions", dirs_flag, "degrees, comma separated");
        cmd->add_option("--out", out_flag, "output path, - for stdout");
        cmd->add_option("--format", format_flag, "csv|json");
        cmd->add_option("--grid", grid_flag, "radial,angular Nagumo grid");
        cmd->add_option("--pade", pade_flag, "Pade order (0 = auto)");
        cmd->add_option("--clearance", clearance_flag, "angular clearance, degrees");
        cmd->add_option("--radius", radius_flag, "Nagumo radius (0 = auto)");
        cmd->add_option("--probe", probe_flag, "re,im probe point for the family test");
        cmd->add_flag("--samples", samples_flag, "attach 1-sum samples to summable verdicts");
    };

    CLI::App* c_solve = app.add_subcommand("solve", "formal solution, traces, residual");
    CLI::App* c_analyze = app.add_subcommand("analyze", "Gevrey + Nagumo + direction scans");
    CLI::App* c_transform = app.add_subcommand("transform", "data-side transforms");
    std::string op_flag, value_flag;
    c_transform
        ->add_option("--op", op_flag, "two_laplace|capf|ghat|traces_const|traces_bz")
        ->required();
    c_transform->add_option("--value", value_flag, "a (resp. b) as p/q");
    CLI::App* c_repro = app.add_subcommand("reproduce", "diff pinned fixtures against goldens");
    std::string fixture, data_dir = "data/golden";
    c_repro->add_option("name", fixture, "classical|counterexample")->required();
    c_repro->add_option("--data-dir", data_dir, "golden files directory");
    bool emit = false;
    c_repro->add_flag("--emit", emit, "write golden files instead of diffing");
    add_common(c_solve);
    add_common(c_analyze);
    add_common(c_transform);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_repro->parsed()) return cmd_reproduce(fixture, data_dir, emit);

        RunConfig cfg;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw Error("cannot open config " + config_path);
            cfg = config_from_json(Json::parse(f));
        }
        // precedence: flags > file > defaults
        if (!mode_flag.empty()) {
            if (mode_flag != "exact" && mode_flag != "float")
                throw Error("mode must be exact or float");
            cfg.problem.mode = mode_flag == "exact" ? Mode::exact : Mode::floating;
        }
        if (!trunc_flag.empty()) {
            auto comma = trunc_flag.find(',');
            if (comma == std::string::npos) throw Error("--truncation wants J,N");
            cfg.problem.jmax = std::stoi(trunc_flag.substr(0, comma));
            cfg.problem.nmax = std::stoi(trunc_flag.substr(comma + 1));
        }
        if (!a_flag.empty()) {
            cfg.problem.a_text = a_flag;
            cfg.problem.a_coeffs.clear();
        }
        if (!f_flag.empty()) cfg.problem.f_text = f_flag;
        if (!dirs_flag.empty()) {
            cfg.knobs.directions_deg.clear();
            std::istringstream is(dirs_flag);
            std::string tok;
            while (std::getline(is, tok, ','))
                cfg.knobs.directions_deg.push_back(std::stod(tok));
        }
        if (!out_flag.empty()) cfg.out = out_flag;
        if (!format_flag.empty()) {
            if (format_flag != "json" && format_flag != "csv")
                throw Error("format must be json or csv");
            cfg.format = format_flag;
        }
        if (!grid_flag.empty()) {
            auto comma = grid_flag.find(',');
            if (comma == std::string::npos) throw Error("--grid wants radial,angular");
            cfg.knobs.grid.radial = std::stoi(grid_flag.substr(0, comma));
            cfg.knobs.grid.angular = std::stoi(grid_flag.substr(comma + 1));
        }
        if (pade_flag >= 0) cfg.knobs.pade_order = pade_flag;
        if (samples_flag) cfg.knobs.with_samples = true;
        if (clearance_flag >= 0) cfg.knobs.clearance_deg = clearance_flag;
        if (radius_flag > 0) cfg.knobs.radius = radius_flag;
        if (!probe_flag.empty()) {
            auto comma = probe_flag.find(',');
            if (comma == std::string::npos) throw Error("--probe wants re,im");
            cfg.knobs.probe = Cplx(std::stod(probe_flag.substr(0, comma)),
                                   std::stod(probe_flag.substr(comma + 1)));
        }

        if (cfg.problem.f_text.empty() ||
            (cfg.problem.a_text.empty() && cfg.problem.a_coeffs.empty()))
            throw Error("a problem needs 'a' and 'f' (config file or -a/-f flags)");

        if (c_solve->parsed()) {
            try {
                return cmd_solve(cfg);
            } catch (const OrderError& e) {
                std::cerr << "solver precondition failed: " << e.what() << "\n";
                return 3;
            } catch (const ModeError& e) {
                std::cerr << "solver precondition failed: " << e.what() << "\n";
                return 3;
            }
        }
        if (c_analyze->parsed()) {
            try {
                return cmd_analyze(cfg);
            } catch (const OrderError& e) {
                std::cerr << "insufficient coefficients: " << e.what() << "\n";
                return 4;
            }
        }
        if (c_transform->parsed()) return cmd_transform(cfg, op_flag, value_flag);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}
