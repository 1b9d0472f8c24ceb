// End-to-end checks of the heatsum binary: argv[1] = binary path,
// argv[2] = golden data dir.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

#define CHECK(cond)                                                        \
    do {                                                                   \
        if (!(cond)) {                                                     \
            std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << ": "    \
                      << #cond << "\n";                                    \
            ++failures;                                                    \
        }                                                                  \
    } while (0)

std::string g_bin, g_golden, g_tmp;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = g_tmp + "/stdout.txt";
    std::string cmd = g_bin + " " + args + " > " + out_file + " 2> " + g_tmp + "/stderr.txt";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream f(out_file);
    std::ostringstream os;
    os << f.rdbuf();
    r.out = os.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void test_solve_csv() {
    RunResult r = run("solve -a 1 -f \"1/(1-z)\" --truncation 3,8 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0,1,1,2,6,24,120,720,5040,40320") != std::string::npos);
    CHECK(r.out.find("1,2,6,24,120,720,5040,40320,,") != std::string::npos);
    CHECK(r.out.find("residual,0") != std::string::npos);
}

void test_solve_json_file_output() {
    std::string path = g_tmp + "/sol.json";
    RunResult r = run("solve -a \"z^2\" -f \"1/(1-z)\" --truncation 4,4 --out " + path);
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(slurp(path));
    CHECK(j["class"] == "higher-zero");
    CHECK(j["trace0"]["coeffs"][0] == "1");
    CHECK(j["trace0"]["coeffs"][1] == "0");
    CHECK(j["residual"] == "0");
    // u_{2,3} = 3!*(3*2)^2 = 216, row-major index 2*5+3
    CHECK(j["solution"]["coeffs"][13] == "216");
}

void test_exit_codes() {
    CHECK(run("solve -a 1 -f \"1/(1-w)\" --truncation 3,8").exit_code == 2);  // bad expr
    CHECK(run("solve -a 1 -f \"1/(1-z)\" --truncation 3,1").exit_code == 3);  // N < 2
    CHECK(run("analyze -a 1 -f \"1/(1-z)\" --truncation 6,14").exit_code == 4);  // short trace
    CHECK(run("solve -f \"1/(1-z)\"").exit_code == 2);  // missing a
    CHECK(run("reproduce nonsense --data-dir " + g_golden).exit_code == 2);
}

void test_analyze_classical() {
    std::string path = g_tmp + "/analysis.json";
    RunResult r = run("analyze -a 1 -f \"1/(1-z)\" --truncation 32,66 "
                      "--directions \"0,90,180,270\" --out " + path);
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(slurp(path));
    double s = j["gevrey"]["trace0"]["order_s"].get<double>();
    CHECK(s > 0.9 && s < 1.1);
    CHECK(j["nagumo"]["product_ok"] == true);
    CHECK(j["nagumo"]["derivative_ok"] == true);
    auto verdicts = j["verdicts"];
    CHECK(verdicts.size() == 4);
    CHECK(verdicts[0]["summable"] == false);  // theta = 0
    CHECK(verdicts[1]["summable"] == true);
    CHECK(verdicts[2]["summable"] == true);
    CHECK(verdicts[3]["summable"] == true);
    auto crit = j["criterion"];
    CHECK(crit.size() == 4);
    for (const auto& c : crit) CHECK(c["agree"] == true);
    CHECK(crit[0]["criterion_verdict"] == false);
    CHECK(crit[2]["criterion_verdict"] == true);
}

void test_analyze_counterexample() {
    std::string path = g_tmp + "/cex.json";
    RunResult r = run("analyze -a \"z^2\" -f \"1/(1-z)\" --truncation 60,12 "
                      "--directions \"0,90,180,270\" --out " + path);
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(slurp(path));
    CHECK(j["class"] == "higher-zero");
    CHECK(j["criterion"]["note"] == "no criterion available for a(z) = O(z^2)");
    CHECK(j["trace_family_summary"] == "1-summable in no direction");
    for (const auto& e : j["trace_family"]) CHECK(e["ok"] == false);
    // the decisive traces are constants: degenerate for the fit
    CHECK(j["gevrey"]["trace0"].contains("note"));
}

void test_analyze_convergent() {
    // a = 0 makes D the identity: the traces are convergent and every
    // direction is summable
    std::string path = g_tmp + "/conv.json";
    RunResult r = run("analyze -a 0 -f \"1/(1-z)\" --truncation 32,12 "
                      "--directions \"0,90,180,270\" --out " + path);
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(slurp(path));
    double s = j["gevrey"]["f_row0"]["order_s"].get<double>();
    CHECK(s > -0.1 && s < 0.1);
    for (const auto& v : j["verdicts"]) CHECK(v["summable"] == true);
}

void test_solve_zero_f() {
    RunResult r = run("solve -a 1 -f \"0\" --truncation 3,6 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0,0,0,0,0,0,0,0") != std::string::npos);
    CHECK(r.out.find("residual,0") != std::string::npos);
}

void test_analyze_csv() {
    RunResult r = run("analyze -a 1 -f \"1/(1-z)\" --truncation 32,66 "
                      "--directions \"0,90,180\" --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("j,log_m,fitted,v") == 0);
    CHECK(r.out.find("theta_degrees,summable") != std::string::npos);
}

void test_scan_samples() {
    RunResult r = run("analyze -a 1 -f \"1/(1-z)\" --truncation 32,66 "
                      "--directions \"90\" --samples");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    auto samples = j["verdicts"][0]["samples"];
    CHECK(samples.size() == 3);
    // the 1-sum tends to the constant term as t -> 0
    CHECK(std::abs(samples[0]["f_re"].get<double>() - 1.0) < 0.1);
}

void test_config_and_override() {
    std::string cfg_path = g_tmp + "/cfg.json";
    {
        std::ofstream f(cfg_path);
        f << R"json({"problem": {"a": "1", "f": "1/(1-z)", "truncation": [3, 8],
                 "mode": "exact"},
                 "output": {"format": "csv", "path": "-"},
                 "knobs": {"grid": [16, 32], "clearance_deg": 5}})json";
    }
    RunResult r = run("solve --config " + cfg_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0,1,1,2,6,24,120,720,5040,40320") != std::string::npos);
    // flags override the file
    RunResult r2 = run("solve --config " + cfg_path + " --truncation 1,4");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("0,1,1,2,6,24\n") != std::string::npos);
    // unknown keys are rejected
    std::string bad_path = g_tmp + "/bad.json";
    {
        std::ofstream f(bad_path);
        f << R"json({"problem": {"a": "1", "f": "1", "truncation": [2,2], "mode": "exact"},
                 "knobs": {"pade_orders": 5}})json";
    }
    CHECK(run("solve --config " + bad_path).exit_code == 2);
}

void test_determinism() {
    std::string p1 = g_tmp + "/d1.json", p2 = g_tmp + "/d2.json";
    std::string args = "analyze -a 1 -f \"1/(1-z)\" --truncation 32,66 "
                       "--directions \"0,45,90\" --out ";
    CHECK(run(args + p1).exit_code == 0);
    CHECK(run(args + p2).exit_code == 0);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(!slurp(p1).empty());

    // thread cap must not change results
    std::string p3 = g_tmp + "/d3.json";
    std::string env_cmd = "GEVREY_HEAT_THREADS=1 " + g_bin + " " + args + p3 +
                          " > /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(env_cmd.c_str())) == 0);
    CHECK(slurp(p1) == slurp(p3));
}

void test_transform() {
    RunResult r = run("transform --op two_laplace -a 1 -f \"1/(1-z)\" --truncation 0,6");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["raw_coeffs"][4] == "12");  // 4!/2!

    RunResult r2 = run("transform --op traces_bz --value 1 -a 1 -f \"1/(1-z)\" "
                       "--truncation 4,5");
    CHECK(r2.exit_code == 0);
    nlohmann::json j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["trace1"][1] == "2");   // (k+1)! k! at k=1
    CHECK(j2["trace1"][2] == "12");  // 3! 2!

    RunResult r3 = run("transform --op ghat --value 1 -a 1 -f \"z/(1-t)\" "
                       "--truncation 5,6");
    CHECK(r3.exit_code == 0);
    nlohmann::json j3 = nlohmann::json::parse(r3.out);
    CHECK(j3["ghat"][3] == "6");  // trace1 of z/(1-t) is 1/(1-t): j!
}

void test_reproduce() {
    CHECK(run("reproduce classical --data-dir " + g_golden).exit_code == 0);
    CHECK(run("reproduce counterexample --data-dir " + g_golden).exit_code == 0);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: test_cli <binary> <golden-dir>\n";
        return 2;
    }
    g_bin = argv[1];
    g_golden = argv[2];
    char tmpl[] = "/tmp/heatsum_cli_XXXXXX";
    g_tmp = mkdtemp(tmpl);

    test_solve_csv();
    test_solve_json_file_output();
    test_solve_zero_f();
    test_exit_codes();
    test_analyze_classical();
    test_analyze_counterexample();
    test_analyze_convergent();
    test_analyze_csv();
    test_scan_samples();
    test_config_and_override();
    test_determinism();
    test_transform();
    test_reproduce();

    if (failures) {
        std::cerr << failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
