#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "heatsum/heat.hpp"
#include "heatsum/parse.hpp"
#include "heatsum/resummation.hpp"
#include "helpers.hpp"

using namespace heatsum;
using namespace heatsum::testing;

namespace {

// classical trace u_j = (2j)!
TSeries classical_trace(int order) {
    TSeries u(Mode::exact, order);
    for (int j = 0; j <= order; ++j) u.at(j) = Coefficient::exact(rat_factorial(2 * j));
    return u;
}

// u_j = j! (raw coefficients 1: the geometric series 1/(1-t))
TSeries geometric_trace(int order) {
    TSeries u(Mode::exact, order);
    for (int j = 0; j <= order; ++j) u.at(j) = Coefficient::exact(rat_factorial(j));
    return u;
}

// Euler series: raw coefficients (-1)^j j!, divided (-1)^j (j!)^2
TSeries euler_trace(int order) {
    TSeries u(Mode::exact, order);
    for (int j = 0; j <= order; ++j) {
        Rational v = rat_factorial(j) * rat_factorial(j);
        if (j % 2) v = -v;
        u.at(j) = Coefficient::exact(v);
    }
    return u;
}

// Independent oracle for the exponential integral: modified Lentz continued
// fraction, E1(x) = e^-x / (x+1- 1/(x+3- 4/(x+5- ...))).
double expint_e1(double x) {
    const double tiny = 1e-300;
    double b = x + 1.0, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 200; ++i) {
        double a = -double(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x) * h;
}

}  // namespace

TEST_CASE("borel weights") {
    SUBCASE("(2j)! maps to central binomials, exactly to order 30") {
        BorelSeries b = borel(classical_trace(30));
        // independent oracle: binomial series of (1-4tau)^(-1/2),
        // c_j = c_{j-1} (4j-2)/j
        Rational c = 1;
        for (int j = 0; j <= 30; ++j) {
            CHECK(b.phi[j].rat() == c);
            CHECK(b.phi[j].rat() == rat_binomial(2 * j, j));
            c = c * rat(4 * (j + 1) - 2, j + 1);
        }
    }
    SUBCASE("j! maps to 1/j! (e^tau)") {
        BorelSeries b = borel(geometric_trace(10));
        for (int j = 0; j <= 10; ++j)
            CHECK(b.phi[j].rat() == Rational(1) / rat_factorial(j));
    }
    SUBCASE("zero maps to zero") {
        BorelSeries b = borel(TSeries(Mode::exact, 5));
        for (const auto& c : b.phi) CHECK(c.is_zero());
    }
    SUBCASE("exact round trip") {
        std::mt19937 rng(51);
        TSeries u = random_tseries(rng, 12);
        CHECK(laplace_reexpand(borel(u)) == u);
    }
    SUBCASE("level-2 weight maps (2k)! to 1") {
        BorelSeries b = borel_level2(classical_trace(8));
        for (int k = 0; k <= 8; ++k) CHECK(b.phi[k].rat() == rat(1));
    }
}

TEST_CASE("pade of rational data is exact") {
    // phi = 1/(1-tau): raw coefficients all 1
    BorelSeries phi;
    phi.mode = Mode::floating;
    for (int j = 0; j < 8; ++j) phi.phi.push_back(Coefficient::floating({1.0, 0.0}));
    PadeApproximant ap = pade(phi, 0, 1);
    REQUIRE(ap.den_roots.size() == 1);
    CHECK(std::abs(ap.den_roots[0] - Cplx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(ap.eval(Cplx(0.5, 0.0)) - Cplx(2.0, 0.0)) < 1e-12);

    // exactly lower-degree data makes higher orders singular
    CHECK_THROWS_AS(pade(phi, 2, 2), SingularPadeError);
    CHECK_THROWS_AS(pade(phi, 5, 5), OrderError);  // needs 11 coefficients
}

TEST_CASE("pade poles approach the branch point monotonically") {
    BorelSeries phi = borel(classical_trace(17));
    double prev_err = 1.0;
    for (int m : {4, 6, 8}) {
        PadeApproximant ap = pade(phi, m, m);
        double best = 1e9;
        for (Cplx p : ap.den_roots) best = std::min(best, std::abs(p));
        double err = std::abs(best - 0.25);
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 5e-3);  // [8/8] plain-pole accuracy is O(1/M^2)
}

TEST_CASE("dlog singularity locator") {
    SUBCASE("branch point of (1-4tau)^(-1/2) to 1e-6") {
        BorelSeries phi = borel(classical_trace(17));
        Cplx est = singularity_estimate(phi, 8);
        CHECK(std::abs(est - Cplx(0.25, 0.0)) < 1e-6);
    }
    SUBCASE("plain pole of 1/(1-tau)") {
        BorelSeries phi;
        phi.mode = Mode::floating;
        for (int j = 0; j < 12; ++j) phi.phi.push_back(Coefficient::floating({1.0, 0.0}));
        CHECK(std::abs(singularity_estimate(phi, 5) - Cplx(1.0, 0.0)) < 1e-9);
    }
}

TEST_CASE("stable-pole filtering") {
    SUBCASE("entire data has no stable poles near the origin") {
        ScanOptions opts;
        for (int m : {4, 15}) {
            opts.pade_order = m;
            std::vector<PadePole> ps = stable_poles(borel(geometric_trace(32)), opts);
            for (const PadePole& p : ps) CHECK(std::abs(p.location) >= 10.0);
        }
    }
    SUBCASE("counter-example columns are entire in t: summable everywhere") {
        int n = 5;
        TSeries u(Mode::exact, 32);
        Rational pw = 1;
        for (int j = 0; j <= 32; ++j) {
            u.at(j) = Coefficient::exact(rat_factorial(n) * pw);
            pw *= Rational(n) * Rational(n - 1);
        }
        std::vector<PadePole> ps = stable_poles(borel(u), {});
        for (const PadePole& p : ps) CHECK(std::abs(p.location) >= 10.0);
        std::vector<double> dirs;
        for (int k = 0; k < 24; ++k) dirs.push_back(2.0 * M_PI * k / 24.0);
        for (const auto& v : direction_scan(u, dirs)) CHECK(v.summable);
    }
    SUBCASE("classical trace keeps exactly the cut direction") {
        std::vector<PadePole> ps = stable_poles(borel(classical_trace(32)), {});
        REQUIRE(!ps.empty());
        // nearest pole sits just beyond the branch point, on the positive axis
        CHECK(std::abs(ps.front().location - Cplx(0.25, 0.0)) < 5e-3);
        for (const PadePole& p : ps)
            CHECK(angular_distance(std::arg(p.location), 0.0) < 0.01);
    }
}

TEST_CASE("laplace_sum") {
    SUBCASE("Euler series against the continued-fraction oracle") {
        double oracle = 10.0 * std::exp(10.0) * expint_e1(10.0);
        CHECK(oracle == doctest::Approx(0.9156333394).epsilon(1e-9));
        Cplx v = laplace_sum(borel(euler_trace(32)), 0.0, Cplx(0.1, 0.0));
        CHECK(std::abs(v - oracle) < 1e-6);
        CHECK(std::abs(v.imag()) < 1e-12);
    }
    SUBCASE("convergent input agrees with direct summation to 1e-8") {
        BorelSeries phi = borel(geometric_trace(32));
        for (double t : {0.1, 0.2, 0.3}) {
            // direct summation oracle: sum t^j
            double direct = 0.0, tp = 1.0;
            for (int j = 0; j <= 60; ++j, tp *= t) direct += tp;
            Cplx v = laplace_sum(phi, 0.0, Cplx(t, 0.0));
            CHECK(std::abs(v - direct) / std::abs(direct) < 1e-8);
        }
    }
    SUBCASE("zero sums to zero") {
        BorelSeries phi = borel(TSeries(Mode::floating, 20));
        CHECK(std::abs(laplace_sum(phi, 0.0, Cplx(0.1, 0.0), 8, 8)) == 0.0);
    }
    SUBCASE("pole on the ray is refused") {
        CHECK_THROWS_AS(laplace_sum(borel(euler_trace(32)), M_PI, Cplx(-0.1, 0.0)),
                        SummabilityError);
    }
    SUBCASE("arg t must stay within pi/2 of the ray") {
        CHECK_THROWS_AS(laplace_sum(borel(euler_trace(32)), 0.0, Cplx(-0.1, 0.0)),
                        SummabilityError);
    }
}

TEST_CASE("direction_scan") {
    std::vector<double> dirs;
    for (int k = 0; k < 24; ++k) dirs.push_back(2.0 * M_PI * k / 24.0);

    SUBCASE("classical trace: non-summable only on the positive real axis") {
        auto verdicts = direction_scan(classical_trace(32), dirs);
        for (const auto& v : verdicts) {
            bool near_zero = angular_distance(v.theta, 0.0) <= v.angular_clearance;
            CHECK(v.summable == !near_zero);
        }
    }
    SUBCASE("convergent trace: summable everywhere") {
        for (const auto& v : direction_scan(geometric_trace(32), dirs))
            CHECK(v.summable);
    }
    SUBCASE("Euler trace: blocked only near pi") {
        for (const auto& v : direction_scan(euler_trace(32), dirs)) {
            bool near_pi = angular_distance(v.theta, M_PI) <= v.angular_clearance;
            CHECK(v.summable == !near_pi);
        }
    }
    SUBCASE("verdict monotonicity in the clearance") {
        ScanOptions narrow, wide;
        narrow.clearance = 5.0 * M_PI / 180.0;
        wide.clearance = 25.0 * M_PI / 180.0;
        auto vn = direction_scan(classical_trace(32), dirs, narrow);
        auto vw = direction_scan(classical_trace(32), dirs, wide);
        for (std::size_t i = 0; i < dirs.size(); ++i)
            if (!vn[i].summable) CHECK(!vw[i].summable);
    }
    SUBCASE("needs 16 coefficients") {
        CHECK_THROWS_AS(direction_scan(classical_trace(14), dirs), OrderError);
    }
    SUBCASE("samples are attached to summable directions") {
        ScanOptions opts;
        opts.with_samples = true;
        opts.sample_radii = {0.1};
        auto vs = direction_scan(euler_trace(32), {0.0}, opts);
        REQUIRE(vs.size() == 1);
        REQUIRE(!vs[0].samples.empty());
        double oracle = 10.0 * std::exp(10.0) * expint_e1(10.0);
        CHECK(std::abs(vs[0].samples[0].second - oracle) < 1e-6);
    }
}

TEST_CASE("product of summable series stays summable (algebra stability)") {
    // Euler (blocked only near pi) times convergent geometric: at theta = pi/2
    // both factors are summable and so is the product's scan verdict.
    TSeries prod = euler_trace(32) * geometric_trace(32);
    auto vs = direction_scan(prod, {M_PI / 2.0, -M_PI / 2.0, M_PI / 4.0});
    for (const auto& v : vs) CHECK(v.summable);
}

TEST_CASE("check_trace_family") {
    SUBCASE("counter-example is rejected in every direction") {
        ZSeries a = parse_rational_z("z^2", 12);
        BivariateSeries f = parse_bivariate("1/(1-z)", 60, 12);
        HeatSolution sol = solve(HeatProblem::make(a, f));
        for (double theta : {0.0, M_PI / 2.0, M_PI, 3.0 * M_PI / 2.0}) {
            TraceFamilyReport rep =
                check_trace_family(sol.u, theta, std::polar(0.1, theta));
            CHECK(!rep.ok);
        }
    }
    SUBCASE("classical example is accepted away from the positive axis") {
        ZSeries a = parse_rational_z("1", 76);
        BivariateSeries f = parse_bivariate("1/(1-z)", 32, 76);
        HeatSolution sol = solve(HeatProblem::make(a, f));
        REQUIRE(sol.valid_to[32] >= 12);
        BivariateSeries table = sol.u.truncated(32, 12);
        TraceFamilyReport rep = check_trace_family(table, M_PI, Cplx(-0.1, 0.0));
        CHECK(rep.ok);
        // the blocked direction reports an evaluation failure, not an accept
        TraceFamilyReport rep0 = check_trace_family(table, 0.0, Cplx(0.1, 0.0));
        CHECK(!rep0.ok);
    }
    SUBCASE("polynomial in z is accepted trivially") {
        BivariateSeries u = parse_bivariate("(1+z)/(1-t/2)", 40, 10);
        TraceFamilyReport rep = check_trace_family(u, M_PI / 3.0,
                                                   std::polar(0.1, M_PI / 3.0));
        CHECK(rep.ok);
        CHECK(rep.reason == "finitely many nonzero traces");
    }
}
