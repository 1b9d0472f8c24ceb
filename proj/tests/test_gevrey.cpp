#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "heatsum/gevrey.hpp"
#include "heatsum/parse.hpp"
#include "helpers.hpp"

using namespace heatsum;
using namespace heatsum::testing;

namespace {

ZSeries random_poly(std::mt19937& rng, int deg) {
    // small-coefficient polynomial, safe to evaluate anywhere
    return random_zseries(rng, deg);
}

}  // namespace

TEST_CASE("nagumo norm basics") {
    ZSeries one = parse_rational_z("1", 4);
    CHECK(nagumo_norm(one, 0, 0.7).value == doctest::Approx(1.0));

    ZSeries idz = parse_rational_z("z", 4);
    CHECK(nagumo_norm(idz, 0, 1.0).value == doctest::Approx(1.0).epsilon(0.01));

    // |1/(1-z)| (1-|z|) <= 1 on |z|<1, equality on the positive axis
    ZSeries geo = parse_rational_z("1/(1-z)", 60);
    double v = nagumo_norm(geo, 1, 1.0).value;
    CHECK(v == doctest::Approx(1.0).epsilon(0.02));
    CHECK(v <= 1.0 + 1e-9);
}

TEST_CASE("nagumo grid preconditions and overflow") {
    ZSeries one = parse_rational_z("1", 2);
    CHECK_THROWS_AS(nagumo_norm(one, 0, 1.0, NagumoGrid{2, 128}), OrderError);
    CHECK_THROWS_AS(nagumo_norm(one, 0, 1.0, NagumoGrid{64, 3}), OrderError);
    CHECK_THROWS_AS(nagumo_norm(one, -1, 1.0), OrderError);
    CHECK_THROWS_AS(nagumo_norm(one, 0, -0.5), OrderError);

    ZSeries big(Mode::floating, 1);
    big.at(1) = Coefficient::floating({1e308, 0.0});
    CHECK_THROWS_AS(nagumo_norm(big, 0, 4.0), OverflowError);
}

TEST_CASE("nagumo norm is monotone under nested grid refinement") {
    // doubling both grid counts yields a superset of sample points, so the
    // sampled sup can only grow
    std::mt19937 rng(40);
    for (int it = 0; it < 10; ++it) {
        ZSeries f = random_poly(rng, 6);
        double coarse = nagumo_norm(f, 1, 0.9, NagumoGrid{16, 32}).value;
        double mid = nagumo_norm(f, 1, 0.9, NagumoGrid{32, 64}).value;
        double fine = nagumo_norm(f, 1, 0.9, NagumoGrid{64, 128}).value;
        CHECK(coarse <= mid * (1 + 1e-12));
        CHECK(mid <= fine * (1 + 1e-12));
    }
}

TEST_CASE("nagumo norm axioms on sampled data") {
    std::mt19937 rng(41);
    for (int it = 0; it < 20; ++it) {
        ZSeries f = random_poly(rng, 5);
        ZSeries g = random_poly(rng, 5);
        int p = it % 3;
        double r = 0.8;
        double nf = nagumo_norm(f, p, r).value;
        double ng = nagumo_norm(g, p, r).value;
        double nsum = nagumo_norm(f + g, p, r).value;
        CHECK(nsum <= nf + ng + 1e-9 * (1 + nf + ng));  // triangle, same grid
        ZSeries lf = f.scaled(Coefficient::exact(rat(-7, 3)));
        CHECK(nagumo_norm(lf, p, r).value ==
              doctest::Approx(nf * 7.0 / 3.0).epsilon(1e-12));  // homogeneity
    }
}

TEST_CASE("pointwise bound |f(z)| <= norm * d(z)^-p on sampled z") {
    std::mt19937 rng(42);
    ZSeries f = random_poly(rng, 6);
    int p = 2;
    double r = 0.9;
    double norm = nagumo_norm(f, p, r).value;
    ZSeries ff = f.to_float();
    for (double rho : {0.0, 0.3, 0.62, 0.89}) {
        for (double phi : {0.0, 1.1, 2.7, 4.0}) {
            Cplx z = std::polar(rho, phi);
            // the grid contains nearby points; allow sampling slack
            CHECK(std::abs(ff.eval(z)) <=
                  kNagumoSlack * norm * std::pow(r - rho, -p) + 1e-9);
        }
    }
}

TEST_CASE("nagumo product and derivative inequalities") {
    SUBCASE("trivial equalities") {
        ZSeries one = parse_rational_z("1", 4);
        NagumoCheck c = check_nagumo_product(one, one, 0, 0, 0.5);
        CHECK(c.ok);
        CHECK(c.lhs == doctest::Approx(c.rhs));
        NagumoCheck d = check_nagumo_derivative(one, 2, 0.5);
        CHECK(d.ok);
        CHECK(d.lhs == 0.0);
    }
    SUBCASE("geometric-series fixtures") {
        ZSeries geo = parse_rational_z("1/(1-z)", 60);
        ZSeries omz = parse_rational_z("1-z", 60);
        CHECK(check_nagumo_product(geo, omz, 1, 0, 1.0).ok);
        CHECK(check_nagumo_derivative(geo, 2, 1.0).ok);
        for (int k = 1; k <= 5; ++k) {
            ZSeries zk = parse_rational_z("z^" + std::to_string(k), 6);
            for (int p = 0; p <= 3; ++p) CHECK(check_nagumo_derivative(zk, p, 1.0).ok);
        }
    }
    SUBCASE("100 random polynomial instances") {
        std::mt19937 rng(43);
        int pass_prod = 0, pass_der = 0;
        for (int it = 0; it < 100; ++it) {
            ZSeries f = random_poly(rng, 5);
            ZSeries g = random_poly(rng, 5);
            if (check_nagumo_product(f, g, 1, 1, 0.8).ok) ++pass_prod;
            if (check_nagumo_derivative(f, it % 4, 0.8).ok) ++pass_der;
        }
        CHECK(pass_prod == 100);
        CHECK(pass_der == 100);
    }
}

TEST_CASE("gevrey order estimation") {
    SUBCASE("(2j)! is 1-Gevrey") {
        std::vector<double> lm;
        for (int j = 0; j <= 12; ++j) lm.push_back(std::lgamma(2.0 * j + 1.0));
        auto [lo, hi] = default_fit_window(13);
        GevreyEstimate est = gevrey_order(lm, lo, hi);
        CHECK(est.order_s > 0.9);
        CHECK(est.order_s < 1.1);
        CHECK(!est.subanalytic);
    }
    SUBCASE("j! is convergent-type (s ~ 0)") {
        std::vector<double> lm;
        for (int j = 0; j <= 12; ++j) lm.push_back(std::lgamma(j + 1.0));
        GevreyEstimate est = gevrey_order(lm, 6, 12);
        CHECK(est.order_s > -0.1);
        CHECK(est.order_s < 0.1);
    }
    SUBCASE("constant rows are flagged sub-analytic with s = -1") {
        std::vector<double> lm(13, 0.0);
        GevreyEstimate est = gevrey_order(lm, 6, 12);
        CHECK(est.order_s == doctest::Approx(-1.0).epsilon(1e-9));
        CHECK(est.subanalytic);
    }
    SUBCASE("error paths") {
        std::vector<double> lm(10, 1.0);
        CHECK_THROWS_AS(gevrey_order(lm, 4, 6), OrderError);   // 3-row window
        CHECK_THROWS_AS(gevrey_order(lm, 8, 12), OrderError);  // out of range
        lm[5] = -std::numeric_limits<double>::infinity();      // log of 0
        CHECK_THROWS_AS(gevrey_order(lm, 2, 9), OrderError);
    }
    SUBCASE("trace of the classical solution via gevrey_order_of") {
        TSeries trace(Mode::exact, 12);
        for (int j = 0; j <= 12; ++j)
            trace.at(j) = Coefficient::exact(rat_factorial(2 * j));
        GevreyEstimate est = gevrey_order_of(trace);
        CHECK(est.order_s > 0.9);
        CHECK(est.order_s < 1.1);

        TSeries conv(Mode::exact, 12);
        for (int j = 0; j <= 12; ++j)
            conv.at(j) = Coefficient::exact(rat_factorial(j));
        GevreyEstimate est2 = gevrey_order_of(conv);
        CHECK(est2.order_s > -0.1);
        CHECK(est2.order_s < 0.1);
    }
}

TEST_CASE("majorant sequence") {
    SUBCASE("f = 0: everything vanishes") {
        HeatProblem p = HeatProblem::make(parse_rational_z("1", 6),
                                          BivariateSeries(Mode::exact, 5, 6));
        MajorantReport rep = majorant_sequence(p, 0.5, 5);
        CHECK(rep.dominated);
        for (double v : rep.v) CHECK(v == 0.0);
        for (double l : rep.lhs) CHECK(l == 0.0);
    }
    SUBCASE("a = 0: v_j = g_j and equality of definitions") {
        BivariateSeries f = parse_bivariate("1/((1-t)*(1-z))", 5, 8);
        HeatProblem p = HeatProblem::make(ZSeries(Mode::exact, 8), f);
        MajorantReport rep = majorant_sequence(p, 0.4, 5);
        CHECK(rep.alpha == 0.0);
        CHECK(rep.dominated);
        for (std::size_t j = 0; j < rep.v.size(); ++j) {
            CHECK(rep.v[j] == doctest::Approx(rep.g[j]));
            CHECK(rep.lhs[j] == doctest::Approx(rep.g[j]).epsilon(1e-12));
        }
    }
    SUBCASE("classical fixture, r = 1/2, J = 12") {
        HeatProblem p = HeatProblem::make(parse_rational_z("1", 26),
                                          parse_bivariate("1/(1-z)", 12, 26));
        MajorantReport rep = majorant_sequence(p, 0.5, 12);
        CHECK(rep.dominated);
        for (std::size_t j = 0; j < rep.v.size(); ++j)
            CHECK(rep.lhs[j] <= kNagumoSlack * rep.v[j]);
    }
    SUBCASE("domination holds row by row on random problems") {
        std::mt19937 rng(44);
        for (int it = 0; it < 10; ++it) {
            ZSeries a = random_zseries(rng, 8);
            if (a[0].is_zero()) a.at(0) = Coefficient::integer(1, Mode::exact);
            HeatProblem p = HeatProblem::make(a, random_bivariate(rng, 6, 8));
            MajorantReport rep = majorant_sequence(p, 0.3, 6);
            CHECK(rep.dominated);
        }
    }
}

TEST_CASE("default radius") {
    auto rf = rational_form(*parse_expression("1/(1-z)"), 'z');
    REQUIRE(rf.has_value());
    double d = nearest_denominator_root(*rf);
    CHECK(default_radius({d}) == doctest::Approx(0.5));
    CHECK(default_radius({}) == 1.0);  // entire inputs: fallback
    CHECK(default_radius({std::numeric_limits<double>::infinity()}) == 1.0);
}

TEST_CASE("gevrey csv export") {
    std::vector<double> lm = {0.0, 0.7, 2.1, 4.0, 6.2, 8.9, 11.0, 13.7};
    GevreyEstimate est = gevrey_order(lm, 2, 7);
    std::ostringstream os;
    write_gevrey_csv(os, est, lm, {1.0, 2.0});
    std::string text = os.str();
    CHECK(text.find("j,log_m,fitted,v") == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 9);
}
