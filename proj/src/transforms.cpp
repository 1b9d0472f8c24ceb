#include "heatsum/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "heatsum/heat.hpp"

namespace heatsum {

namespace {

Coefficient coeff_pow(const Coefficient& base, int e, Mode m) {
    Coefficient acc = Coefficient::integer(1, m);
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

}  // namespace

std::pair<TSeries, TSeries> traces_const_a(const BivariateSeries& f, const Coefficient& a) {
    if (a.mode() != f.mode()) throw ModeError("traces_const_a: mode mismatch");
    const Mode m = f.mode();
    int K = std::min(f.jmax(), (f.nmax() - 1) / 2);
    if (f.nmax() < 1 || K < 0)
        throw OrderError("traces_const_a: f needs z-truncation >= 2K+1 for K t-orders");
    TSeries t0(m, K), t1(m, K);
    for (int k = 0; k <= K; ++k) {
        Coefficient s0 = Coefficient::zero(m), s1 = Coefficient::zero(m);
        Coefficient an = Coefficient::integer(1, m);
        for (int n = 0; n <= k; ++n) {  // j = k - n
            s0 += an * f(k - n, 2 * n);
            s1 += an * f(k - n, 2 * n + 1);
            an *= a;
        }
        t0.at(k) = s0;
        t1.at(k) = s1;
    }
    return {t0, t1};
}

std::vector<Coefficient> two_laplace(const ZSeries& f) {
    std::vector<Coefficient> raw(f.order() + 1);
    for (int n = 0; n <= f.order(); ++n)
        raw[n] = f[n] / factorial_coeff(n / 2, f.mode());
    return raw;
}

HalfIntegerSeries half_split_raw(const std::vector<Coefficient>& raw, Mode mode) {
    int n = static_cast<int>(raw.size());
    int ke = (n + 1) / 2, ko = n / 2;
    std::vector<Coefficient> e(std::max(ke, 1), Coefficient::zero(mode)),
        o(std::max(ko, 1), Coefficient::zero(mode));
    for (int i = 0; i < n; ++i)
        (i % 2 == 0 ? e[i / 2] : o[i / 2]) = raw[i];
    return HalfIntegerSeries{TSeries::from_raw(mode, std::move(e)),
                             TSeries::from_raw(mode, std::move(o))};
}

std::pair<TSeries, TSeries> substitute_sqrt(const HalfIntegerSeries& h, const Coefficient& a) {
    const Mode m = h.even.mode();
    TSeries e(m, h.even.order()), o(m, h.odd.order());
    for (int k = 0; k <= e.order(); ++k) e.at(k) = h.even[k] * coeff_pow(a, k, m);
    for (int k = 0; k <= o.order(); ++k) o.at(k) = h.odd[k] * coeff_pow(a, k, m);
    return {e, o};
}

HalfIntegerSeries capF_const_a(const BivariateSeries& f, const Coefficient& a) {
    // The chain L_t L_z f(tau, (a tau)^{1/2}) collects the diagonal sums; the
    // backward Borel divides tau^k and tau^{k+1/2} alike by k!, so in divided
    // form the pair is exactly (A_k, B_k).
    auto [t0, t1] = traces_const_a(f, a);
    return HalfIntegerSeries{t0, t1};
}

std::pair<TSeries, TSeries> traces_bz(const BivariateSeries& f, const Coefficient& b) {
    if (b.mode() != f.mode()) throw ModeError("traces_bz: mode mismatch");
    const Mode m = f.mode();
    TSeries t0 = f.z_col(0);
    int K = std::min(f.jmax(), f.nmax() - 1);
    if (K < 0) throw OrderError("traces_bz: f needs z-truncation >= 1");
    TSeries t1(m, K);
    for (int mm = 0; mm <= K; ++mm) {
        Coefficient s = Coefficient::zero(m);
        Coefficient bk = Coefficient::integer(1, m);
        for (int k = 0; k <= mm; ++k) {  // j = mm - k
            s += f(mm - k, k + 1) * bk * factorial_coeff(k, m);
            bk *= b;
        }
        t1.at(mm) = s;
    }
    return {t0, t1};
}

TSeries g_hat_bz(const BivariateSeries& f, const Coefficient& b) {
    if (b.mode() != f.mode()) throw ModeError("g_hat_bz: mode mismatch");
    const Mode m = f.mode();
    if (f.nmax() < 1) {
        // z-free data: L_z f - f_{*,0} vanishes identically
        TSeries zero(m, f.jmax());
        return zero;
    }
    // raw coefficients of g(t,z) = L_t L_z [ (1/z)(L_z f - f_{*,0}) ]:
    // g_raw[j][n] = f_{j,n+1} n!
    int J = f.jmax(), Nm = f.nmax() - 1;
    std::vector<std::vector<Coefficient>> g_raw(J + 1,
        std::vector<Coefficient>(Nm + 1, Coefficient::zero(m)));
    for (int j = 0; j <= J; ++j)
        for (int n = 0; n <= Nm; ++n)
            g_raw[j][n] = f(j, n + 1) * factorial_coeff(n, m);
    // restrict to the ray z = b t, then Borel (raw c_k -> c_k / k!)
    int K = std::min(J, Nm);
    std::vector<Coefficient> phi(K + 1, Coefficient::zero(m));
    for (int k = 0; k <= K; ++k) {
        Coefficient s = Coefficient::zero(m);
        Coefficient bn = Coefficient::integer(1, m);
        for (int n = 0; n <= k; ++n) {  // j = k - n
            s += g_raw[k - n][n] * bn;
            bn *= b;
        }
        phi[k] = s / factorial_coeff(k, m);
    }
    return TSeries::from_raw(m, std::move(phi));
}

namespace {

bool scan_single(const TSeries& trace, double theta, const ScanOptions& opts,
                 std::vector<PadePole>& poles_out) {
    TSeries tf = trace.mode() == Mode::floating ? trace : trace.to_float();
    std::vector<PadePole> poles = stable_poles(borel(tf), opts);
    bool ok = true;
    for (const PadePole& p : poles) {
        if (angular_distance(std::arg(p.location), theta) <= opts.clearance) ok = false;
        poles_out.push_back(p);
    }
    return ok;
}

bool scan_single_level2(const TSeries& series, double theta, const ScanOptions& opts,
                        std::vector<PadePole>& poles_out) {
    TSeries sf = series.mode() == Mode::floating ? series : series.to_float();
    std::vector<PadePole> poles = stable_poles(borel_level2(sf), opts);
    bool ok = true;
    for (const PadePole& p : poles) {
        if (angular_distance(std::arg(p.location), theta) <= opts.clearance) ok = false;
        poles_out.push_back(p);
    }
    return ok;
}

std::vector<std::string> head_strings(const TSeries& s, int count) {
    std::vector<std::string> out;
    for (int k = 0; k <= std::min(s.order(), count - 1); ++k) out.push_back(s[k].str());
    return out;
}

double wrap_2pi(double x) {
    x = std::fmod(x, 2.0 * M_PI);
    return x < 0 ? x + 2.0 * M_PI : x;
}

}  // namespace

CriterionReport criterion_report(const BivariateSeries& f, const CriterionCase& cs,
                                 double theta, const ScanOptions& opts) {
    if (cs.value.is_zero()) throw Error("criterion_report: a (resp. b) must be nonzero");
    CriterionReport rep;
    rep.theta = theta;
    const Mode m = f.mode();

    if (cs.kind == CriterionCase::constant_a) {
        rep.kind = "constant";
        double arg_a = std::arg(cs.value.to_cplx());
        rep.criterion_directions = {wrap_2pi((theta + arg_a) / 2.0),
                                    wrap_2pi((theta + arg_a) / 2.0 + M_PI)};
        HalfIntegerSeries F = capF_const_a(f, cs.value);
        if (F.even.order() + 1 < 16)
            throw OrderError("criterion_report: need >= 16 diagonal coefficients "
                             "(raise J and N of f)");
        bool ce = scan_single_level2(F.even, theta, opts, rep.criterion_poles);
        bool co = scan_single_level2(F.odd, theta, opts, rep.criterion_poles);
        rep.criterion_summable = ce && co;
        rep.transformed_head = head_strings(F.even, 12);

        ZSeries a_series(m, f.nmax());
        a_series.at(0) = cs.value;
        HeatSolution sol = solve(HeatProblem::make(a_series, f));
        bool d0 = scan_single(sol.trace0(), theta, opts, rep.direct_poles);
        bool d1 = scan_single(sol.trace1(), theta, opts, rep.direct_poles);
        rep.direct_summable = d0 && d1;
    } else {
        rep.kind = "linear";
        double arg_b = std::arg(cs.value.to_cplx());
        rep.criterion_directions = {wrap_2pi(theta + arg_b)};
        TSeries ghat = g_hat_bz(f, cs.value);
        if (ghat.order() + 1 < 16)
            throw OrderError("criterion_report: need >= 16 diagonal coefficients "
                             "(raise J and N of f)");
        bool cg = scan_single(ghat, theta, opts, rep.criterion_poles);
        bool c0 = scan_single(f.z_col(0), theta, opts, rep.criterion_poles);
        rep.criterion_summable = cg && c0;
        rep.transformed_head = head_strings(ghat, 12);

        ZSeries a_series(m, f.nmax());
        if (f.nmax() < 1) throw OrderError("criterion_report: f needs z-truncation >= 1");
        a_series.at(1) = cs.value;  // a(z) = b z in divided form
        HeatSolution sol = solve(HeatProblem::make(a_series, f));
        bool d0 = scan_single(sol.trace0(), theta, opts, rep.direct_poles);
        bool d1 = scan_single(sol.trace1(), theta, opts, rep.direct_poles);
        rep.direct_summable = d0 && d1;
    }
    rep.agree = rep.criterion_summable == rep.direct_summable;
    return rep;
}

}  // namespace heatsum
