#include "heatsum/heat.hpp"

#include <algorithm>

namespace heatsum {

const char* diffusivity_class_name(DiffusivityClass c) {
    switch (c) {
        case DiffusivityClass::unit: return "unit";
        case DiffusivityClass::simple_zero: return "simple-zero";
        case DiffusivityClass::higher_zero: return "higher-zero";
    }
    return "?";
}

DiffusivityClass classify_diffusivity(const ZSeries& a) {
    if (!a[0].is_zero()) return DiffusivityClass::unit;
    if (a.order() >= 1 && !a[1].is_zero()) return DiffusivityClass::simple_zero;
    return DiffusivityClass::higher_zero;
}

HeatProblem HeatProblem::make(ZSeries a, BivariateSeries f) {
    if (a.mode() != f.mode()) throw ModeError("a and f must share a mode");
    if (a.order() < f.nmax())
        throw OrderError("a(z) must be expanded at least to f's z-truncation");
    DiffusivityClass cls = classify_diffusivity(a);
    return HeatProblem{std::move(a), std::move(f), cls};
}

static ZSeries padded(const ZSeries& s, int order) {
    if (s.order() >= order) return s.truncated(order);
    ZSeries out(s.mode(), order);
    for (int n = 0; n <= s.order(); ++n) out.at(n) = s[n];
    return out;
}

static BivariateSeries padded_cols(const BivariateSeries& u, int nmax) {
    if (u.nmax() >= nmax) return u.truncated(u.jmax(), nmax);
    BivariateSeries out(u.mode(), u.jmax(), nmax);
    for (int j = 0; j <= u.jmax(); ++j)
        for (int n = 0; n <= u.nmax(); ++n) out.at(j, n) = u(j, n);
    return out;
}

// z-order gain of multiplication by a: its vanishing order (a == 0 never
// contributes, treat as "gains everything").
static int gain_of(const ZSeries& a) { return a.vanishing_order(); }

BivariateSeries apply_D(const HeatProblem& p, const BivariateSeries& u) {
    if (p.a.mode() != u.mode()) throw ModeError("apply_D: mode mismatch");
    if (u.nmax() < 2) throw OrderError("apply_D needs z-truncation >= 2");
    int J = u.jmax(), N = u.nmax() - 2;
    BivariateSeries w = u.dz2().dt_inv().truncated(J, N);
    return u.truncated(J, N) - w.mul_z(p.a.truncated(std::max(N, 0)));
}

HeatSolution solve(const HeatProblem& p) {
    const int J = p.f.jmax(), N = p.f.nmax();
    const Mode m = p.f.mode();
    const int gain = gain_of(p.a);
    BivariateSeries u(m, J, N);
    std::vector<int> valid(J + 1, N);
    ZSeries prev(m, N);  // row -1 is zero
    ZSeries a_trunc = p.a.truncated(N);
    for (int j = 0; j <= J; ++j) {
        ZSeries d2 = padded(prev.derivative().derivative(), N);
        ZSeries row = p.f.t_row(j) + a_trunc * d2;
        u.set_t_row(j, row);
        if (j > 0) valid[j] = std::max(-1, std::min(N, valid[j - 1] - 2 + gain));
        prev = std::move(row);
    }
    return HeatSolution{std::move(u), std::move(valid)};
}

HeatSolution solve_neumann(const HeatProblem& p, int terms) {
    if (terms < 1) throw OrderError("solve_neumann needs terms >= 1");
    const int J = p.f.jmax(), N = p.f.nmax();
    const int gain = gain_of(p.a);
    ZSeries a_trunc = p.a.truncated(N);
    BivariateSeries sum = p.f;
    BivariateSeries cur = p.f;
    for (int k = 1; k < terms; ++k) {
        cur = padded_cols(cur.dz2(), N).dt_inv().truncated(J, N).mul_z(a_trunc);
        if (cur.is_zero()) break;  // nilpotent tail (a = 0, or t-orders exhausted)
        sum = sum + cur;
    }
    std::vector<int> valid(J + 1);
    for (int j = 0; j <= J; ++j) {
        int steps = std::min(j, terms - 1);
        valid[j] = std::max(-1, std::min(N, N - steps * std::max(0, 2 - gain)));
    }
    return HeatSolution{std::move(sum), std::move(valid)};
}

BivariateSeries HeatSolution::masked() const {
    BivariateSeries out = u;
    for (int j = 0; j <= u.jmax(); ++j)
        for (int n = 0; n <= u.nmax(); ++n)
            if (n > valid_to[j]) out.at(j, n) = Coefficient::zero(u.mode());
    return out;
}

int HeatSolution::trace_rows(int n) const {
    int j = -1;
    while (j + 1 <= u.jmax() && valid_to[j + 1] >= n) ++j;
    return j;
}

TSeries HeatSolution::trace0() const {
    int rows = trace_rows(0);
    if (rows < 0) throw OrderError("no valid rows for trace 0");
    return u.z_col(0).truncated(rows);
}

TSeries HeatSolution::trace1() const {
    if (u.nmax() < 1) throw OrderError("z-truncation < 1: no trace 1");
    int rows = trace_rows(1);
    if (rows < 0) throw OrderError("no valid rows for trace 1");
    return u.z_col(1).truncated(rows);
}

std::pair<TSeries, TSeries> traces(const BivariateSeries& u) {
    if (u.nmax() < 1) throw OrderError("traces need z-truncation >= 1");
    return {u.z_col(0), u.z_col(1)};
}

FixedPointTerms fixed_point_terms(const HeatProblem& p, const BivariateSeries& g, int count) {
    if (count < 1) throw OrderError("fixed_point_terms needs count >= 1");
    if (p.cls == DiffusivityClass::higher_zero)
        throw Error("fixed-point construction unavailable for a(z) = O(z^2): "
                    "the 1/z^2 factor cancels the z-power gain");
    if (g.jmax() < count - 1)
        throw OrderError("g has too few t-orders for the requested count");
    const int N = g.nmax();
    ZSeries inv_factor = p.cls == DiffusivityClass::unit
                             ? p.a.inverse(N)                 // 1/a(z)
                             : p.a.shift_down().inverse(N);   // 1/A(z), a = z A
    FixedPointTerms out;
    BivariateSeries w = g;
    for (int i = 0; i < count; ++i) {
        if (i > 0) {
            BivariateSeries y = w.dz_inv2();
            if (p.cls == DiffusivityClass::simple_zero) y = y.shift_down_z();
            w = padded_cols(y, N).dt().mul_z(inv_factor);
        }
        out.vanishing_order.push_back(w.z_vanishing_order());
        out.terms.push_back(w);
    }
    return out;
}

BivariateSeries fixed_point_g(const HeatProblem& p, const TSeries& u0, const TSeries& u1) {
    const int N = p.f.nmax();
    const Mode m = p.f.mode();
    int J = std::min({u0.order(), u1.order(), p.f.jmax()});
    BivariateSeries head(m, J, N);  // u0 + z u1
    for (int j = 0; j <= J; ++j) {
        head.at(j, 0) = u0[j];
        if (N >= 1) head.at(j, 1) = u1[j];
    }
    BivariateSeries diff = head - p.f;
    if (p.cls == DiffusivityClass::unit)
        return diff.mul_z(p.a.inverse(N));
    if (p.cls == DiffusivityClass::simple_zero) {
        // (1/A)( u1 + (u0 - f)/z ); shift_down_z enforces u0 = f_{*,0}
        BivariateSeries x(m, J, N);
        for (int j = 0; j <= J; ++j) {
            x.at(j, 0) = u0[j] - p.f(j, 0);
            for (int n = 1; n <= N; ++n) x.at(j, n) = -p.f(j, n);
        }
        BivariateSeries inner = padded_cols(x.shift_down_z(), N);
        for (int j = 0; j <= J; ++j) inner.at(j, 0) += u1[j];
        return inner.mul_z(p.a.shift_down().inverse(N));
    }
    throw Error("fixed_point_g: higher-zero class unsupported");
}

BivariateSeries reconstruct_from_fixed_point(const HeatProblem& p, const TSeries& u0,
                                             const TSeries& u1, int terms) {
    BivariateSeries g = fixed_point_g(p, u0, u1);
    FixedPointTerms fpt = fixed_point_terms(p, g, terms);
    BivariateSeries w = fpt.terms[0];
    for (int i = 1; i < terms; ++i) w = w + fpt.terms[i];
    const int N = p.f.nmax();
    BivariateSeries v = padded_cols(w.dz_inv2(), N).dt();
    BivariateSeries out = v;
    int J = std::min({v.jmax(), u0.order(), u1.order()});
    out = out.truncated(J, N);
    for (int j = 0; j <= J; ++j) {
        out.at(j, 0) += u0[j];
        if (N >= 1) out.at(j, 1) += u1[j];
    }
    return out;
}

BivariateSeries counterexample_oracle(int jmax, int nmax) {
    BivariateSeries u(Mode::exact, jmax, nmax);
    for (int n = 0; n <= nmax; ++n) {
        Rational nf = rat_factorial(static_cast<unsigned long>(n));
        Rational base = Rational(n) * Rational(n - 1);
        Rational pw = 1;
        for (int j = 0; j <= jmax; ++j) {
            u.at(j, n) = Coefficient::exact(nf * pw);
            pw *= base;
        }
    }
    return u;
}

}  // namespace heatsum
