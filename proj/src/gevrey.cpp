#include "heatsum/gevrey.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <ostream>

namespace heatsum {

namespace {

std::vector<Cplx> grid_points(double r, NagumoGrid grid) {
    if (grid.radial < 4 || grid.angular < 4)
        throw OrderError("nagumo grid must be at least 4 x 4");
    std::vector<Cplx> pts;
    pts.reserve(static_cast<std::size_t>(grid.radial) * grid.angular);
    for (int m = 0; m < grid.radial; ++m) {
        // sin spacing: clustered toward |z| = r, includes 0, excludes r
        double rho = r * std::sin(0.5 * M_PI * m / grid.radial);
        for (int a = 0; a < grid.angular; ++a) {
            double phi = 2.0 * M_PI * a / grid.angular;
            pts.emplace_back(rho * std::cos(phi), rho * std::sin(phi));
        }
    }
    return pts;
}

double grid_sup(const ZSeries& f, int p, double r, NagumoGrid grid) {
    ZSeries ff = f.mode() == Mode::floating ? f : f.to_float();
    std::vector<Cplx> raw(ff.order() + 1);
    {
        auto rc = ff.raw();
        for (int n = 0; n <= ff.order(); ++n) raw[n] = rc[n].to_cplx();
    }
    double best = 0.0;
    for (const Cplx& z : grid_points(r, grid)) {
        Cplx acc(0.0, 0.0);
        for (int n = ff.order(); n >= 0; --n) acc = acc * z + raw[n];
        double v = std::abs(acc) * std::pow(r - std::abs(z), p);
        if (!std::isfinite(v)) throw OverflowError("nagumo norm evaluation overflowed");
        best = std::max(best, v);
    }
    return best;
}

}  // namespace

NagumoNorm nagumo_norm(const ZSeries& f, int p, double r, NagumoGrid grid) {
    if (p < 0) throw OrderError("nagumo weight p must be >= 0");
    if (!(r > 0.0)) throw OrderError("nagumo radius must be positive");
    return NagumoNorm{p, r, grid_sup(f, p, r, grid)};
}

NagumoCheck check_nagumo_product(const ZSeries& f, const ZSeries& g, int p, int q, double r,
                                 NagumoGrid grid) {
    double lhs = grid_sup(f * g, p + q, r, grid);
    double rhs = grid_sup(f, p, r, grid) * grid_sup(g, q, r, grid);
    return NagumoCheck{lhs <= kNagumoSlack * rhs, lhs, rhs};
}

NagumoCheck check_nagumo_derivative(const ZSeries& f, int p, double r, NagumoGrid grid) {
    double lhs = grid_sup(f.derivative(), p + 1, r, grid);
    double rhs = std::exp(1.0) * (p + 1) * grid_sup(f, p, r, grid);
    return NagumoCheck{lhs <= kNagumoSlack * rhs, lhs, rhs};
}

std::pair<int, int> default_fit_window(int count) {
    return {count / 2, count - 1};
}

GevreyEstimate gevrey_order(const std::vector<double>& log_m, int lo, int hi) {
    if (lo < 0 || hi >= static_cast<int>(log_m.size()) || hi - lo + 1 < 4)
        throw OrderError("gevrey fit window must hold at least 4 rows");
    for (int j = lo; j <= hi; ++j)
        if (!std::isfinite(log_m[j]))
            throw OrderError("gevrey fit needs positive finite inputs on the window");
    int n = hi - lo + 1;
    Eigen::MatrixXd X(n, 3);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        double j = lo + i;
        X(i, 0) = 1.0;
        X(i, 1) = j;
        X(i, 2) = j > 0 ? j * std::log(j) : 0.0;
        y(i) = log_m[lo + i];
    }
    Eigen::Vector3d beta = X.colPivHouseholderQr().solve(y);
    double rms = std::sqrt((X * beta - y).squaredNorm() / n);
    GevreyEstimate est;
    est.logC = beta(0);
    est.logK = beta(1);
    est.order_s = beta(2) - 1.0;
    est.residual = rms;
    est.window_lo = lo;
    est.window_hi = hi;
    est.subanalytic = est.order_s <= -0.5;
    return est;
}

GevreyEstimate gevrey_order_of(const TSeries& trace) {
    std::vector<double> lm(trace.order() + 1);
    for (int j = 0; j <= trace.order(); ++j) {
        double v = std::abs(trace[j].to_cplx());
        lm[j] = v > 0 ? std::log(v) : -std::numeric_limits<double>::infinity();
    }
    auto [lo, hi] = default_fit_window(static_cast<int>(lm.size()));
    return gevrey_order(lm, lo, hi);
}

MajorantReport majorant_sequence(const HeatProblem& p, double r, int jmax, NagumoGrid grid) {
    HeatProblem pf = p.f.mode() == Mode::floating ? p : p.to_float();
    if (jmax > pf.f.jmax()) throw OrderError("majorant_sequence: jmax exceeds f's truncation");
    HeatSolution sol = solve(pf);
    MajorantReport rep;
    rep.alpha = grid_sup(pf.a, 0, r, grid) * std::exp(2.0);
    double v_prev = 0.0;
    rep.dominated = true;
    for (int j = 0; j <= jmax; ++j) {
        double lg = std::lgamma(2.0 * j + 1.0);
        double gj = grid_sup(pf.f.t_row(j), 2 * j, r, grid) * std::exp(-lg);
        double vj = gj + rep.alpha * v_prev;
        double lhs = grid_sup(sol.u.t_row(j), 2 * j, r, grid) * std::exp(-lg);
        rep.g.push_back(gj);
        rep.v.push_back(vj);
        rep.lhs.push_back(lhs);
        if (lhs > kNagumoSlack * vj && lhs > 1e-300) rep.dominated = false;
        v_prev = vj;
    }
    return rep;
}

double default_radius(const std::vector<double>& nearest_roots) {
    double best = std::numeric_limits<double>::infinity();
    for (double d : nearest_roots) best = std::min(best, d);
    if (!std::isfinite(best)) return 1.0;
    return best / 2.0;
}

void write_gevrey_csv(std::ostream& os, const GevreyEstimate& est,
                      const std::vector<double>& log_m, const std::vector<double>& v) {
    os << "j,log_m,fitted,v\n";
    for (std::size_t j = 0; j < log_m.size(); ++j) {
        double jj = static_cast<double>(j);
        double fitted = est.logC + est.logK * jj +
                        (est.order_s + 1.0) * (j > 0 ? jj * std::log(jj) : 0.0);
        os << j << ',' << log_m[j] << ',' << fitted << ','
           << (j < v.size() ? v[j] : 0.0) << '\n';
    }
}

}  // namespace heatsum
