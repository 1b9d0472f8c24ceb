#pragma once

#include <iosfwd>
#include <vector>

#include "heatsum/heat.hpp"
#include "heatsum/series.hpp"

namespace heatsum {

// Grid-based Nagumo norms ||f||_{p,r} = sup_{|z|<r} |f(z)| (r-|z|)^p.  The
// sup is taken over a fixed polar grid, radially Chebyshev-clustered toward
// |z| = r where the sup of an analytic function concentrates.  A sampled sup
// can only undershoot; inequality checks therefore allow the documented
// slack factor.
struct NagumoGrid {
    int radial = 64;
    int angular = 128;
};
inline constexpr double kNagumoSlack = 1.05;

struct NagumoNorm {
    int p = 0;
    double r = 0.0;
    double value = 0.0;
};

NagumoNorm nagumo_norm(const ZSeries& f, int p, double r, NagumoGrid grid = {});

struct NagumoCheck {
    bool ok = false;
    double lhs = 0.0;
    double rhs = 0.0;  // before slack
};

// ||fg||_{p+q,r} <= ||f||_{p,r} ||g||_{q,r}
NagumoCheck check_nagumo_product(const ZSeries& f, const ZSeries& g, int p, int q, double r,
                                 NagumoGrid grid = {});
// ||f'||_{p+1,r} <= e (p+1) ||f||_{p,r}, same radius on both sides
NagumoCheck check_nagumo_derivative(const ZSeries& f, int p, double r, NagumoGrid grid = {});

// Least-squares fit of log m_j ~ logC + j logK + sigma (j log j) on a window;
// the reported order is s = sigma - 1, so divided coefficients of an analytic
// series (m_j ~ K^j j!) give s ~ 0 and a 1-Gevrey trace (m_j ~ K^j (2j)!)
// gives s ~ 1.
struct GevreyEstimate {
    double order_s = 0.0;
    double logK = 0.0;
    double logC = 0.0;
    double residual = 0.0;  // RMS over the window
    int window_lo = 0, window_hi = 0;
    bool subanalytic = false;  // sigma ~ 0 regime (entire of exponential type)
};

GevreyEstimate gevrey_order(const std::vector<double>& log_m, int window_lo, int window_hi);
// Convenience: fit |divided coefficients| of a trace with the default
// upper-half window.
GevreyEstimate gevrey_order_of(const TSeries& trace);
std::pair<int, int> default_fit_window(int count);

// The proof sequence v_{-1} = 0, v_j = g_j + alpha v_{j-1} with
// g_j = ||f_{j,*}||_{2j,r} / (2j)! and alpha = ||a||_{0,r} e^2, checked
// against ||u_{j,*}||_{2j,r} / (2j)! row by row.
struct MajorantReport {
    std::vector<double> v;
    std::vector<double> g;
    std::vector<double> lhs;  // ||u_{j,*}||_{2j,r} / Gamma(1+2j)
    double alpha = 0.0;
    bool dominated = false;  // lhs_j <= slack * v_j for every row
};

MajorantReport majorant_sequence(const HeatProblem& p, double r, int jmax, NagumoGrid grid = {});

// Default disc radius: half the distance from 0 to the nearest denominator
// root among the rational inputs (+infinity for entire inputs -> fallback 1).
double default_radius(const std::vector<double>& nearest_roots);

void write_gevrey_csv(std::ostream& os, const GevreyEstimate& est,
                      const std::vector<double>& log_m, const std::vector<double>& v);

}  // namespace heatsum
