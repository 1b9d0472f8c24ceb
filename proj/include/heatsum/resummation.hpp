#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heatsum/series.hpp"

namespace heatsum {

// Borel-plane series: raw Taylor coefficients in tau.  From a divided
// TSeries u_j the level-1 weight is phi_j = u_j / (j!)^2 (one j! to reach raw
// coefficients, one more for the Borel transform), so a 1-Gevrey trace maps
// to a function with finite radius of convergence.
struct BorelSeries {
    Mode mode = Mode::exact;
    std::vector<Coefficient> phi;

    int count() const { return static_cast<int>(phi.size()); }
    std::vector<Cplx> to_cplx() const;
};

BorelSeries borel(const TSeries& u);
// Level-2 weight phi_k = u_k / (2k)! on divided coefficients; a series
// bounded by C K^k (2k)! maps to a finite-radius function.
BorelSeries borel_level2(const TSeries& u);
// Inverse of borel(): u_j = phi_j (j!)^2, exact round trip in exact mode.
TSeries laplace_reexpand(const BorelSeries& b);

// [L/M] Pade approximant of a Borel series.  The linear system is solved in
// an internally rescaled variable (coefficients of geometric growth are
// balanced first); numerator, denominator and denominator roots are reported
// in the original variable.  Throws SingularPadeError when the denominator
// system is rank deficient (caller retries with smaller M).
struct PadeApproximant {
    int L = 0, M = 0;
    std::vector<Cplx> num;        // ascending powers
    std::vector<Cplx> den;        // ascending, den[0] = 1
    std::vector<Cplx> den_roots;  // candidate singularities

    Cplx eval(Cplx tau) const;
    Cplx residue_at(Cplx pole) const;
};

PadeApproximant pade(const BorelSeries& phi, int L, int M);

// A pole is kept as evidence when it reappears (within match_tol, relative)
// at the two top Pade orders and carries a residue above the Froissart
// threshold (relative to |phi_0|).
struct PadePole {
    Cplx location;
    double residue_mag = 0.0;
    double stability = 0.0;  // relative cross-order mismatch, smaller is better
};

struct ScanOptions {
    int pade_order = 0;           // 0: floor((count-1)/2) from available coefficients
    double clearance = 5.0 * 3.14159265358979323846 / 180.0;
    double match_tol = 1e-3;
    double residue_min = 1e-10;
    bool with_samples = false;
    std::vector<double> sample_radii = {0.05, 0.1, 0.2};
};

std::vector<PadePole> stable_poles(const BorelSeries& phi, const ScanOptions& opts = {});

// Nearest-to-origin stable pole of the Pade table of phi'/phi.  Branch
// points of phi become simple poles of the log-derivative, so this locates
// singularities far more accurately than the direct Pade pole string.
Cplx singularity_estimate(const BorelSeries& phi, int max_order);

// 1-sum (1/t) int_0^{inf e^{i theta}} phi~(tau) e^{-tau/t} dtau with phi~ the
// Pade continuation, by adaptive Gauss-Legendre panels of geometrically
// growing width.  Requires |arg t - theta| < pi/2 and a pole-free ray.
Cplx laplace_sum(const BorelSeries& phi, double theta, Cplx t, int L, int M);
Cplx laplace_sum(const BorelSeries& phi, double theta, Cplx t);  // default orders

struct SummabilityVerdict {
    double theta = 0.0;
    bool summable = false;
    std::vector<PadePole> evidence;  // stable poles of the Borel transform
    double angular_clearance = 0.0;
    std::vector<std::pair<Cplx, Cplx>> samples;  // (t, 1-sum at t)
};

// Requires float-convertible input with at least 16 coefficients.
std::vector<SummabilityVerdict> direction_scan(const TSeries& u,
                                               const std::vector<double>& directions,
                                               const ScanOptions& opts = {});

// Necessary condition on the trace family u_{*,n}: Cauchy estimates force
// |u_{*,n}(t)| <= C k^n n! uniformly on a sector of opening > pi around
// theta.  Each trace is evaluated (by direct summation when it converges,
// else by Borel-Laplace along the probe ray) at |t_probe| on the rays
// theta and theta +- (pi/2 + 10 deg); the fit of log(|u_{*,n}|/n!) against
// {1, n, n(n-1)} rejects on upward log-convexity.
struct TraceProbe {
    Cplx t;
    bool evaluated = false;
    int columns_used = 0;
    double quad_coeff = 0.0;      // fitted n(n-1) coefficient
    double growth_excess = 0.0;   // quad_coeff * n_hi (n_hi - 1)
    bool rejected = false;
};

struct TraceFamilyReport {
    bool ok = false;
    std::vector<TraceProbe> probes;
    std::string reason;
};

TraceFamilyReport check_trace_family(const BivariateSeries& u, double theta, Cplx t_probe,
                                     const ScanOptions& opts = {});

// Angular distance of two directions, wrapped to [0, pi].
double angular_distance(double a, double b);

// Worker cap for direction scans; honors GEVREY_HEAT_THREADS.
int scan_thread_cap();

}  // namespace heatsum
