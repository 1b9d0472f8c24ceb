#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heatsum/resummation.hpp"
#include "heatsum/series.hpp"

namespace heatsum {

// Transforms of the data f characterizing 1-summability of the solution
// traces for a(z) = a (constant) and a(z) = b z.

// G(zeta) = E(zeta^2) + zeta O(zeta^2), kept as a pair of ordinary series in
// the squared variable so that substitutions like zeta = (a t)^{1/2} are pure
// pair recombinations, never fractional-power numerics.
struct HalfIntegerSeries {
    TSeries even, odd;  // divided coefficients in the squared variable
};

// Eq.-(9) diagonals: trace0_k = sum_{j+n=k} a^n f_{j,2n}, trace1 likewise
// with f_{j,2n+1}; output order min(J, (N-1)/2) (divided coefficients).
std::pair<TSeries, TSeries> traces_const_a(const BivariateSeries& f, const Coefficient& a);

// 2-Laplace transform of a t-independent f: raw output coefficients
// f_{0,n} / [n/2]!  (input divided, output raw: documented asymmetry).
std::vector<Coefficient> two_laplace(const ZSeries& f);

// Even/odd split of a raw series in zeta, as divided series in zeta^2.
HalfIntegerSeries half_split_raw(const std::vector<Coefficient>& raw, Mode mode);

// zeta = (a t)^{1/2}: even part gains a^k, both parts become series in t.
std::pair<TSeries, TSeries> substitute_sqrt(const HalfIntegerSeries& h, const Coefficient& a);

// F = B_tau L_t L_z f(tau, (a tau)^{1/2}) evaluated at t^2: even part carries
// the diagonal sums A_k = sum_{j+n=k} f_{j,2n} a^n, the odd part B_k from the
// odd z-rows; F(t^{1/2}) = trace0(t) + (a t)^{1/2} trace1(t) holds pairwise.
HalfIntegerSeries capF_const_a(const BivariateSeries& f, const Coefficient& a);

// Eq.-(12) traces for a(z) = b z: trace0 = f_{*,0},
// trace1_m = sum_{j+k=m} f_{j,k+1} b^k k!  (divided).
std::pair<TSeries, TSeries> traces_bz(const BivariateSeries& f, const Coefficient& b);

// The g-chain route to trace1: g = L_t L_z [ (1/z)(L_z f - f_{*,0}) ],
// restricted to z = b t, then Borel; equals traces_bz's second output.
TSeries g_hat_bz(const BivariateSeries& f, const Coefficient& b);

struct CriterionCase {
    enum Kind { constant_a, linear_bz } kind;
    Coefficient value;  // a or b, nonzero
};

// Runs the transform-side summability criterion next to the direct verdict
// on the solver's traces and reports both.
struct CriterionReport {
    std::string kind;
    double theta = 0.0;
    std::vector<double> criterion_directions;  // representatives of the mod-pi set
    bool criterion_summable = false;
    bool direct_summable = false;
    bool agree = false;
    std::vector<std::string> transformed_head;  // first 12 coefficients
    std::vector<PadePole> criterion_poles, direct_poles;
};

CriterionReport criterion_report(const BivariateSeries& f, const CriterionCase& cs,
                                 double theta, const ScanOptions& opts = {});

}  // namespace heatsum
