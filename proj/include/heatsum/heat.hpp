#pragma once

#include <utility>
#include <vector>

#include "heatsum/series.hpp"

namespace heatsum {

// Everything here concerns the operator D = 1 - a(z) dt_inv dz2 acting on
// truncated bivariate series.

enum class DiffusivityClass {
    unit,         // a(0) != 0
    simple_zero,  // a(0) = 0, a'(0) != 0
    higher_zero,  // a(z) = O(z^2): no summability criterion available
};

const char* diffusivity_class_name(DiffusivityClass c);
DiffusivityClass classify_diffusivity(const ZSeries& a);

struct HeatProblem {
    ZSeries a;
    BivariateSeries f;
    DiffusivityClass cls;

    // Validates: shared mode, a's truncation covers f's z-truncation.
    static HeatProblem make(ZSeries a, BivariateSeries f);
    HeatProblem to_float() const { return make(a.to_float(), f.to_float()); }
};

// Formal solution together with its per-row trust region.  Truncation makes
// row j of the solution reliable only up to some z-order: differentiating
// twice in z costs two orders per t-step, multiplication by a(z) gives back
// its z-vanishing order.  Entries beyond valid_to[j] are stored but are
// artifacts of the truncation.
struct HeatSolution {
    BivariateSeries u;
    std::vector<int> valid_to;  // per row; -1 when nothing in the row is trusted

    BivariateSeries masked() const;  // zeros beyond the trust region
    int trace_rows(int n) const;     // largest j with column n valid for all rows <= j
    TSeries trace0() const;
    TSeries trace1() const;
};

// u - a(z) * dt_inv(dz2(u)), on truncation (J, N-2).  Requires N >= 2.
BivariateSeries apply_D(const HeatProblem& p, const BivariateSeries& u);

// Row-by-row recurrence u_j = f_j + a * u_{j-1}'' starting from u_{-1} = 0.
HeatSolution solve(const HeatProblem& p);

// Partial Neumann sum of (a dt_inv dz2)^k f over k < terms.  terms >= 1.
HeatSolution solve_neumann(const HeatProblem& p, int terms);

// (z_col(0), z_col(1)); requires N >= 1.
std::pair<TSeries, TSeries> traces(const BivariateSeries& u);

// The fixed-point iterates w_0 = g, w_p = (1/a) dt dz_inv2 w_{p-1} (unit
// class) or w_p = (1/(z A)) dt dz_inv2 w_{p-1} with a = z A (simple-zero
// class).  Refused for the higher-zero class.
struct FixedPointTerms {
    std::vector<BivariateSeries> terms;
    std::vector<int> vanishing_order;  // z-vanishing order of each term
};
FixedPointTerms fixed_point_terms(const HeatProblem& p, const BivariateSeries& g, int count);

// g for the fixed-point system, built from the problem and the two traces:
// unit:        g = (1/a)      (u0 + z u1 - f)
// simple zero: g = (1/A)( u1 + (u0 - f)/z ),  a = z A
BivariateSeries fixed_point_g(const HeatProblem& p, const TSeries& u0, const TSeries& u1);

// u0 + z u1 + dt dz_inv2 (sum of fixed-point terms); equals the solution on
// the common trust region.
BivariateSeries reconstruct_from_fixed_point(const HeatProblem& p, const TSeries& u0,
                                             const TSeries& u1, int terms);

// Golden fixture u_{j,n} = n! (n(n-1))^j, the exact solution for a = z^2,
// f = 1/(1-z).  Exact mode.
BivariateSeries counterexample_oracle(int jmax, int nmax);

}  // namespace heatsum
