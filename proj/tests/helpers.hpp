#pragma once

#include <random>

#include "heatsum/series.hpp"

namespace heatsum::testing {

// Deterministic generators for property tests.
inline Rational random_rational(std::mt19937& rng, int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return rat(num(rng), den(rng));
}

inline ZSeries random_zseries(std::mt19937& rng, int order) {
    ZSeries s(Mode::exact, order);
    for (int n = 0; n <= order; ++n)
        s.at(n) = Coefficient::exact(random_rational(rng));
    return s;
}

inline TSeries random_tseries(std::mt19937& rng, int order) {
    TSeries s(Mode::exact, order);
    for (int n = 0; n <= order; ++n)
        s.at(n) = Coefficient::exact(random_rational(rng));
    return s;
}

inline BivariateSeries random_bivariate(std::mt19937& rng, int jmax, int nmax) {
    BivariateSeries s(Mode::exact, jmax, nmax);
    for (int j = 0; j <= jmax; ++j)
        for (int n = 0; n <= nmax; ++n)
            s.at(j, n) = Coefficient::exact(random_rational(rng));
    return s;
}

// Independent product oracle: the divided-normalization convolution with
// explicit binomial weights, (fg)_{j,n} = sum C(j,p) C(n,q) f_{p,q} g_{j-p,n-q}.
inline BivariateSeries convolve_oracle(const BivariateSeries& a, const BivariateSeries& b) {
    int J = std::min(a.jmax(), b.jmax()), N = std::min(a.nmax(), b.nmax());
    BivariateSeries out(Mode::exact, J, N);
    for (int j = 0; j <= J; ++j)
        for (int n = 0; n <= N; ++n) {
            Rational acc = 0;
            for (int p = 0; p <= j; ++p)
                for (int q = 0; q <= n; ++q)
                    acc += rat_binomial(j, p) * rat_binomial(n, q) * a(p, q).rat() *
                           b(j - p, n - q).rat();
            out.at(j, n) = Coefficient::exact(acc);
        }
    return out;
}

inline ZSeries convolve_oracle_z(const ZSeries& a, const ZSeries& b) {
    int N = std::min(a.order(), b.order());
    ZSeries out(Mode::exact, N);
    for (int n = 0; n <= N; ++n) {
        Rational acc = 0;
        for (int q = 0; q <= n; ++q)
            acc += rat_binomial(n, q) * a[q].rat() * b[n - q].rat();
        out.at(n) = Coefficient::exact(acc);
    }
    return out;
}

}  // namespace heatsum::testing
