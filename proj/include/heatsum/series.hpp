#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "heatsum/coefficient.hpp"

namespace heatsum {

// Divided-coefficient convention used throughout: a univariate series stores
// c_0..c_N with f = sum c_n x^n / n!, a bivariate series stores u_{j,n} with
// u = sum u_{j,n} t^j/j! z^n/n!.  Differentiation and antidifferentiation are
// then pure index shifts.  "Raw" always means ordinary Taylor coefficients.

// Float-mode truncations are capped: divided coefficients of 1-Gevrey series
// grow like (2j)!, which overflows double past j = 80.
inline constexpr int kMaxFloatOrder = 80;

Coefficient factorial_coeff(int n, Mode m);

namespace detail {
struct TTag;
struct ZTag;
}  // namespace detail

template <class Tag>
class Series1 {
  public:
    Series1(Mode m, int order) : mode_(m), c_(check_order(m, order) + 1, Coefficient::zero(m)) {}

    static Series1 from_divided(Mode m, std::vector<Coefficient> coeffs);
    static Series1 from_raw(Mode m, std::vector<Coefficient> raw);

    Mode mode() const { return mode_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Coefficient& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    Coefficient& at(int n) { return c_[static_cast<std::size_t>(n)]; }
    const std::vector<Coefficient>& coeffs() const { return c_; }

    bool is_zero() const;
    // Smallest n with c_n != 0; order()+1 for the zero series.
    int vanishing_order() const;

    std::vector<Coefficient> raw() const;
    Series1 truncated(int new_order) const;
    Series1 to_float() const;
    Cplx eval(Cplx x) const;

    Series1 derivative() const;      // order-1 (order 0 maps to the zero series of order 0)
    Series1 antiderivative() const;  // order+1, vanishes at 0
    Series1 shift_up() const;        // multiply by the variable
    Series1 shift_down() const;      // divide by the variable; requires c_0 = 0
    Series1 inverse(int out_order) const;  // 1/f to out_order; requires f(0) != 0

    friend Series1 operator+(const Series1& a, const Series1& b) { return combine(a, b, +1); }
    friend Series1 operator-(const Series1& a, const Series1& b) { return combine(a, b, -1); }
    friend Series1 operator*(const Series1& a, const Series1& b) {
        if (a.mode_ != b.mode_) throw ModeError("series mode mismatch in mul");
        int out = std::min(a.order(), b.order());
        auto ra = a.raw();
        auto rb = b.raw();
        std::vector<Coefficient> rc(out + 1, Coefficient::zero(a.mode_));
        for (int n = 0; n <= out; ++n)
            for (int k = 0; k <= n; ++k) rc[n] += ra[k] * rb[n - k];
        return from_raw(a.mode_, std::move(rc));
    }
    Series1 operator-() const;
    Series1 scaled(const Coefficient& k) const;

    friend bool operator==(const Series1& a, const Series1& b) {
        return a.mode_ == b.mode_ && a.c_ == b.c_;
    }

  private:
    static int check_order(Mode m, int order);
    static Series1 combine(const Series1& a, const Series1& b, int sign);
    Mode mode_;
    std::vector<Coefficient> c_;
};

using TSeries = Series1<detail::TTag>;  // traces, series in t
using ZSeries = Series1<detail::ZTag>;  // coefficient functions, series in z

extern template class Series1<detail::TTag>;
extern template class Series1<detail::ZTag>;

class BivariateSeries {
  public:
    BivariateSeries(Mode m, int jmax, int nmax);

    Mode mode() const { return mode_; }
    int jmax() const { return jmax_; }
    int nmax() const { return nmax_; }

    const Coefficient& operator()(int j, int n) const { return c_[idx(j, n)]; }
    Coefficient& at(int j, int n) { return c_[idx(j, n)]; }

    ZSeries t_row(int j) const;
    TSeries z_col(int n) const;
    void set_t_row(int j, const ZSeries& row);

    bool is_zero() const;
    int z_vanishing_order() const;  // nmax()+1 for the zero series

    BivariateSeries truncated(int new_jmax, int new_nmax) const;
    BivariateSeries to_float() const;
    double max_abs() const;  // lossy; for float-mode diagnostics

    // Index-shift calculus (divided normalization).
    BivariateSeries dt() const;
    BivariateSeries dt_inv() const;
    BivariateSeries dz() const;
    BivariateSeries dz_inv() const;
    BivariateSeries dz2() const { return dz().dz(); }
    BivariateSeries dz_inv2() const { return dz_inv().dz_inv(); }
    BivariateSeries shift_down_z() const;  // divide by z; requires zero n=0 column

    BivariateSeries mul_z(const ZSeries& a) const;  // multiply by a(z), row by row

    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    BivariateSeries operator-() const;
    BivariateSeries scaled(const Coefficient& k) const;

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
        return a.mode_ == b.mode_ && a.jmax_ == b.jmax_ && a.nmax_ == b.nmax_ && a.c_ == b.c_;
    }

  private:
    std::size_t idx(int j, int n) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(nmax_ + 1) +
               static_cast<std::size_t>(n);
    }
    Mode mode_;
    int jmax_, nmax_;
    std::vector<Coefficient> c_;
};

}  // namespace heatsum
