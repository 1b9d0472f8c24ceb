#include "heatsum/series.hpp"

#include <algorithm>
#include <cmath>

namespace heatsum {

Coefficient factorial_coeff(int n, Mode m) {
    if (m == Mode::exact) return Coefficient::exact(rat_factorial(static_cast<unsigned long>(n)));
    double f = std::exp(std::lgamma(n + 1.0));
    return Coefficient::floating(Cplx(f, 0.0));
}

static void check_modes(Mode a, Mode b, const char* what) {
    if (a != b) throw ModeError(std::string("series mode mismatch in ") + what);
}

template <class Tag>
int Series1<Tag>::check_order(Mode m, int order) {
    if (order < 0) throw OrderError("series truncation order must be >= 0");
    if (m == Mode::floating && order > kMaxFloatOrder)
        throw OverflowError("float-mode truncation exceeds the safe bound " +
                            std::to_string(kMaxFloatOrder));
    return order;
}

template <class Tag>
Series1<Tag> Series1<Tag>::from_divided(Mode m, std::vector<Coefficient> coeffs) {
    Series1 s(m, static_cast<int>(coeffs.size()) - 1);
    for (const auto& c : coeffs) check_modes(m, c.mode(), "from_divided");
    s.c_ = std::move(coeffs);
    return s;
}

template <class Tag>
Series1<Tag> Series1<Tag>::from_raw(Mode m, std::vector<Coefficient> raw) {
    Series1 s(m, static_cast<int>(raw.size()) - 1);
    for (int n = 0; n <= s.order(); ++n) s.c_[n] = raw[n] * factorial_coeff(n, m);
    return s;
}

template <class Tag>
bool Series1<Tag>::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Coefficient& c) { return c.is_zero(); });
}

template <class Tag>
int Series1<Tag>::vanishing_order() const {
    for (int n = 0; n <= order(); ++n)
        if (!c_[n].is_zero()) return n;
    return order() + 1;
}

template <class Tag>
std::vector<Coefficient> Series1<Tag>::raw() const {
    std::vector<Coefficient> r(c_.size());
    for (int n = 0; n <= order(); ++n) r[n] = c_[n] / factorial_coeff(n, mode_);
    return r;
}

template <class Tag>
Series1<Tag> Series1<Tag>::truncated(int new_order) const {
    if (new_order > order()) throw OrderError("truncated() cannot extend a series");
    Series1 s(mode_, new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
    return s;
}

template <class Tag>
Series1<Tag> Series1<Tag>::to_float() const {
    Series1 s(Mode::floating, order());
    for (int n = 0; n <= order(); ++n) s.c_[n] = c_[n].to_float();
    return s;
}

template <class Tag>
Cplx Series1<Tag>::eval(Cplx x) const {
    auto r = raw();
    Cplx acc(0.0, 0.0);
    for (int n = order(); n >= 0; --n) acc = acc * x + r[n].to_cplx();
    return acc;
}

template <class Tag>
Series1<Tag> Series1<Tag>::derivative() const {
    Series1 s(mode_, std::max(order() - 1, 0));
    if (order() == 0) return s;
    for (int n = 0; n < order(); ++n) s.c_[n] = c_[n + 1];
    return s;
}

template <class Tag>
Series1<Tag> Series1<Tag>::antiderivative() const {
    Series1 s(mode_, order() + 1);
    for (int n = 0; n <= order(); ++n) s.c_[n + 1] = c_[n];
    return s;
}

template <class Tag>
Series1<Tag> Series1<Tag>::shift_up() const {
    // (x f)_n = n c_{n-1} in divided form
    Series1 s(mode_, order() + 1);
    for (int n = 1; n <= order() + 1; ++n)
        s.c_[n] = c_[n - 1] * Coefficient::integer(n, mode_);
    return s;
}

template <class Tag>
Series1<Tag> Series1<Tag>::shift_down() const {
    if (!c_[0].is_zero()) throw OrderError("shift_down: series does not vanish at 0");
    Series1 s(mode_, std::max(order() - 1, 0));
    for (int n = 0; n < order(); ++n)
        s.c_[n] = c_[n + 1] / Coefficient::integer(n + 1, mode_);
    return s;
}

template <class Tag>
Series1<Tag> Series1<Tag>::inverse(int out_order) const {
    auto r = raw();
    if (r[0].is_zero()) throw OrderError("series inverse: constant term vanishes");
    std::vector<Coefficient> inv(out_order + 1, Coefficient::zero(mode_));
    Coefficient one = Coefficient::integer(1, mode_);
    inv[0] = one / r[0];
    for (int n = 1; n <= out_order; ++n) {
        Coefficient s = Coefficient::zero(mode_);
        for (int k = 1; k <= std::min(n, order()); ++k) s += r[k] * inv[n - k];
        inv[n] = -s / r[0];
    }
    return from_raw(mode_, std::move(inv));
}

template <class Tag>
Series1<Tag> Series1<Tag>::combine(const Series1& a, const Series1& b, int sign) {
    check_modes(a.mode_, b.mode_, "add/sub");
    Series1 s(a.mode_, std::min(a.order(), b.order()));
    for (int n = 0; n <= s.order(); ++n)
        s.c_[n] = sign > 0 ? a.c_[n] + b.c_[n] : a.c_[n] - b.c_[n];
    return s;
}

template <class Tag>
Series1<Tag> Series1<Tag>::operator-() const {
    Series1 s(mode_, order());
    for (int n = 0; n <= order(); ++n) s.c_[n] = -c_[n];
    return s;
}

template <class Tag>
Series1<Tag> Series1<Tag>::scaled(const Coefficient& k) const {
    Series1 s(mode_, order());
    for (int n = 0; n <= order(); ++n) s.c_[n] = c_[n] * k;
    return s;
}

template class Series1<detail::TTag>;
template class Series1<detail::ZTag>;

BivariateSeries::BivariateSeries(Mode m, int jmax, int nmax)
    : mode_(m), jmax_(jmax), nmax_(nmax) {
    if (jmax < 0 || nmax < 0) throw OrderError("bivariate truncation must be >= 0");
    if (m == Mode::floating && (jmax > kMaxFloatOrder || nmax > kMaxFloatOrder))
        throw OverflowError("float-mode truncation exceeds the safe bound " +
                            std::to_string(kMaxFloatOrder));
    c_.assign(static_cast<std::size_t>(jmax + 1) * (nmax + 1), Coefficient::zero(m));
}

ZSeries BivariateSeries::t_row(int j) const {
    ZSeries row(mode_, nmax_);
    for (int n = 0; n <= nmax_; ++n) row.at(n) = (*this)(j, n);
    return row;
}

TSeries BivariateSeries::z_col(int n) const {
    TSeries col(mode_, jmax_);
    for (int j = 0; j <= jmax_; ++j) col.at(j) = (*this)(j, n);
    return col;
}

void BivariateSeries::set_t_row(int j, const ZSeries& row) {
    check_modes(mode_, row.mode(), "set_t_row");
    for (int n = 0; n <= std::min(nmax_, row.order()); ++n) at(j, n) = row[n];
}

bool BivariateSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Coefficient& c) { return c.is_zero(); });
}

int BivariateSeries::z_vanishing_order() const {
    for (int n = 0; n <= nmax_; ++n)
        for (int j = 0; j <= jmax_; ++j)
            if (!(*this)(j, n).is_zero()) return n;
    return nmax_ + 1;
}

BivariateSeries BivariateSeries::truncated(int new_jmax, int new_nmax) const {
    if (new_jmax > jmax_ || new_nmax > nmax_)
        throw OrderError("truncated() cannot extend a series");
    BivariateSeries s(mode_, new_jmax, new_nmax);
    for (int j = 0; j <= new_jmax; ++j)
        for (int n = 0; n <= new_nmax; ++n) s.at(j, n) = (*this)(j, n);
    return s;
}

BivariateSeries BivariateSeries::to_float() const {
    BivariateSeries s(Mode::floating, jmax_, nmax_);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i].to_float();
    return s;
}

double BivariateSeries::max_abs() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, std::abs(c.to_cplx()));
    return m;
}

BivariateSeries BivariateSeries::dt() const {
    BivariateSeries s(mode_, std::max(jmax_ - 1, 0), nmax_);
    if (jmax_ == 0) return s;
    for (int j = 0; j < jmax_; ++j)
        for (int n = 0; n <= nmax_; ++n) s.at(j, n) = (*this)(j + 1, n);
    return s;
}

BivariateSeries BivariateSeries::dt_inv() const {
    BivariateSeries s(mode_, jmax_ + 1, nmax_);
    for (int j = 0; j <= jmax_; ++j)
        for (int n = 0; n <= nmax_; ++n) s.at(j + 1, n) = (*this)(j, n);
    return s;
}

BivariateSeries BivariateSeries::dz() const {
    BivariateSeries s(mode_, jmax_, std::max(nmax_ - 1, 0));
    if (nmax_ == 0) return s;
    for (int j = 0; j <= jmax_; ++j)
        for (int n = 0; n < nmax_; ++n) s.at(j, n) = (*this)(j, n + 1);
    return s;
}

BivariateSeries BivariateSeries::dz_inv() const {
    BivariateSeries s(mode_, jmax_, nmax_ + 1);
    for (int j = 0; j <= jmax_; ++j)
        for (int n = 0; n <= nmax_; ++n) s.at(j, n + 1) = (*this)(j, n);
    return s;
}

BivariateSeries BivariateSeries::shift_down_z() const {
    for (int j = 0; j <= jmax_; ++j)
        if (!(*this)(j, 0).is_zero())
            throw OrderError("shift_down_z: n = 0 column does not vanish");
    BivariateSeries s(mode_, jmax_, std::max(nmax_ - 1, 0));
    if (nmax_ == 0) return s;
    for (int j = 0; j <= jmax_; ++j)
        for (int n = 0; n < nmax_; ++n)
            s.at(j, n) = (*this)(j, n + 1) / Coefficient::integer(n + 1, mode_);
    return s;
}

BivariateSeries BivariateSeries::mul_z(const ZSeries& a) const {
    check_modes(mode_, a.mode(), "mul_z");
    int out_n = std::min(nmax_, a.order());
    BivariateSeries s(mode_, jmax_, out_n);
    for (int j = 0; j <= jmax_; ++j) {
        ZSeries prod = t_row(j) * a;
        for (int n = 0; n <= out_n; ++n) s.at(j, n) = prod[n];
    }
    return s;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    check_modes(a.mode_, b.mode_, "add");
    BivariateSeries s(a.mode_, std::min(a.jmax_, b.jmax_), std::min(a.nmax_, b.nmax_));
    for (int j = 0; j <= s.jmax_; ++j)
        for (int n = 0; n <= s.nmax_; ++n) s.at(j, n) = a(j, n) + b(j, n);
    return s;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    check_modes(a.mode_, b.mode_, "sub");
    BivariateSeries s(a.mode_, std::min(a.jmax_, b.jmax_), std::min(a.nmax_, b.nmax_));
    for (int j = 0; j <= s.jmax_; ++j)
        for (int n = 0; n <= s.nmax_; ++n) s.at(j, n) = a(j, n) - b(j, n);
    return s;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    check_modes(a.mode_, b.mode_, "mul");
    int out_j = std::min(a.jmax_, b.jmax_), out_n = std::min(a.nmax_, b.nmax_);
    BivariateSeries s(a.mode_, out_j, out_n);
    // raw 2-D Cauchy product, converted back to divided form
    auto raw_of = [](const BivariateSeries& u) {
        std::vector<Coefficient> r(u.c_.size());
        for (int j = 0; j <= u.jmax_; ++j)
            for (int n = 0; n <= u.nmax_; ++n)
                r[u.idx(j, n)] = u(j, n) / (factorial_coeff(j, u.mode_) *
                                            factorial_coeff(n, u.mode_));
        return r;
    };
    auto ra = raw_of(a), rb = raw_of(b);
    for (int j = 0; j <= out_j; ++j)
        for (int n = 0; n <= out_n; ++n) {
            Coefficient acc = Coefficient::zero(a.mode_);
            for (int p = 0; p <= j; ++p)
                for (int q = 0; q <= n; ++q)
                    acc += ra[a.idx(p, q)] * rb[b.idx(j - p, n - q)];
            s.at(j, n) = acc * factorial_coeff(j, a.mode_) * factorial_coeff(n, a.mode_);
        }
    return s;
}

BivariateSeries BivariateSeries::operator-() const {
    BivariateSeries s(mode_, jmax_, nmax_);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = -c_[i];
    return s;
}

BivariateSeries BivariateSeries::scaled(const Coefficient& k) const {
    BivariateSeries s(mode_, jmax_, nmax_);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] * k;
    return s;
}

}  // namespace heatsum
