#pragma once

#include <complex>
#include <string>
#include <variant>

#include "heatsum/rational.hpp"

namespace heatsum {

using Cplx = std::complex<double>;

enum class Mode { exact, floating };

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

// Scalar of a series: an exact rational or a complex double, never mixed.
// Arithmetic between the two modes throws ModeError rather than promoting.
class Coefficient {
  public:
    Coefficient() : v_(Rational(0)) {}
    static Coefficient exact(Rational r) { return Coefficient(std::move(r)); }
    static Coefficient floating(Cplx z) { return Coefficient(z); }
    static Coefficient zero(Mode m) {
        return m == Mode::exact ? exact(Rational(0)) : floating(Cplx(0.0, 0.0));
    }
    static Coefficient integer(long v, Mode m) {
        return m == Mode::exact ? exact(Rational(v)) : floating(Cplx(double(v), 0.0));
    }

    Mode mode() const { return std::holds_alternative<Rational>(v_) ? Mode::exact : Mode::floating; }

    const Rational& rat() const {
        if (mode() != Mode::exact) throw ModeError("rat() on a float coefficient");
        return std::get<Rational>(v_);
    }
    Cplx cplx() const {
        if (mode() != Mode::floating) throw ModeError("cplx() on an exact coefficient");
        return std::get<Cplx>(v_);
    }
    // Lossy conversion, allowed from either mode.
    Cplx to_cplx() const {
        return mode() == Mode::exact ? Cplx(rat_to_double(std::get<Rational>(v_)), 0.0)
                                     : std::get<Cplx>(v_);
    }
    Coefficient to_float() const { return floating(to_cplx()); }

    bool is_zero() const {
        return mode() == Mode::exact ? std::get<Rational>(v_) == 0
                                     : std::get<Cplx>(v_) == Cplx(0.0, 0.0);
    }

    Coefficient operator-() const {
        return mode() == Mode::exact ? exact(-std::get<Rational>(v_))
                                     : floating(-std::get<Cplx>(v_));
    }

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
        check_same(a, b, "+");
        if (a.mode() == Mode::exact) return exact(a.rat() + b.rat());
        return floating(a.cplx() + b.cplx());
    }
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b) {
        check_same(a, b, "-");
        if (a.mode() == Mode::exact) return exact(a.rat() - b.rat());
        return floating(a.cplx() - b.cplx());
    }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
        check_same(a, b, "*");
        if (a.mode() == Mode::exact) return exact(a.rat() * b.rat());
        return floating(a.cplx() * b.cplx());
    }
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b) {
        check_same(a, b, "/");
        if (a.mode() == Mode::exact) {
            if (b.rat() == 0) throw Error("exact division by zero");
            return exact(a.rat() / b.rat());
        }
        return floating(a.cplx() / b.cplx());
    }
    Coefficient& operator+=(const Coefficient& b) { return *this = *this + b; }
    Coefficient& operator-=(const Coefficient& b) { return *this = *this - b; }
    Coefficient& operator*=(const Coefficient& b) { return *this = *this * b; }

    // Exact equality; float compares bitwise by component.
    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        if (a.mode() != b.mode()) return false;
        if (a.mode() == Mode::exact) return a.rat() == b.rat();
        return a.cplx() == b.cplx();
    }

    std::string str() const;
    static Coefficient parse(const std::string& text, Mode m);

  private:
    explicit Coefficient(Rational r) : v_(std::move(r)) {}
    explicit Coefficient(Cplx z) : v_(z) {}
    static void check_same(const Coefficient& a, const Coefficient& b, const char* op) {
        if (a.mode() != b.mode())
            throw ModeError(std::string("coefficient mode mismatch in '") + op + "'");
    }
    std::variant<Rational, Cplx> v_;
};

}  // namespace heatsum
