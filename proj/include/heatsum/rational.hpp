#pragma once

#include <gmpxx.h>

#include <string>

#include "heatsum/errors.hpp"

namespace heatsum {

// Arbitrary-precision rational scalar. Always kept in canonical form.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p/q" and decimal literals like "0.25" (expanded exactly).
Rational rat_from_string(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rational& r);

Rational rat_pow(const Rational& base, long exp);  // exp < 0 inverts; 0^neg throws

inline double rat_to_double(const Rational& r) { return r.get_d(); }

Rational rat_factorial(unsigned long n);
Rational rat_binomial(unsigned long n, unsigned long k);

}  // namespace heatsum
