#include "heatsum/rational.hpp"

#include <cctype>

namespace heatsum {

Rational rat_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error("empty rational literal");

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw Error("rational literal mixes '.' and '/': " + text);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        mpz_class num;
        if (num.set_str(digits, 10) != 0)
            throw Error("bad rational literal: " + text);
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + text);
    if (r.get_den() == 0) throw Error("zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rational& r) {
    return r.get_str();
}

Rational rat_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw Error("0 raised to a negative power");
        return rat_pow(Rational(1) / base, -exp);
    }
    Rational acc = 1, b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rational rat_factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational rat_binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace heatsum
