#include "heatsum/parse.hpp"

#include <Eigen/Dense>

#include <cctype>
#include <limits>

namespace heatsum {

struct Ast {
    enum Kind { number, var_t, var_z, add, sub, mul, div, neg, pow } kind;
    Rational value;          // number
    long exponent = 0;       // pow
    AstPtr lhs, rhs;
    std::size_t pos = 0;     // source offset for error reporting
};

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    AstPtr run() {
        AstPtr e = expr();
        skip_ws();
        if (p_ != s_.size()) throw ParseError("unexpected trailing input", p_);
        return e;
    }

  private:
    AstPtr expr() {
        AstPtr lhs = term();
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                auto n = std::make_shared<Ast>();
                n->kind = peek() == '+' ? Ast::add : Ast::sub;
                n->pos = p_++;
                n->lhs = lhs;
                n->rhs = term();
                lhs = n;
            } else {
                return lhs;
            }
        }
    }

    AstPtr term() {
        AstPtr lhs = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*' || peek() == '/') {
                auto n = std::make_shared<Ast>();
                n->kind = peek() == '*' ? Ast::mul : Ast::div;
                n->pos = p_++;
                n->lhs = lhs;
                n->rhs = factor();
                lhs = n;
            } else {
                return lhs;
            }
        }
    }

    AstPtr factor() {
        skip_ws();
        if (peek() == '+') {
            ++p_;
            return factor();
        }
        if (peek() == '-') {
            auto n = std::make_shared<Ast>();
            n->kind = Ast::neg;
            n->pos = p_++;
            n->lhs = factor();
            return n;
        }
        AstPtr base = atom();
        skip_ws();
        if (peek() == '^') {
            auto n = std::make_shared<Ast>();
            n->kind = Ast::pow;
            n->pos = p_++;
            n->lhs = base;
            n->exponent = integer_exponent();
            return n;
        }
        return base;
    }

    AstPtr atom() {
        skip_ws();
        char c = peek();
        std::size_t start = p_;
        if (c == '(') {
            ++p_;
            AstPtr e = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", p_);
            ++p_;
            return e;
        }
        if (c == 't' || c == 'z') {
            ++p_;
            auto n = std::make_shared<Ast>();
            n->kind = c == 't' ? Ast::var_t : Ast::var_z;
            n->pos = start;
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit;
            while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')
                lit += s_[p_++];
            auto n = std::make_shared<Ast>();
            n->kind = Ast::number;
            n->pos = start;
            try {
                n->value = rat_from_string(lit);
            } catch (const Error& e) {
                throw ParseError(e.what(), start);
            }
            return n;
        }
        throw ParseError(c ? std::string("unexpected character '") + c + "'"
                           : std::string("unexpected end of input"),
                         p_);
    }

    long integer_exponent() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++p_;
        }
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer exponent after '^'", p_);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[p_] - '0');
            if (v > 10000) throw ParseError("exponent too large", p_);
            ++p_;
        }
        return neg ? -v : v;
    }

    char peek() const { return p_ < s_.size() ? s_[p_] : '\0'; }
    void skip_ws() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }

    const std::string& s_;
    std::size_t p_ = 0;
};

// Working ring for expansion: raw Taylor coefficients on a fixed (J, N) grid.
struct RawBiv {
    int jmax, nmax;
    std::vector<Rational> c;  // (jmax+1) x (nmax+1) row-major

    RawBiv(int J, int N) : jmax(J), nmax(N), c((J + 1) * (N + 1)) {}
    Rational& at(int j, int n) { return c[j * (nmax + 1) + n]; }
    const Rational& at(int j, int n) const { return c[j * (nmax + 1) + n]; }

    static RawBiv constant(int J, int N, const Rational& v) {
        RawBiv r(J, N);
        r.at(0, 0) = v;
        return r;
    }
};

RawBiv rb_add(const RawBiv& a, const RawBiv& b, int sign) {
    RawBiv r(a.jmax, a.nmax);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (sign > 0)
            r.c[i] = a.c[i] + b.c[i];
        else
            r.c[i] = a.c[i] - b.c[i];
    }
    return r;
}

RawBiv rb_mul(const RawBiv& a, const RawBiv& b) {
    RawBiv r(a.jmax, a.nmax);
    for (int j = 0; j <= r.jmax; ++j)
        for (int n = 0; n <= r.nmax; ++n) {
            Rational acc = 0;
            for (int p = 0; p <= j; ++p)
                for (int q = 0; q <= n; ++q) acc += a.at(p, q) * b.at(j - p, n - q);
            r.at(j, n) = acc;
        }
    return r;
}

// q * u = p solved coefficientwise; this is the exact expansion recurrence.
RawBiv rb_div(const RawBiv& p, const RawBiv& q, std::size_t pos) {
    if (q.at(0, 0) == 0)
        throw ParseError("division by a series vanishing at the origin", pos);
    RawBiv u(p.jmax, p.nmax);
    for (int j = 0; j <= u.jmax; ++j)
        for (int n = 0; n <= u.nmax; ++n) {
            Rational acc = p.at(j, n);
            for (int k = 0; k <= j; ++k)
                for (int m = 0; m <= n; ++m) {
                    if (k == 0 && m == 0) continue;
                    acc -= q.at(k, m) * u.at(j - k, n - m);
                }
            u.at(j, n) = acc / q.at(0, 0);
        }
    return u;
}

RawBiv rb_eval(const Ast& a, int J, int N) {
    switch (a.kind) {
        case Ast::number:
            return RawBiv::constant(J, N, a.value);
        case Ast::var_t: {
            RawBiv r(J, N);
            if (J >= 1) r.at(1, 0) = 1;
            return r;
        }
        case Ast::var_z: {
            RawBiv r(J, N);
            if (N >= 1) r.at(0, 1) = 1;
            return r;
        }
        case Ast::add:
            return rb_add(rb_eval(*a.lhs, J, N), rb_eval(*a.rhs, J, N), +1);
        case Ast::sub:
            return rb_add(rb_eval(*a.lhs, J, N), rb_eval(*a.rhs, J, N), -1);
        case Ast::mul:
            return rb_mul(rb_eval(*a.lhs, J, N), rb_eval(*a.rhs, J, N));
        case Ast::div:
            return rb_div(rb_eval(*a.lhs, J, N), rb_eval(*a.rhs, J, N), a.pos);
        case Ast::neg: {
            RawBiv r = rb_eval(*a.lhs, J, N);
            for (auto& v : r.c) v = -v;
            return r;
        }
        case Ast::pow: {
            RawBiv base = rb_eval(*a.lhs, J, N);
            long e = a.exponent;
            if (e < 0) {
                base = rb_div(RawBiv::constant(J, N, 1), base, a.pos);
                e = -e;
            }
            RawBiv acc = RawBiv::constant(J, N, 1);
            while (e) {
                if (e & 1) acc = rb_mul(acc, base);
                base = rb_mul(base, base);
                e >>= 1;
            }
            return acc;
        }
    }
    throw Error("unreachable ast kind");
}

// Rational-function semantic domain, for locating denominator roots.
struct NotUnivariate {};

using Poly = std::vector<Rational>;  // ascending powers

Poly poly_trim(Poly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}
Poly poly_add(const Poly& a, const Poly& b, int sign) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign > 0 ? b[i] : Rational(-b[i]);
    return poly_trim(r);
}
Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(r);
}
bool poly_is_zero(const Poly& p) {
    for (const auto& v : p)
        if (v != 0) return false;
    return true;
}

struct RatFunc {
    Poly num, den;
};

RatFunc rf_eval(const Ast& a, char var) {
    switch (a.kind) {
        case Ast::number:
            return {{a.value}, {Rational(1)}};
        case Ast::var_t:
            if (var != 't') throw NotUnivariate{};
            return {{Rational(0), Rational(1)}, {Rational(1)}};
        case Ast::var_z:
            if (var != 'z') throw NotUnivariate{};
            return {{Rational(0), Rational(1)}, {Rational(1)}};
        case Ast::add: {
            RatFunc l = rf_eval(*a.lhs, var), r = rf_eval(*a.rhs, var);
            return {poly_add(poly_mul(l.num, r.den), poly_mul(r.num, l.den), +1),
                    poly_mul(l.den, r.den)};
        }
        case Ast::sub: {
            RatFunc l = rf_eval(*a.lhs, var), r = rf_eval(*a.rhs, var);
            return {poly_add(poly_mul(l.num, r.den), poly_mul(r.num, l.den), -1),
                    poly_mul(l.den, r.den)};
        }
        case Ast::mul: {
            RatFunc l = rf_eval(*a.lhs, var), r = rf_eval(*a.rhs, var);
            return {poly_mul(l.num, r.num), poly_mul(l.den, r.den)};
        }
        case Ast::div: {
            RatFunc l = rf_eval(*a.lhs, var), r = rf_eval(*a.rhs, var);
            if (poly_is_zero(r.num)) throw ParseError("division by zero", a.pos);
            return {poly_mul(l.num, r.den), poly_mul(l.den, r.num)};
        }
        case Ast::neg: {
            RatFunc l = rf_eval(*a.lhs, var);
            for (auto& v : l.num) v = -v;
            return l;
        }
        case Ast::pow: {
            RatFunc base = rf_eval(*a.lhs, var);
            long e = a.exponent;
            if (e < 0) {
                if (poly_is_zero(base.num)) throw ParseError("division by zero", a.pos);
                std::swap(base.num, base.den);
                e = -e;
            }
            RatFunc acc{{Rational(1)}, {Rational(1)}};
            for (long i = 0; i < e; ++i)
                acc = {poly_mul(acc.num, base.num), poly_mul(acc.den, base.den)};
            return acc;
        }
    }
    throw Error("unreachable ast kind");
}

}  // namespace

AstPtr parse_expression(const std::string& text) { return Parser(text).run(); }

bool uses_var(const Ast& ast, char var) {
    switch (ast.kind) {
        case Ast::number:
            return false;
        case Ast::var_t:
            return var == 't';
        case Ast::var_z:
            return var == 'z';
        case Ast::neg:
        case Ast::pow:
            return uses_var(*ast.lhs, var);
        default:
            return uses_var(*ast.lhs, var) || uses_var(*ast.rhs, var);
    }
}

BivariateSeries expand_bivariate(const Ast& ast, int jmax, int nmax) {
    RawBiv raw = rb_eval(ast, jmax, nmax);
    BivariateSeries s(Mode::exact, jmax, nmax);
    for (int j = 0; j <= jmax; ++j)
        for (int n = 0; n <= nmax; ++n)
            s.at(j, n) = Coefficient::exact(raw.at(j, n) *
                                            rat_factorial(static_cast<unsigned long>(j)) *
                                            rat_factorial(static_cast<unsigned long>(n)));
    return s;
}

ZSeries expand_z(const Ast& ast, int order) {
    if (uses_var(ast, 't')) throw ParseError("expression must not involve t", 0);
    BivariateSeries b = expand_bivariate(ast, 0, order);
    return b.t_row(0);
}

TSeries expand_t(const Ast& ast, int order) {
    if (uses_var(ast, 'z')) throw ParseError("expression must not involve z", 0);
    BivariateSeries b = expand_bivariate(ast, order, 0);
    return b.z_col(0);
}

ZSeries parse_rational_z(const std::string& text, int order) {
    return expand_z(*parse_expression(text), order);
}

TSeries parse_rational_t(const std::string& text, int order) {
    return expand_t(*parse_expression(text), order);
}

BivariateSeries parse_bivariate(const std::string& text, int jmax, int nmax) {
    return expand_bivariate(*parse_expression(text), jmax, nmax);
}

std::optional<RationalFunctionForm> rational_form(const Ast& ast, char var) {
    try {
        RatFunc rf = rf_eval(ast, var);
        return RationalFunctionForm{std::move(rf.num), std::move(rf.den)};
    } catch (const NotUnivariate&) {
        return std::nullopt;
    }
}

double nearest_denominator_root(const RationalFunctionForm& rf) {
    Poly den = poly_trim(rf.den);
    int deg = static_cast<int>(den.size()) - 1;
    if (deg <= 0) return std::numeric_limits<double>::infinity();
    // companion-matrix roots of the monic denominator
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    double lead = rat_to_double(den[deg]);
    for (int i = 0; i < deg; ++i) {
        comp(i, deg - 1) = -rat_to_double(den[i]) / lead;
        if (i + 1 < deg) comp(i + 1, i) = 1.0;
    }
    Eigen::VectorXcd roots = comp.eigenvalues();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < roots.size(); ++i) best = std::min(best, std::abs(roots[i]));
    return best;
}

}  // namespace heatsum
