#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heatsum/series.hpp"

namespace heatsum {

// Expression grammar (rational functions in t and/or z):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-') factor | atom ('^' ('-'? digits))?
//   atom   := number | 't' | 'z' | '(' expr ')'
//   number := digits ('.' digits)?            e.g. 2, 3/2 (via '/'), 0.25
// Expansion is exact: division is the linear recurrence from q*u = p and
// requires the divisor to be nonzero at the origin.

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

AstPtr parse_expression(const std::string& text);
bool uses_var(const Ast& ast, char var);

// Exact truncated expansions (divided-coefficient output).
BivariateSeries expand_bivariate(const Ast& ast, int jmax, int nmax);
ZSeries expand_z(const Ast& ast, int order);
TSeries expand_t(const Ast& ast, int order);

ZSeries parse_rational_z(const std::string& text, int order);
TSeries parse_rational_t(const std::string& text, int order);
BivariateSeries parse_bivariate(const std::string& text, int jmax, int nmax);

// Canonical p/q form of a univariate expression (no gcd reduction; trailing
// zeros trimmed).  nullopt when the expression involves the other variable.
struct RationalFunctionForm {
    std::vector<Rational> num, den;
};
std::optional<RationalFunctionForm> rational_form(const Ast& ast, char var);

// Smallest modulus among the denominator roots; +infinity for a constant
// denominator.  Used for the default Nagumo radius.
double nearest_denominator_root(const RationalFunctionForm& rf);

}  // namespace heatsum
