#pragma once

#include <powerstruct/integer.hpp>
#include <powerstruct/rational.hpp>
#include <powerstruct/sparse_poly.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace powerstruct {

/// Surrogate for a class in K0(Var)[L^{1/m}, L^{-1}]: a finite integer
/// combination of rational powers of the Lefschetz class L.
using MotivicClass = SparsePoly<Rational>;

/// Exponent pair (p, q) of a monomial u^p v^q.
struct HodgeExponent {
    Rational u;
    Rational v;

    friend HodgeExponent operator+(const HodgeExponent &a, const HodgeExponent &b) { return {a.u + b.u, a.v + b.v}; }
    friend bool operator==(const HodgeExponent &, const HodgeExponent &) = default;
    friend std::strong_ordering operator<=>(const HodgeExponent &a, const HodgeExponent &b)
    {
        if (auto c = a.u <=> b.u; c != 0) return c;
        return a.v <=> b.v;
    }
};

/// Hodge-Deligne polynomial: integer combination of u^p v^q, p, q rational.
using EPolynomial = SparsePoly<HodgeExponent>;

/// c * L^e
inline MotivicClass lefschetz(Rational e = 1, const Integer &c = 1) { return MotivicClass::monomial(e, c); }

/// c * u^p v^q
inline EPolynomial hodge_monomial(Rational p, Rational q, const Integer &c = 1)
{
    return EPolynomial::monomial(HodgeExponent{p, q}, c);
}

/// c * (uv)^e
inline EPolynomial uv_power(Rational e, const Integer &c = 1) { return hodge_monomial(e, e, c); }

/// Class of complex projective space P^n: 1 + L + ... + L^n.
MotivicClass projective_space(unsigned n);

/// Renders in the class-literal grammar, ascending exponents: "-L^{-1}+1+L^{1/2}+2*L^2".
std::string to_string(const MotivicClass &a);
/// Renders as e.g. "1+u*v+2*u^{1/2}*v^{1/2}".
std::string to_string(const EPolynomial &p);

/// Parses an integer-coefficient sum of powers of L.
///
/// Grammar (whitespace ignored):
///   class := term (('+'|'-') term)*   with an optional leading sign
///   term  := integer | [integer ['*']] 'L' ['^' exponent]
///   exponent := signed-integer | '{' rational '}' | '(' rational ')'
/// Examples: "0", "1+L", "2*L^2-L^{-1}+L^{1/2}", "3L^(2/3)".
/// Throws ParseError on malformed input.
MotivicClass parse_class(std::string_view text);

} // namespace powerstruct
