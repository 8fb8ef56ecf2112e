#ifndef ORBITALE_CLI_PARSE_HPP_
#define ORBITALE_CLI_PARSE_HPP_

#include "orbitale/algpoint/algpoint.hpp"
#include "orbitale/funcfield/funcfield.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orbitale {

// Grammar, loosest binding first:
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' exponent)?        exponent := INT ('^' exponent)?
//   atom    := INT | 't' | 'x' | '(' sum ')'
// Exponents are nonnegative integer literals and associate to the right.
// Integer literals are reduced mod p without complaint.
struct Expr {
    enum class Kind { Int, T, X, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind = Kind::Int;
    std::string literal;        // Int: the decimal digits
    std::uint64_t exponent = 0;  // Pow
    std::vector<Expr> args;
    std::size_t offset = 0;      // byte offset of the token that made the node
};

/// Throws ParseError with the byte offset of the first bad token.
Expr parse_expr(std::string_view src);

/// Fully parenthesized rendering, for debugging and tests.
std::string to_string(const Expr& e);

/// An element of F_p(t); `x` is rejected.
RatFunc eval_ratfunc(const Expr& e, std::uint32_t p);
/// A polynomial in x over F_p(t); division only by x-free expressions.
RatPoly eval_ratpoly(const Expr& e, std::uint32_t p);

RatFunc parse_ratfunc(std::string_view src, std::uint32_t p);
RatPoly parse_ratpoly(std::string_view src, std::uint32_t p);

/// "inf" or the point at infinity, else an element of F_p(t).
ProjectivePoint parse_point(std::string_view src, std::uint32_t p);

/// A polynomial over F_p written in x or in t (not both). `var` receives
/// the variable used ("x" when neither appears).
FpPoly parse_fp_poly(std::string_view src, std::uint32_t p, std::string* var = nullptr);

/// "inf" / "infinity", or an irreducible polynomial in t (made monic).
Place parse_place(std::string_view src, std::uint32_t p);
/// Comma-separated places; "" and "{}" give the empty list. Braces are
/// optional.
std::vector<Place> parse_places(std::string_view src, std::uint32_t p);

/// "3", "-1/2".
Rational parse_rational(std::string_view src);

}  // namespace orbitale

#endif  // ORBITALE_CLI_PARSE_HPP_
