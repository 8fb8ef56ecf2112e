#include "orbitale/cli/parse.hpp"

#include "orbitale/ffpoly/factor.hpp"

#include <cctype>
#include <limits>

namespace orbitale {

namespace {

constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 20;
// x^e materializes e+1 coefficients.
constexpr std::uint64_t kMaxPolyExponent = std::uint64_t{1} << 16;

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Expr parse() {
        Expr e = sum();
        skip();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    Expr node(Expr::Kind k, std::size_t off, std::vector<Expr> args) {
        Expr e;
        e.kind = k;
        e.offset = off;
        e.args = std::move(args);
        return e;
    }

    Expr sum() {
        Expr lhs = product();
        while (peek('+') || peek('-')) {
            const std::size_t off = pos_;
            const auto k = s_[pos_++] == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
            lhs = node(k, off, {std::move(lhs), product()});
        }
        return lhs;
    }

    Expr product() {
        Expr lhs = unary();
        while (peek('*') || peek('/')) {
            const std::size_t off = pos_;
            const auto k = s_[pos_++] == '*' ? Expr::Kind::Mul : Expr::Kind::Div;
            lhs = node(k, off, {std::move(lhs), unary()});
        }
        return lhs;
    }

    Expr unary() {
        if (peek('-')) {
            const std::size_t off = pos_++;
            return node(Expr::Kind::Neg, off, {unary()});
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        if (!peek('^')) return base;
        const std::size_t off = pos_++;
        Expr e = node(Expr::Kind::Pow, off, {std::move(base)});
        e.exponent = exponent();
        return e;
    }

    std::uint64_t exponent() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("exponent must be a nonnegative integer");
        const std::size_t start = pos_;
        std::uint64_t e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
            if (e > kMaxExponent) {
                pos_ = start;
                fail("exponent too large");
            }
        }
        if (peek('^')) {
            const std::size_t at = pos_++;
            const std::uint64_t rhs = exponent();
            std::uint64_t r = 1;
            for (std::uint64_t i = 0; i < rhs; ++i) {
                r *= e;
                if (r > kMaxExponent) {
                    pos_ = at;
                    fail("exponent too large");
                }
            }
            e = rhs == 0 ? 1 : r;
        }
        return e;
    }

    Expr atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const std::size_t off = pos_;
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr e = node(Expr::Kind::Int, off, {});
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) e.literal += s_[pos_++];
            return e;
        }
        if (c == 't' || c == 'x') {
            ++pos_;
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                pos_ = off;
                fail("unknown identifier");
            }
            return node(c == 't' ? Expr::Kind::T : Expr::Kind::X, off, {});
        }
        if (c == '(') {
            ++pos_;
            Expr inner = sum();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::uint32_t literal_mod(const std::string& digits, std::uint32_t p) {
    std::uint64_t r = 0;
    for (char ch : digits) r = (r * 10 + static_cast<std::uint64_t>(ch - '0')) % p;
    return static_cast<std::uint32_t>(r);
}

bool mentions_x(const Expr& e) {
    if (e.kind == Expr::Kind::X) return true;
    for (const auto& a : e.args)
        if (mentions_x(a)) return true;
    return false;
}

bool mentions_t(const Expr& e) {
    if (e.kind == Expr::Kind::T) return true;
    for (const auto& a : e.args)
        if (mentions_t(a)) return true;
    return false;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string to_string(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Int: return e.literal;
        case Expr::Kind::T: return "t";
        case Expr::Kind::X: return "x";
        case Expr::Kind::Neg: return "(-" + to_string(e.args[0]) + ")";
        case Expr::Kind::Pow: return "(" + to_string(e.args[0]) + "^" + std::to_string(e.exponent) + ")";
        default: break;
    }
    const char* op = e.kind == Expr::Kind::Add ? "+" : e.kind == Expr::Kind::Sub ? "-" : e.kind == Expr::Kind::Mul ? "*" : "/";
    return "(" + to_string(e.args[0]) + op + to_string(e.args[1]) + ")";
}

RatFunc eval_ratfunc(const Expr& e, std::uint32_t p) {
    switch (e.kind) {
        case Expr::Kind::Int: return RatFunc::constant(p, literal_mod(e.literal, p));
        case Expr::Kind::T: return RatFunc::t(p);
        case Expr::Kind::X: throw ParseError("x is not allowed in an element of F_p(t)", e.offset);
        case Expr::Kind::Neg: return -eval_ratfunc(e.args[0], p);
        case Expr::Kind::Add: return eval_ratfunc(e.args[0], p) + eval_ratfunc(e.args[1], p);
        case Expr::Kind::Sub: return eval_ratfunc(e.args[0], p) - eval_ratfunc(e.args[1], p);
        case Expr::Kind::Mul: return eval_ratfunc(e.args[0], p) * eval_ratfunc(e.args[1], p);
        case Expr::Kind::Div: {
            RatFunc den = eval_ratfunc(e.args[1], p);
            if (den.is_zero()) throw ParseError("division by zero", e.offset);
            return eval_ratfunc(e.args[0], p) / den;
        }
        case Expr::Kind::Pow:
            if (e.exponent > kMaxPolyExponent) throw ParseError("exponent too large", e.offset);
            return eval_ratfunc(e.args[0], p).pow(static_cast<std::int64_t>(e.exponent));
    }
    throw ParseError("bad expression", e.offset);
}

RatPoly eval_ratpoly(const Expr& e, std::uint32_t p) {
    auto c = [](const RatFunc& a) { return RatPoly::constant(a); };
    switch (e.kind) {
        case Expr::Kind::Int:
        case Expr::Kind::T: return c(eval_ratfunc(e, p));
        case Expr::Kind::X: return ratpoly_x(p);
        case Expr::Kind::Neg: return eval_ratpoly(e.args[0], p).scaled(RatFunc::constant(p, p - 1));
        case Expr::Kind::Add: return eval_ratpoly(e.args[0], p) + eval_ratpoly(e.args[1], p);
        case Expr::Kind::Sub: return eval_ratpoly(e.args[0], p) - eval_ratpoly(e.args[1], p);
        case Expr::Kind::Mul: return eval_ratpoly(e.args[0], p) * eval_ratpoly(e.args[1], p);
        case Expr::Kind::Div: {
            if (mentions_x(e.args[1])) throw ParseError("division by a polynomial in x", e.offset);
            RatFunc den = eval_ratfunc(e.args[1], p);
            if (den.is_zero()) throw ParseError("division by zero", e.offset);
            return eval_ratpoly(e.args[0], p).scaled(den.inverse());
        }
        case Expr::Kind::Pow: {
            if (e.exponent > kMaxPolyExponent)
                throw ParseError("exponent too large for a polynomial in x", e.offset);
            return pow(eval_ratpoly(e.args[0], p), e.exponent);
        }
    }
    throw ParseError("bad expression", e.offset);
}

RatFunc parse_ratfunc(std::string_view src, std::uint32_t p) {
    require_field_prime(p);
    return eval_ratfunc(parse_expr(src), p);
}

RatPoly parse_ratpoly(std::string_view src, std::uint32_t p) {
    require_field_prime(p);
    return eval_ratpoly(parse_expr(src), p);
}

ProjectivePoint parse_point(std::string_view src, std::uint32_t p) {
    const std::string_view s = trim(src);
    if (s == "inf" || s == "infinity") {
        require_field_prime(p);
        return ProjectivePoint::infinity(p);
    }
    return parse_ratfunc(src, p);
}

FpPoly parse_fp_poly(std::string_view src, std::uint32_t p, std::string* var) {
    require_field_prime(p);
    Expr e = parse_expr(src);
    const bool has_x = mentions_x(e), has_t = mentions_t(e);
    if (has_x && has_t) throw ParseError("a polynomial over F_p uses one variable, x or t", 0);
    if (var) *var = has_t ? "t" : "x";
    if (has_t) {
        RatFunc a = eval_ratfunc(e, p);
        if (!a.is_polynomial()) throw ParseError("not a polynomial", 0);
        return a.num();
    }
    RatPoly f = eval_ratpoly(e, p);
    std::vector<std::uint32_t> c;
    for (const auto& a : f.coeffs()) c.push_back(a.is_zero() ? 0 : a.num().coeff(0));
    return FpPoly(p, std::move(c));
}

Place parse_place(std::string_view src, std::uint32_t p) {
    const std::string_view s = trim(src);
    if (s == "inf" || s == "infinity") {
        require_field_prime(p);
        return Place::infinity(p);
    }
    RatFunc a = parse_ratfunc(src, p);
    if (!a.is_polynomial() || a.is_constant())
        throw ParseError("a place is 'inf' or a nonconstant polynomial in t", 0);
    FpPoly f = a.num().monic();
    if (!is_irreducible(f)) throw ParseError("place polynomial " + f.to_string("t") + " is reducible", 0);
    return Place::finite_unchecked(f);
}

std::vector<Place> parse_places(std::string_view src, std::uint32_t p) {
    std::string_view s = trim(src);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw ParseError("expected '}'", src.size());
        s = trim(s.substr(1, s.size() - 2));
    }
    std::vector<Place> out;
    if (s.empty()) return out;
    const std::size_t base = static_cast<std::size_t>(s.data() - src.data());
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            try {
                out.push_back(parse_place(s.substr(start, i - start), p));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), base + start + e.offset);
            }
            start = i + 1;
        }
    }
    return out;
}

Rational parse_rational(std::string_view src) {
    const std::string_view s = trim(src);
    auto parse_int = [&](std::string_view part, std::size_t off) {
        std::size_t i = 0;
        bool neg = false;
        if (i < part.size() && (part[i] == '-' || part[i] == '+')) neg = part[i++] == '-';
        if (i == part.size()) throw ParseError("expected an integer", off + i);
        std::int64_t v = 0;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw ParseError("expected a digit", off + i);
            if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) throw ParseError("integer too large", off);
            v = v * 10 + (part[i] - '0');
        }
        return neg ? -v : v;
    };
    const std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s, 0));
    const std::int64_t den = parse_int(s.substr(slash + 1), slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash);
    return Rational(parse_int(s.substr(0, slash), 0), den);
}

}  // namespace orbitale
