#ifndef ORBITALE_ALGPOINT_ALGPOINT_HPP_
#define ORBITALE_ALGPOINT_ALGPOINT_HPP_

#include "orbitale/common.hpp"
#include "orbitale/ffpoly/poly.hpp"
#include "orbitale/funcfield/funcfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbitale {

/// Polynomial in x over F_p(t).
using RatPoly = Poly<RatFunc>;

RatPoly ratpoly_x(std::uint32_t p);
/// x^m - a.
RatPoly binomial(std::int64_t m, const RatFunc& a);
/// "x^2+(2*t)" style rendering with RatFunc coefficients in parentheses.
std::string to_string(const RatPoly& f);

/// Point of the algebraic closure of F_p(t), given by its monic irreducible
/// separable minimal polynomial.
class AlgebraicPoint {
public:
    /// Normalizes to monic and certifies irreducibility: degree 1, the
    /// x^m - a criterion, or an irreducible specialization t = c over F_p.
    /// Throws PreconditionError when none of these applies.
    static AlgebraicPoint from_minpoly(const RatPoly& f);
    /// The K-rational point beta (minpoly x - beta).
    static AlgebraicPoint rational(const RatFunc& beta);
    /// Skips certification; for factors whose irreducibility is proven by
    /// construction.
    static AlgebraicPoint from_certified(RatPoly monic_irreducible);

    const RatPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    std::uint32_t characteristic() const { return minpoly_.lead().characteristic(); }
    std::string to_string() const { return orbitale::to_string(minpoly_); }
    friend bool operator==(const AlgebraicPoint&, const AlgebraicPoint&) = default;

private:
    explicit AlgebraicPoint(RatPoly f) : minpoly_(std::move(f)) {}
    RatPoly minpoly_;
};

struct NewtonSegment {
    Rational slope;
    std::int64_t length;
    friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower convex hull of (i, v(a_i)). Roots at x = 0 are split off first and
/// counted separately; a segment of slope s and length l stands for l roots
/// of valuation -s.
struct NewtonPolygon {
    std::vector<NewtonSegment> segments;
    std::int64_t zero_root_count = 0;

    /// Valuations of the nonzero roots with multiplicity, ascending.
    std::vector<Rational> root_valuations() const;
    std::int64_t total_length() const;
};

NewtonPolygon newton_polygon(const RatPoly& f, const Place& v);

/// Lower hull of the given points (x strictly increasing).
std::vector<NewtonSegment> lower_hull(const std::vector<std::pair<std::int64_t, Rational>>& points);

/// Sum over the roots r of f of log|alpha - r|_v, i.e. log|f(alpha)/lc(f)|_v.
LogAbs conj_log_sum(const RatPoly& f, const RatFunc& alpha, const Place& v);

/// The multiset {log|alpha - r|_v : f(r) = 0}, ascending, from the Newton
/// polygon of f(x + alpha).
std::vector<LogAbs> conj_distance_multiset(const RatPoly& f, const RatFunc& alpha, const Place& v);

/// Absolute height: (1/deg) * sum over places and roots of max(0, log|r|_v).
Rational height_algebraic(const AlgebraicPoint& gamma);

/// Places where some coefficient of f has nonzero valuation, plus infinity,
/// in canonical order.
std::vector<Place> coefficient_places(const RatPoly& f);

/// An l-th root of a in F_p(t), if any. The constant part is the smallest
/// residue c with c^l equal to the required constant.
std::optional<RatFunc> lth_power_test(const RatFunc& a, std::int64_t l);

/// Capelli's criterion for x^m - a. Throws WildCaseError when p | m.
bool is_irreducible_xm_minus_a(std::int64_t m, const RatFunc& a);

/// Monic irreducible factors of x^m - a over F_p(t) (p does not divide m,
/// a != 0), each certified by construction, in a deterministic order.
std::vector<AlgebraicPoint> factor_binomial(std::int64_t m, const RatFunc& a);

}  // namespace orbitale

#endif  // ORBITALE_ALGPOINT_ALGPOINT_HPP_
