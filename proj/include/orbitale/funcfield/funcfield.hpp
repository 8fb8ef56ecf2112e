#ifndef ORBITALE_FUNCFIELD_FUNCFIELD_HPP_
#define ORBITALE_FUNCFIELD_FUNCFIELD_HPP_

#include "orbitale/common.hpp"
#include "orbitale/funcfield/place.hpp"
#include "orbitale/funcfield/ratfunc.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace orbitale {

/// log|x|_v in units of log(1/eps).
using LogAbs = Rational;

/// A point of P^1(F_p(t)): an element of F_p(t) or the point at infinity.
class ProjectivePoint {
public:
    ProjectivePoint(RatFunc a) : value_(std::move(a)) {}  // NOLINT: implicit by design of call sites
    static ProjectivePoint infinity(std::uint32_t p) { return ProjectivePoint(p); }

    bool is_infinity() const { return !value_.has_value(); }
    const RatFunc& value() const { return *value_; }
    std::uint32_t characteristic() const { return value_ ? value_->characteristic() : p_; }
    std::string to_string() const { return value_ ? value_->to_string() : "inf"; }
    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    explicit ProjectivePoint(std::uint32_t p) : p_(p) {}
    std::optional<RatFunc> value_;
    std::uint32_t p_ = 0;
};

/// v(alpha): multiplicity at a finite place, deg(den) - deg(num) at
/// infinity; +infinity (nullopt) for zero.
Valuation valuation(const RatFunc& alpha, const Place& v);
/// Valuation of a polynomial at a finite place or at infinity.
Valuation valuation(const FpPoly& f, const Place& v);

/// -deg(v) * v(alpha). Throws PreconditionError for alpha = 0.
LogAbs log_abs(const RatFunc& alpha, const Place& v);

struct PlaceValuation {
    Place place;
    std::int64_t valuation;
    friend bool operator==(const PlaceValuation&, const PlaceValuation&) = default;
};

/// Places where alpha has nonzero valuation, in canonical order.
std::vector<PlaceValuation> support(const RatFunc& alpha);

/// Sum over the support of deg(v) * v(alpha); zero for every alpha != 0.
Rational product_formula_check(const RatFunc& alpha);

/// h(alpha) = max(deg num, deg den); zero for 0 and the point at infinity.
Rational height(const ProjectivePoint& alpha);
/// h(alpha) as the place sum of max(0, log|alpha|_v).
Rational height_by_places(const RatFunc& alpha);

/// All alpha in F_p(t) with h(alpha) <= bound, each once, canonical order
/// (by height, then numerator, then denominator).
std::vector<RatFunc> bounded_height_enum(const Rational& bound, std::uint32_t p);

/// Finite places of degree <= max_degree in canonical order (infinity
/// excluded).
std::vector<Place> finite_places_up_to(std::uint32_t p, int max_degree);

}  // namespace orbitale

#endif  // ORBITALE_FUNCFIELD_FUNCFIELD_HPP_
