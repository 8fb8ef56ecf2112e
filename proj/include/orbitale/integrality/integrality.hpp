#ifndef ORBITALE_INTEGRALITY_INTEGRALITY_HPP_
#define ORBITALE_INTEGRALITY_INTEGRALITY_HPP_

#include "orbitale/algpoint/algpoint.hpp"
#include "orbitale/funcfield/funcfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbitale {

/// Finite set of places in canonical order, without repeats.
class PlaceSet {
public:
    PlaceSet() = default;
    explicit PlaceSet(std::vector<Place> places, std::optional<std::string> label = std::nullopt);

    const std::vector<Place>& places() const { return places_; }
    const std::optional<std::string>& label() const { return label_; }
    bool contains(const Place& v) const;
    bool empty() const { return places_.empty(); }
    std::size_t size() const { return places_.size(); }
    PlaceSet united(const PlaceSet& other) const;
    /// "{inf, t, t^2+1}"
    std::string to_string() const;

private:
    std::vector<Place> places_;
    std::optional<std::string> label_;
};

/// Places where |alpha|_v > 1: factors of the denominator, plus infinity
/// when deg num > deg den.
PlaceSet T_set(const RatFunc& alpha);

struct IntegralityVerdict {
    bool integral = true;
    std::optional<Place> witness;  // first failing place in canonical order
};

/// The condition at one place: |beta - alpha|_v >= 1 if |alpha|_v <= 1,
/// and |beta|_v <= 1 if |alpha|_v > 1. The point at infinity counts as
/// |inf|_v > 1 at every place.
bool integral_at(const ProjectivePoint& beta, const ProjectivePoint& alpha, const Place& v);

/// The only places where integral_at can fail when beta != alpha:
/// infinity and the supports of alpha, beta and beta - alpha.
std::vector<Place> relevant_places(const ProjectivePoint& beta, const ProjectivePoint& alpha);

/// beta is S-integral relative to alpha.
IntegralityVerdict is_S_integral(const ProjectivePoint& beta, const ProjectivePoint& alpha, const PlaceSet& S);

/// The condition at one place for every conjugate of gamma: distances from
/// alpha are >= 1 when |alpha|_v <= 1, and the conjugates are v-integral
/// otherwise.
bool integral_at_algebraic(const AlgebraicPoint& gamma, const RatFunc& alpha, const Place& v);

/// Infinity, the places of the minimal polynomial's coefficients, and the
/// supports of alpha and f(alpha).
std::vector<Place> relevant_places_algebraic(const AlgebraicPoint& gamma, const RatFunc& alpha);

/// gamma (all conjugates) is S-integral relative to alpha. Throws
/// PreconditionError when alpha is a root of the minimal polynomial.
IntegralityVerdict is_S_integral_algebraic(const AlgebraicPoint& gamma, const RatFunc& alpha, const PlaceSet& S);

/// is_S_integral(beta, alpha, S) == is_S_integral(alpha, beta, S); throws
/// std::logic_error if the two verdicts differ, else returns the verdict.
bool symmetry_check(const ProjectivePoint& alpha, const ProjectivePoint& beta, const PlaceSet& S);

}  // namespace orbitale

#endif  // ORBITALE_INTEGRALITY_INTEGRALITY_HPP_
