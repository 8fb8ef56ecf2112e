#ifndef ORBITALE_DYNAMICS_POWERING_HPP_
#define ORBITALE_DYNAMICS_POWERING_HPP_

#include "orbitale/algpoint/algpoint.hpp"
#include "orbitale/funcfield/funcfield.hpp"
#include "orbitale/funcfield/rational_map.hpp"

#include <optional>
#include <vector>

namespace orbitale {

/// Largest degree an orbit or fiber computation will materialize.
inline constexpr std::int64_t kMaxIterateDegree = std::int64_t{1} << 16;

/// phi(z) = z^d over F_p(t).
class PoweringMap {
public:
    /// Requires d >= 2 and gcd(d, p) = 1 (WildCaseError otherwise).
    PoweringMap(std::int64_t d, std::uint32_t p);
    /// Admits p | d, for the counterexample experiments.
    static PoweringMap allow_wild(std::int64_t d, std::uint32_t p);

    std::int64_t degree() const { return d_; }
    std::uint32_t characteristic() const { return p_; }
    bool is_tame() const { return d_ % p_ != 0; }

    RatFunc operator()(const RatFunc& a) const { return a.pow(d_); }
    ProjectivePoint operator()(const ProjectivePoint& a) const;
    /// phi^n(a) = a^(d^n).
    RatFunc iterate(const RatFunc& a, std::int64_t n) const;
    /// [x^d : y^d]
    RationalMapPair as_pair() const { return RationalMapPair::powering(static_cast<int>(d_), p_); }

private:
    PoweringMap(std::int64_t d, std::uint32_t p, bool wild_ok);
    std::int64_t d_;
    std::uint32_t p_;
};

struct ForwardOrbit {
    std::vector<RatFunc> points;          // a, phi(a), ... without repeats
    std::optional<std::size_t> cycle_start;  // index phi(points.back()) returns to
    bool height_capped = false;           // stopped at kMaxIterateDegree

    bool is_finite() const { return cycle_start.has_value(); }
    std::size_t cycle_length() const { return cycle_start ? points.size() - *cycle_start : 0; }
};

/// Iterates at most max_steps points, stopping at the first repetition.
ForwardOrbit forward_orbit(const RatFunc& a, const PoweringMap& phi, std::int64_t max_steps);

/// True iff a is 0, infinity or a constant (height zero).
bool is_preperiodic(const ProjectivePoint& a, const PoweringMap& phi);

/// phi^{-n}(beta) as the irreducible factors of x^(d^n) - beta.
struct BackwardFiber {
    RatFunc beta;
    std::int64_t level = 0;
    RatPoly fiber_poly;
    std::vector<AlgebraicPoint> factors;
    bool irreducible = false;  // settled by the binomial criterion
};

/// Throws PreconditionError for beta = 0 (the fiber is {0}, totally
/// ramified) and WildCaseError for wild maps.
BackwardFiber backward_fiber(const RatFunc& beta, const PoweringMap& phi, std::int64_t n);

}  // namespace orbitale

#endif  // ORBITALE_DYNAMICS_POWERING_HPP_
