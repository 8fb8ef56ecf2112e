#include "orbitale/dynamics/powering.hpp"

#include <unordered_map>

namespace orbitale {

PoweringMap::PoweringMap(std::int64_t d, std::uint32_t p) : PoweringMap(d, p, false) {}

PoweringMap::PoweringMap(std::int64_t d, std::uint32_t p, bool wild_ok) : d_(d), p_(p) {
    require_field_prime(p);
    if (d < 2) throw PreconditionError("powering map needs d >= 2, got " + std::to_string(d));
    if (!wild_ok && d % p == 0)
        throw WildCaseError("d = " + std::to_string(d) + " is divisible by p = " + std::to_string(p));
}

PoweringMap PoweringMap::allow_wild(std::int64_t d, std::uint32_t p) { return PoweringMap(d, p, true); }

ProjectivePoint PoweringMap::operator()(const ProjectivePoint& a) const {
    if (a.is_infinity()) return a;
    return (*this)(a.value());
}

RatFunc PoweringMap::iterate(const RatFunc& a, std::int64_t n) const {
    RatFunc r = a;
    for (std::int64_t i = 0; i < n; ++i) {
        if (height(r) * Rational(d_) > Rational(kMaxIterateDegree))
            throw PreconditionError("iterate: degree would exceed " + std::to_string(kMaxIterateDegree));
        r = (*this)(r);
    }
    return r;
}

ForwardOrbit forward_orbit(const RatFunc& a, const PoweringMap& phi, std::int64_t max_steps) {
    ForwardOrbit out;
    std::unordered_map<RatFunc, std::size_t> seen;
    RatFunc cur = a;
    for (std::int64_t step = 0; step < max_steps; ++step) {
        if (auto it = seen.find(cur); it != seen.end()) {
            out.cycle_start = it->second;
            return out;
        }
        seen.emplace(cur, out.points.size());
        out.points.push_back(cur);
        if (step + 1 == max_steps) break;
        if (height(cur) * Rational(phi.degree()) > Rational(kMaxIterateDegree)) {
            out.height_capped = true;
            break;
        }
        cur = phi(cur);
    }
    // One more application may close the cycle without adding a point.
    if (!out.height_capped && !out.points.empty()) {
        const RatFunc& last = out.points.back();
        if (height(last) * Rational(phi.degree()) <= Rational(kMaxIterateDegree))
            if (auto it = seen.find(phi(last)); it != seen.end()) out.cycle_start = it->second;
    }
    return out;
}

bool is_preperiodic(const ProjectivePoint& a, const PoweringMap& phi) {
    (void)phi;  // every z^d fixes 0 and infinity and permutes F_p^* eventually
    return a.is_infinity() || a.value().is_constant();
}

BackwardFiber backward_fiber(const RatFunc& beta, const PoweringMap& phi, std::int64_t n) {
    if (!phi.is_tame()) throw WildCaseError("backward_fiber: wild map");
    if (beta.is_zero()) throw PreconditionError("degenerate fiber: beta = 0 (the fiber is {0}, totally ramified)");
    if (n < 0) throw PreconditionError("backward_fiber: level must be >= 0");
    std::int64_t m = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        m *= phi.degree();
        if (m > kMaxIterateDegree) throw PreconditionError("backward_fiber: d^n exceeds " + std::to_string(kMaxIterateDegree));
    }
    BackwardFiber f;
    f.beta = beta;
    f.level = n;
    f.fiber_poly = binomial(m, beta);
    f.irreducible = m == 1 || is_irreducible_xm_minus_a(m, beta);
    f.factors = f.irreducible ? std::vector<AlgebraicPoint>{AlgebraicPoint::from_certified(f.fiber_poly)}
                              : factor_binomial(m, beta);
    return f;
}

}  // namespace orbitale
