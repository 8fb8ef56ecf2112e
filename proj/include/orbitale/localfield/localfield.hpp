#ifndef ORBITALE_LOCALFIELD_LOCALFIELD_HPP_
#define ORBITALE_LOCALFIELD_LOCALFIELD_HPP_

#include "orbitale/algpoint/algpoint.hpp"
#include "orbitale/funcfield/funcfield.hpp"
#include "orbitale/localfield/laurent.hpp"

#include <string>
#include <vector>

namespace orbitale {

inline constexpr std::int64_t kDefaultPrec = 64;
inline constexpr std::int64_t kMaxPrec = 4096;

/// The completion K_v as F_q((u)): the residue field F_q = F_p[a]/(P) for a
/// finite place P (a is the class of t), F_p at infinity; u is P itself or
/// 1/t.
class Completion {
public:
    explicit Completion(const Place& v);

    const Place& place() const { return v_; }
    const ExtFieldPtr& residue_field() const { return field_; }
    /// "t" for the place t, "(t+1)" for t+1, "u" at infinity.
    const std::string& uniformizer() const { return name_; }

    /// Expansion of alpha to absolute precision prec.
    LaurentApprox expand(const RatFunc& alpha, std::int64_t prec) const;
    /// Expansion of a polynomial of F_p[t]; exact unless deg(P) > 1, in
    /// which case the absolute precision is `prec`.
    LaurentApprox expand_poly(const FpPoly& f, std::int64_t prec) const;
    /// Image of t in F_q((u)) to absolute precision prec.
    LaurentApprox t_image(std::int64_t prec) const;

private:
    Place v_;
    ExtFieldPtr field_;
    std::string name_;
};

/// Series expansion of alpha at v, accurate to O(u^prec). Throws
/// PreconditionError for alpha = 0 or prec <= v(alpha).
LaurentApprox complete(const RatFunc& alpha, const Place& v, std::int64_t prec);

/// f evaluated at a series, with coefficients expanded at working
/// precision w.
LaurentApprox eval_series(const RatPoly& f, const Completion& kv, const LaurentApprox& x, std::int64_t w);

/// Newton iteration from x0 (its known terms taken as exact) to a root r
/// with v(f(r)) >= prec and v(r - x0) >= v(f(x0)) - v(f'(x0)). Requires
/// v(f(x0)) > 2 v(f'(x0)); throws WildCaseError when f' = 0 identically.
/// The root is returned to absolute precision prec - v(f'(x0)).
LaurentApprox hensel_lift(const RatPoly& f, const Place& v, const LaurentApprox& x0, std::int64_t prec);

struct PowerDistance {
    enum class Kind { Finite, Infinite, Exhausted };
    Kind kind = Kind::Finite;
    std::int64_t valuation = 0;  // Finite: the valuation; Exhausted: the precision reached
    std::string to_string() const;
    friend bool operator==(const PowerDistance&, const PowerDistance&) = default;
};

/// v(1 - beta^{d^n}) for n = 0..n_max from a single expansion of beta.
std::vector<PowerDistance> unit_power_distance(const LaurentApprox& beta, std::int64_t d, std::int64_t n_max);

/// Same, re-expanding beta at doubled precision (from `start` up to `cap`)
/// until every entry is certified.
std::vector<PowerDistance> unit_power_distance(const RatFunc& beta, const Place& v, std::int64_t d, std::int64_t n_max,
                                               std::int64_t start = kDefaultPrec, std::int64_t cap = kMaxPrec);

struct UnityCensus {
    std::int64_t d = 0, n = 0;
    std::uint32_t p = 0;
    Place place = Place::infinity(2);
    int embedding_degree = 1;  // [F_p(mu_{d^n}) : F_p]
    std::int64_t roots = 0;    // number of d^n-th roots of unity found
    std::int64_t units = 0;    // roots zeta != 1 with |1 - zeta|_v = 1
    std::vector<ExtFieldElem> close;  // zeta with 0 < |1 - zeta|_v < r
    std::int64_t count() const { return static_cast<std::int64_t>(close.size()); }
};

/// d^n-th roots of unity zeta with 0 < |1 - zeta|_v < r, where r is given
/// by log r = r_threshold. The extension is unramified, so |1 - zeta|_v is
/// read off in the residue field. Rejects p | d.
UnityCensus unity_distance_census(std::int64_t d, std::int64_t n, const Place& v, const LogAbs& r_threshold);

}  // namespace orbitale

#endif  // ORBITALE_LOCALFIELD_LOCALFIELD_HPP_
