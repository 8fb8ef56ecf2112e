#ifndef ORBITALE_DYNAMICS_EXPERIMENTS_HPP_
#define ORBITALE_DYNAMICS_EXPERIMENTS_HPP_

#include "orbitale/dynamics/powering.hpp"
#include "orbitale/integrality/integrality.hpp"

#include <string>
#include <vector>

namespace orbitale {

/// Polynomials above this degree are not factored by the convergence
/// experiment; their unlisted places are aggregated into one row.
inline constexpr int kFactorDegreeLimit = 128;

// ---- 1 - beta^(d^n) at a place where beta is a unit ----

struct UnitPowerReport {
    enum class Verdict { Bounded, Unbounded, Inconclusive, Degenerate };
    std::vector<Valuation> valuations;  // index n = 0..n_max
    Valuation max_valuation;
    Verdict verdict = Verdict::Inconclusive;
};

std::string to_string(UnitPowerReport::Verdict v);

/// v(1 - beta^(d^n)) for n = 0..n_max, computed exactly in F_p(t). Bounded
/// when the last two entries agree and the sequence never exceeds them,
/// unbounded when the last three strictly increase, degenerate when some
/// entry is infinite. Requires v(beta) = 0; p | d is allowed.
UnitPowerReport lemma2_experiment(const RatFunc& beta, const Place& v, std::int64_t d, std::int64_t n_max);

// ---- distances from alpha to the roots of x^(d^m) - beta^(d^n) ----

struct DistanceLevel {
    std::int64_t m = 0, n = 0;
    std::vector<LogAbs> distances;  // ascending multiset
    LogAbs closest;                 // smallest entry
};

struct DistanceReport {
    std::vector<DistanceLevel> levels;
    LogAbs observed_infimum;  // min over levels of `closest`
};

/// Requires v(alpha) = v(beta) = 0, beta != 1, m > n >= 0, gcd(d, p) = 1,
/// and alpha^(d^m) != beta^(d^n) at every level.
DistanceReport lemma3_experiment(const RatFunc& alpha, const RatFunc& beta, const Place& v, std::int64_t d,
                                 const std::vector<std::pair<std::int64_t, std::int64_t>>& levels);

// ---- main theorem: (1/d^n) log|alpha^(d^n) - beta|_v ----

struct ConvergenceReport {
    RatFunc alpha, beta;
    std::int64_t d = 0;
    PlaceSet S, T;
    std::vector<Place> places;                // canonical order
    std::vector<std::vector<Rational>> table;  // table[i][n-1] = S_n(places[i])
    std::vector<Rational> other;              // per n: sum over places not listed
    std::vector<Rational> limits;             // per place: max(0, log|alpha|_v)
    std::vector<Rational> global_sums;        // per n: must be 0
    std::vector<Rational> A;                  // per n: sum over S u T
    Rational height;                          // h(alpha)
    std::int64_t n_max = 0;

    bool has_other() const;
    /// place,n,numerator,denominator,predicted_limit,A_n
    std::string to_csv() const;
    std::string to_json() const;
};

/// Throws PreconditionError when alpha is preperiodic ("alpha is
/// preperiodic"), beta = 0, or alpha^(d^n) = beta for some n <= n_max (the
/// message names the level); WildCaseError when p | d.
ConvergenceReport main_theorem_experiment(const RatFunc& alpha, const RatFunc& beta, std::int64_t d,
                                          std::int64_t n_max, const PlaceSet& S);

// ---- phi(alpha) against beta versus alpha against phi^{-1}(beta) ----

struct TransferVerdict {
    bool side_a = false;  // beta S-integral relative to phi(alpha)
    bool side_b = false;  // every factor of x^d - beta S-integral relative to alpha
    std::optional<Place> witness_a, witness_b;
    std::vector<AlgebraicPoint> fiber;
    bool agree() const { return side_a == side_b; }
};

/// Both sides computed independently. Throws PreconditionError if phi has
/// bad reduction at a checked place outside S.
TransferVerdict integrality_transfer_check(const RatFunc& alpha, const RatFunc& beta, const PlaceSet& S,
                                           const PoweringMap& phi);

}  // namespace orbitale

#endif  // ORBITALE_DYNAMICS_EXPERIMENTS_HPP_
