#ifndef ORBITALE_FFPOLY_FACTOR_HPP_
#define ORBITALE_FFPOLY_FACTOR_HPP_

#include "orbitale/ffpoly/fp_poly.hpp"

#include <random>
#include <vector>

namespace orbitale {

struct FactorPower {
    FpPoly factor;  // monic irreducible
    int multiplicity;
    friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

struct Factorization {
    std::uint32_t unit;                // leading coefficient of the input
    std::vector<FactorPower> factors;  // sorted canonically
};

/// Ben-Or irreducibility test (early-abort distinct-degree sweep).
bool is_irreducible(const FpPoly& f);

/// Complete factorization over F_p: square-free decomposition, then
/// distinct-degree and Cantor-Zassenhaus equal-degree splitting. Inputs of
/// degree <= 4 go through trial division by enumerated irreducibles instead.
/// `rng` seeds the equal-degree splitting.
Factorization factor(const FpPoly& f, std::mt19937_64& rng);
/// Same, with a fixed default seed.
Factorization factor(const FpPoly& f);

/// Deterministic trial division by all monic polynomials of degree
/// <= deg(f)/2, in canonical order. Exponential in the degree.
Factorization factor_by_trial_division(const FpPoly& f);

/// Square-free decomposition: pairs (square-free monic g_i, i) with
/// f = lc * prod g_i^i.
std::vector<FactorPower> squarefree_decomposition(const FpPoly& f);

/// Product of the factors (with multiplicities) times the unit.
FpPoly expand(const Factorization& fz, std::uint32_t p);

}  // namespace orbitale

#endif  // ORBITALE_FFPOLY_FACTOR_HPP_
