#ifndef ORBITALE_FUNCFIELD_PLACE_HPP_
#define ORBITALE_FUNCFIELD_PLACE_HPP_

#include "orbitale/ffpoly/fp_poly.hpp"

#include <compare>
#include <string>

namespace orbitale {

/// A place of F_p(t): a monic irreducible of F_p[t], or infinity.
/// Canonical order puts infinity first, then finite places by
/// (degree, coefficients low-to-high).
class Place {
public:
    enum class Kind { Infinity, Finite };

    static Place infinity(std::uint32_t p);
    /// Verifies monic irreducibility.
    static Place finite(const FpPoly& irreducible);
    /// Skips the irreducibility check; for factors produced by `factor`.
    static Place finite_unchecked(const FpPoly& irreducible);

    Kind kind() const { return kind_; }
    bool is_infinite() const { return kind_ == Kind::Infinity; }
    /// The irreducible (finite places only).
    const FpPoly& poly() const { return poly_; }
    std::uint32_t characteristic() const { return poly_.modulus(); }
    int degree() const { return is_infinite() ? 1 : poly_.degree(); }

    /// "inf" or the polynomial, e.g. "t^2+1".
    std::string to_string() const;

    friend bool operator==(const Place&, const Place&) = default;
    friend std::strong_ordering operator<=>(const Place& a, const Place& b);

private:
    Place(Kind k, FpPoly poly) : kind_(k), poly_(std::move(poly)) {}
    Kind kind_;
    FpPoly poly_;
};

}  // namespace orbitale

#endif  // ORBITALE_FUNCFIELD_PLACE_HPP_
