#ifndef ORBITALE_FUNCFIELD_RATIONAL_MAP_HPP_
#define ORBITALE_FUNCFIELD_RATIONAL_MAP_HPP_

#include "orbitale/ffpoly/ext_field.hpp"
#include "orbitale/ffpoly/poly.hpp"
#include "orbitale/funcfield/funcfield.hpp"

#include <vector>

namespace orbitale {

/// phi = [f(x,y) : g(x,y)] with f, g homogeneous of degree d over F_p(t).
/// f_coeffs[i] is the coefficient of x^i y^(d-i), likewise for g.
struct RationalMapPair {
    int degree = 0;
    std::vector<RatFunc> f_coeffs;
    std::vector<RatFunc> g_coeffs;

    /// [x^d : y^d]
    static RationalMapPair powering(int d, std::uint32_t p);
    /// Homogenized polynomial map [y^d P(x/y) : y^d], P over F_p of degree d.
    static RationalMapPair from_polynomial(const FpPoly& poly);
};

/// The residue field of a place: F_p[t]/(P) for finite P, F_p at infinity.
ExtFieldPtr residue_field(const Place& v);
/// Image of an element with v(x) >= 0 in the residue field.
ExtFieldElem reduce_at(const RatFunc& x, const Place& v, const ExtFieldPtr& kappa);

struct ReducedMap {
    int degree = 0;                 // degree after cancelling common factors
    std::vector<ExtFieldElem> f;    // reduced coefficients, before cancellation
    std::vector<ExtFieldElem> g;
    Poly<ExtFieldElem> f_reduced;   // dehomogenized (y = 1) after cancellation
    Poly<ExtFieldElem> g_reduced;
    bool good_reduction = false;
};

/// Normalizes phi at v (minimum coefficient valuation 0), reduces into the
/// residue field, cancels the common homogeneous factor and compares
/// degrees.
ReducedMap reduce_map(const RationalMapPair& phi, const Place& v);

}  // namespace orbitale

#endif  // ORBITALE_FUNCFIELD_RATIONAL_MAP_HPP_
