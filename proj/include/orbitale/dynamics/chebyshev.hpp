#ifndef ORBITALE_DYNAMICS_CHEBYSHEV_HPP_
#define ORBITALE_DYNAMICS_CHEBYSHEV_HPP_

#include "orbitale/ffpoly/fp_poly.hpp"

namespace orbitale {

// T_d is the map with T_d(z + 1/z) = z^d + 1/z^d, i.e. the quotient of z^d
// by the involution z -> 1/z.

/// T_0 = 2, T_1 = x, T_{k+1} = x T_k - T_{k-1}, reduced mod p.
FpPoly chebyshev_poly(std::int64_t d, std::uint32_t p);

/// z^d * T_d((z^2+1)/z) == z^(2d) + 1 as polynomials over F_p.
bool semiconjugacy_check(std::int64_t d, std::uint32_t p);

}  // namespace orbitale

#endif  // ORBITALE_DYNAMICS_CHEBYSHEV_HPP_
