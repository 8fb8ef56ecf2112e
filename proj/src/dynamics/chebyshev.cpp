#include "orbitale/dynamics/chebyshev.hpp"

#include "orbitale/common.hpp"

namespace orbitale {

FpPoly chebyshev_poly(std::int64_t d, std::uint32_t p) {
    require_field_prime(p);
    if (d < 0) throw PreconditionError("chebyshev_poly: d must be >= 0");
    FpPoly prev = FpPoly::constant(p, 2), cur = FpPoly::x(p);
    if (d == 0) return prev;
    for (std::int64_t k = 1; k < d; ++k) {
        FpPoly next = FpPoly::x(p) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool semiconjugacy_check(std::int64_t d, std::uint32_t p) {
    if (d < 1) throw PreconditionError("semiconjugacy_check: d must be >= 1");
    FpPoly T = chebyshev_poly(d, p);
    // sum_i c_i (z^2+1)^i z^(d-i); every term is a polynomial since i <= d.
    const FpPoly w = FpPoly::from_signed(p, {1, 0, 1});
    FpPoly lhs(p), wi = FpPoly::constant(p, 1);
    for (int i = 0; i <= T.degree(); ++i) {
        if (T.coeff(i) != 0) lhs += FpPoly::monomial(p, T.coeff(i), static_cast<std::size_t>(d - i)) * wi;
        wi = wi * w;
    }
    return lhs == FpPoly::monomial(p, 1, static_cast<std::size_t>(2 * d)) + FpPoly::constant(p, 1);
}

}  // namespace orbitale
