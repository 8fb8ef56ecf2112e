#ifndef ORBITALE_FFPOLY_CYCLOTOMIC_HPP_
#define ORBITALE_FFPOLY_CYCLOTOMIC_HPP_

#include "orbitale/ffpoly/ext_field.hpp"
#include "orbitale/ffpoly/fp_poly.hpp"

#include <cstdint>
#include <vector>

namespace orbitale {

/// Integer polynomial, coefficients low-to-high.
using IntPoly = std::vector<std::int64_t>;

/// n-th cyclotomic polynomial over Z, as prod_{e | n} (x^e - 1)^mu(n/e):
/// exact multiplications and divisions by binomials starting from x^n - 1.
/// Throws std::overflow_error if a coefficient leaves int64 range.
IntPoly cyclotomic_integer(std::uint64_t n);

/// Phi_n reduced modulo p. Rejects p | n (WildCaseError).
FpPoly cyclotomic(std::uint64_t n, std::uint32_t p);

/// Reduces an integer polynomial modulo p.
FpPoly reduce_mod(const IntPoly& f, std::uint32_t p);

struct RootsOfUnity {
    int embedding_degree = 1;          // k = ord_n(p)
    ExtFieldPtr field;                 // F_{p^k}, presented by the minimal polynomial of zeta
    std::vector<ExtFieldElem> roots;   // zeta^0, zeta^1, ..., zeta^(n-1)
};

/// All solutions of x^n = 1 in F_{p^k}, k = ord_n(p), listed as the powers
/// of a primitive root zeta. The field is presented as F_p[a]/(g) with g the
/// minimal polynomial of zeta, so zeta = a. Rejects p | n.
RootsOfUnity nth_roots_of_unity(std::uint64_t n, std::uint32_t p);

}  // namespace orbitale

#endif  // ORBITALE_FFPOLY_CYCLOTOMIC_HPP_
