#ifndef ORBITALE_TESTS_TEST_UTIL_HPP_
#define ORBITALE_TESTS_TEST_UTIL_HPP_

#include "orbitale/ffpoly/fp_poly.hpp"
#include "orbitale/funcfield/ratfunc.hpp"

#include <random>
#include <vector>

namespace orbitale::testing {

inline FpPoly random_poly(std::uint32_t p, int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& a : c) a = coef(rng);
    return FpPoly(p, std::move(c));
}

inline FpPoly random_nonzero_poly(std::uint32_t p, int max_degree, std::mt19937_64& rng) {
    while (true) {
        FpPoly f = random_poly(p, max_degree, rng);
        if (!f.is_zero()) return f;
    }
}

inline RatFunc random_ratfunc(std::uint32_t p, int max_degree, std::mt19937_64& rng) {
    return RatFunc(random_nonzero_poly(p, max_degree, rng), random_nonzero_poly(p, max_degree, rng));
}

inline RatFunc random_nonconstant(std::uint32_t p, int max_degree, std::mt19937_64& rng) {
    while (true) {
        RatFunc a = random_ratfunc(p, max_degree, rng);
        if (!a.is_constant()) return a;
    }
}

}  // namespace orbitale::testing

#endif  // ORBITALE_TESTS_TEST_UTIL_HPP_
