#ifndef ORBITALE_FUNCFIELD_RATFUNC_HPP_
#define ORBITALE_FUNCFIELD_RATFUNC_HPP_

#include "orbitale/ffpoly/fp_poly.hpp"

#include <cstddef>
#include <functional>
#include <string>

namespace orbitale {

/// Element of F_p(t) in canonical form: gcd(num, den) = 1, den monic,
/// zero is 0/1.
class RatFunc {
public:
    explicit RatFunc(std::uint32_t p = 2) : num_(p), den_(FpPoly::constant(p, 1)) {}
    explicit RatFunc(const FpPoly& num);
    RatFunc(const FpPoly& num, const FpPoly& den);

    static RatFunc constant(std::uint32_t p, std::int64_t c);
    static RatFunc t(std::uint32_t p) { return RatFunc(FpPoly::x(p)); }

    std::uint32_t characteristic() const { return num_.modulus(); }
    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True for elements of F_p (including zero).
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc zero() const { return RatFunc(characteristic()); }
    RatFunc one() const { return constant(characteristic(), 1); }
    RatFunc from_int(std::int64_t k) const { return constant(characteristic(), k); }
    RatFunc inverse() const;
    /// Integer powers; the p-part of the exponent is applied as Frobenius.
    RatFunc pow(std::int64_t e) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

    /// Canonical text in the expression grammar, e.g. "(t^2+1)/(t+2)".
    std::string to_string() const;
    std::size_t hash() const;

private:
    struct Canonical {};
    RatFunc(FpPoly num, FpPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    FpPoly num_;
    FpPoly den_;
};

}  // namespace orbitale

template <>
struct std::hash<orbitale::RatFunc> {
    std::size_t operator()(const orbitale::RatFunc& a) const noexcept { return a.hash(); }
};

#endif  // ORBITALE_FUNCFIELD_RATFUNC_HPP_
