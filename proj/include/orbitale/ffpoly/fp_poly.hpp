#ifndef ORBITALE_FFPOLY_FP_POLY_HPP_
#define ORBITALE_FFPOLY_FP_POLY_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbitale {

/// Element of the prime field F_p. Carries its modulus so that generic
/// polynomial code can build zeros and ones from any coefficient.
class PrimeFieldElem {
public:
    PrimeFieldElem(std::uint32_t value, std::uint32_t p) : v_(value % p), p_(p) {}
    static PrimeFieldElem from_signed(std::int64_t value, std::uint32_t p);

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    PrimeFieldElem zero() const { return {0, p_}; }
    PrimeFieldElem one() const { return {1, p_}; }
    PrimeFieldElem from_int(std::int64_t k) const { return from_signed(k, p_); }
    PrimeFieldElem inverse() const;

    friend PrimeFieldElem operator+(PrimeFieldElem a, PrimeFieldElem b) {
        return {(a.v_ + b.v_) % a.p_, a.p_};
    }
    friend PrimeFieldElem operator-(PrimeFieldElem a, PrimeFieldElem b) {
        return {(a.v_ + a.p_ - b.v_) % a.p_, a.p_};
    }
    friend PrimeFieldElem operator*(PrimeFieldElem a, PrimeFieldElem b) {
        return {static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % a.p_), a.p_};
    }
    friend PrimeFieldElem operator/(PrimeFieldElem a, PrimeFieldElem b) { return a * b.inverse(); }
    PrimeFieldElem operator-() const { return {(p_ - v_) % p_, p_}; }
    friend bool operator==(PrimeFieldElem a, PrimeFieldElem b) = default;

private:
    std::uint32_t v_;
    std::uint32_t p_;
};

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p);

/// Dense univariate polynomial over F_p, coefficients low-to-high.
/// The zero polynomial has an empty coefficient vector.
class FpPoly {
public:
    explicit FpPoly(std::uint32_t p = 2) : p_(p) {}
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

    static FpPoly from_signed(std::uint32_t p, const std::vector<std::int64_t>& coeffs);
    static FpPoly constant(std::uint32_t p, std::uint32_t c);
    static FpPoly monomial(std::uint32_t p, std::uint32_t c, std::size_t k);
    static FpPoly x(std::uint32_t p) { return monomial(p, 1, 1); }

    std::uint32_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    FpPoly monic() const;
    FpPoly scaled(std::uint32_t k) const;
    FpPoly shifted(std::size_t k) const;  // multiply by x^k
    FpPoly derivative() const;
    FpPoly compose(const FpPoly& g) const;
    std::uint32_t eval(std::uint32_t x) const;
    /// f(x^p); equals f^p over F_p.
    FpPoly frobenius() const;
    /// g with g^p = f; requires f' = 0.
    FpPoly pth_root() const;

    FpPoly operator-() const;
    FpPoly& operator+=(const FpPoly& g);
    FpPoly& operator-=(const FpPoly& g);
    friend FpPoly operator+(FpPoly f, const FpPoly& g) { return f += g; }
    friend FpPoly operator-(FpPoly f, const FpPoly& g) { return f -= g; }
    friend FpPoly operator*(const FpPoly& f, const FpPoly& g);
    friend bool operator==(const FpPoly& f, const FpPoly& g) = default;
    /// Canonical order: by degree, then coefficients low-to-high.
    friend std::strong_ordering operator<=>(const FpPoly& f, const FpPoly& g);

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::uint32_t p_;
    std::vector<std::uint32_t> c_;
};

/// Quotient and remainder with f = q*g + r, deg r < deg g.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& f, const FpPoly& g);
FpPoly operator/(const FpPoly& f, const FpPoly& g);  // exact or truncating quotient
FpPoly operator%(const FpPoly& f, const FpPoly& g);
/// Monic gcd (zero only if both inputs are zero).
FpPoly gcd(const FpPoly& f, const FpPoly& g);

struct ExtGcd {
    FpPoly g, s, t;  // s*f + t*h = g, g monic
};
ExtGcd ext_gcd(const FpPoly& f, const FpPoly& h);

FpPoly pow(const FpPoly& f, std::uint64_t e);
FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly pow_mod(const FpPoly& f, std::uint64_t e, const FpPoly& m);

/// Multiplicity of the irreducible q in f (f nonzero).
int multiplicity(const FpPoly& f, const FpPoly& q);

}  // namespace orbitale

#endif  // ORBITALE_FFPOLY_FP_POLY_HPP_
