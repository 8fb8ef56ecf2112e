#include "orbitale/funcfield/ratfunc.hpp"

#include "orbitale/common.hpp"

#include <stdexcept>

namespace orbitale {

RatFunc::RatFunc(const FpPoly& num) : num_(num), den_(FpPoly::constant(num.modulus(), 1)) {}

RatFunc::RatFunc(const FpPoly& num, const FpPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = FpPoly::constant(num_.modulus(), 1);
        return;
    }
    FpPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    const std::uint32_t inv = inv_mod_p(den_.lead(), den_.modulus());
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

RatFunc RatFunc::constant(std::uint32_t p, std::int64_t c) {
    return RatFunc(FpPoly::constant(p, PrimeFieldElem::from_signed(c, p).value()));
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in F_p(t)");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    const auto ue = static_cast<std::uint64_t>(e);
    // Coprimality survives powering and a monic denominator stays monic.
    return RatFunc(orbitale::pow(num_, ue), orbitale::pow(den_, ue), Canonical{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return a.zero();
    // Cross-cancel first so the products are already reduced.
    FpPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return RatFunc((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1), RatFunc::Canonical{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string() const {
    auto wrap = [](const FpPoly& f) {
        std::string s = f.to_string("t");
        const bool atom = f.is_constant() || (s.find('+') == std::string::npos && s.find('*') == std::string::npos);
        return atom ? s : "(" + s + ")";
    };
    if (den_.is_one()) return num_.to_string("t");
    return wrap(num_) + "/" + wrap(den_);
}

std::size_t RatFunc::hash() const {
    std::size_t h = num_.modulus();
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (auto c : num_.coeffs()) mix(c);
    mix(0xffffffffULL);
    for (auto c : den_.coeffs()) mix(c);
    return h;
}

}  // namespace orbitale
