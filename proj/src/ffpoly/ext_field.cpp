#include "orbitale/ffpoly/ext_field.hpp"

#include "orbitale/common.hpp"
#include "orbitale/ffpoly/factor.hpp"

namespace orbitale {

std::shared_ptr<const ExtField> ExtField::create(const FpPoly& modulus) {
    require_field_prime(modulus.modulus());
    if (!modulus.is_monic() || !is_irreducible(modulus))
        throw PreconditionError("extension modulus " + modulus.to_string("a") + " is not monic irreducible");
    return std::shared_ptr<const ExtField>(new ExtField(modulus));
}

std::shared_ptr<const ExtField> ExtField::prime(std::uint32_t p) {
    require_field_prime(p);
    return std::shared_ptr<const ExtField>(new ExtField(FpPoly::x(p)));
}

std::shared_ptr<const ExtField> ExtField::find(std::uint32_t p, int k, std::mt19937_64& rng) {
    require_field_prime(p);
    if (k < 1) throw PreconditionError("extension degree must be positive");
    if (k == 1) return prime(p);
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    while (true) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(k) + 1);
        for (auto& a : c) a = coef(rng);
        c.back() = 1;
        if (c[0] == 0) continue;
        FpPoly m(p, std::move(c));
        if (is_irreducible(m)) return std::shared_ptr<const ExtField>(new ExtField(std::move(m)));
    }
}

ExtFieldElem::ExtFieldElem(ExtFieldPtr field, const FpPoly& value)
    : field_(std::move(field)), v_(value % field_->modulus()) {}

ExtFieldElem ExtFieldElem::from_int(ExtFieldPtr field, std::int64_t k) {
    const std::uint32_t p = field->characteristic();
    FpPoly c = FpPoly::constant(p, PrimeFieldElem::from_signed(k, p).value());
    return {std::move(field), std::move(c), Reduced{}};
}

ExtFieldElem ExtFieldElem::generator(ExtFieldPtr field) {
    FpPoly a = FpPoly::x(field->characteristic());
    return {std::move(field), a};
}

ExtFieldElem operator*(const ExtFieldElem& a, const ExtFieldElem& b) {
    return {a.field_, (a.v_ * b.v_) % a.field_->modulus(), ExtFieldElem::Reduced{}};
}

ExtFieldElem ExtFieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in F_q");
    auto eg = ext_gcd(v_, field_->modulus());
    return {field_, eg.s % field_->modulus(), Reduced{}};
}

ExtFieldElem ExtFieldElem::pow(std::uint64_t e) const {
    return {field_, pow_mod(v_, e, field_->modulus()), Reduced{}};
}

}  // namespace orbitale
