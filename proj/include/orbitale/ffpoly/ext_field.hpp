#ifndef ORBITALE_FFPOLY_EXT_FIELD_HPP_
#define ORBITALE_FFPOLY_EXT_FIELD_HPP_

#include "orbitale/ffpoly/fp_poly.hpp"

#include <memory>
#include <random>
#include <string>

namespace orbitale {

/// F_p[a]/(m(a)) for a monic irreducible m. Shared by all its elements.
class ExtField {
public:
    /// Verifies that `modulus` is monic and irreducible.
    static std::shared_ptr<const ExtField> create(const FpPoly& modulus);
    /// The prime field itself, presented as F_p[a]/(a).
    static std::shared_ptr<const ExtField> prime(std::uint32_t p);
    /// Some field of degree k over F_p, from a seeded random search.
    static std::shared_ptr<const ExtField> find(std::uint32_t p, int k, std::mt19937_64& rng);

    std::uint32_t characteristic() const { return modulus_.modulus(); }
    int degree() const { return modulus_.degree(); }
    const FpPoly& modulus() const { return modulus_; }

private:
    explicit ExtField(FpPoly modulus) : modulus_(std::move(modulus)) {}
    FpPoly modulus_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

class ExtFieldElem {
public:
    ExtFieldElem(ExtFieldPtr field, const FpPoly& value);
    static ExtFieldElem from_int(ExtFieldPtr field, std::int64_t k);
    /// The class of a, the generator of F_p[a]/(m).
    static ExtFieldElem generator(ExtFieldPtr field);

    const ExtFieldPtr& field() const { return field_; }
    const FpPoly& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_.is_one(); }

    ExtFieldElem zero() const { return {field_, FpPoly(v_.modulus())}; }
    ExtFieldElem one() const { return from_int(field_, 1); }
    ExtFieldElem from_int(std::int64_t k) const { return from_int(field_, k); }
    ExtFieldElem inverse() const;
    ExtFieldElem pow(std::uint64_t e) const;

    friend ExtFieldElem operator+(const ExtFieldElem& a, const ExtFieldElem& b) {
        return {a.field_, a.v_ + b.v_, Reduced{}};
    }
    friend ExtFieldElem operator-(const ExtFieldElem& a, const ExtFieldElem& b) {
        return {a.field_, a.v_ - b.v_, Reduced{}};
    }
    friend ExtFieldElem operator*(const ExtFieldElem& a, const ExtFieldElem& b);
    friend ExtFieldElem operator/(const ExtFieldElem& a, const ExtFieldElem& b) { return a * b.inverse(); }
    ExtFieldElem operator-() const { return {field_, -v_, Reduced{}}; }
    friend bool operator==(const ExtFieldElem& a, const ExtFieldElem& b) { return a.v_ == b.v_; }

    /// Polynomial in the generator, written with variable "a".
    std::string to_string() const { return v_.to_string("a"); }

private:
    struct Reduced {};
    ExtFieldElem(ExtFieldPtr field, FpPoly value, Reduced) : field_(std::move(field)), v_(std::move(value)) {}
    ExtFieldPtr field_;
    FpPoly v_;
};

}  // namespace orbitale

#endif  // ORBITALE_FFPOLY_EXT_FIELD_HPP_
