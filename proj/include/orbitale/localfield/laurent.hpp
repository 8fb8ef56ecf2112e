#ifndef ORBITALE_LOCALFIELD_LAURENT_HPP_
#define ORBITALE_LOCALFIELD_LAURENT_HPP_

#include "orbitale/common.hpp"
#include "orbitale/ffpoly/ext_field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbitale {

/// Precision of an exact series. Sums saturate at this value.
inline constexpr std::int64_t kExact = std::int64_t{1} << 60;

/// Truncated Laurent series sum_{i} c_i u^{lead+i} + O(u^prec) over a finite
/// residue field. Normalized so that coeffs[0] != 0 and every stored exponent
/// is below prec; the zero approximation has no coefficients and
/// lead == prec. prec == kExact marks an exact (finite) series.
class LaurentApprox {
public:
    LaurentApprox(ExtFieldPtr field, std::int64_t lead, std::vector<ExtFieldElem> coeffs, std::int64_t prec,
                  std::string uniformizer = "u");

    static LaurentApprox zero(ExtFieldPtr field, std::int64_t prec, std::string uniformizer = "u");
    static LaurentApprox constant(const ExtFieldElem& c, std::string uniformizer = "u");
    /// c * u^k, exact.
    static LaurentApprox monomial(const ExtFieldElem& c, std::int64_t k, std::string uniformizer = "u");

    const ExtFieldPtr& field() const { return field_; }
    const std::string& uniformizer() const { return name_; }
    std::int64_t lead_exponent() const { return lead_; }
    const std::vector<ExtFieldElem>& coeffs() const { return c_; }
    std::int64_t prec() const { return prec_; }
    bool is_exact() const { return prec_ >= kExact; }
    /// No known nonzero term (includes the exact zero).
    bool is_zero_approx() const { return c_.empty(); }
    bool is_exact_zero() const { return c_.empty() && is_exact(); }
    /// Certified valuation: the lead exponent when a nonzero term is known,
    /// +infinity for the exact zero, and PrecisionExhausted otherwise.
    Valuation valuation() const;
    /// prec - lead: the number of known terms from the lead on.
    std::int64_t relative_prec() const;

    /// Coefficient of u^e; throws PrecisionExhausted when e >= prec.
    ExtFieldElem coeff(std::int64_t e) const;

    LaurentApprox truncated(std::int64_t prec) const;
    /// The known terms taken as an exact finite series.
    LaurentApprox as_exact() const { return truncated(kExact).with_prec_unchecked(kExact); }
    /// Same terms, precision replaced; the caller vouches for the claim.
    LaurentApprox with_prec_unchecked(std::int64_t prec) const;

    LaurentApprox operator-() const;
    friend LaurentApprox operator+(const LaurentApprox& a, const LaurentApprox& b);
    friend LaurentApprox operator-(const LaurentApprox& a, const LaurentApprox& b) { return a + (-b); }
    friend LaurentApprox operator*(const LaurentApprox& a, const LaurentApprox& b);
    /// a * b^{-1}; when both are exact and b is not a monomial, the result
    /// has relative precision `exact_terms`.
    friend LaurentApprox operator/(const LaurentApprox& a, const LaurentApprox& b);
    LaurentApprox scaled(const ExtFieldElem& c) const;

    /// Inverse with at most `rel_terms` known terms (fewer if the input is
    /// less precise). Throws PrecisionExhausted if no nonzero term is known.
    LaurentApprox inverse(std::int64_t rel_terms) const;
    LaurentApprox inverse() const;
    /// Coefficientwise p-th power with exponents times p (exact in char p).
    LaurentApprox frobenius() const;
    LaurentApprox pow(std::uint64_t e) const;

    /// Known terms agree and precisions match.
    friend bool operator==(const LaurentApprox& a, const LaurentApprox& b);
    /// Agreement of all coefficients below min(a.prec, b.prec).
    friend bool agrees(const LaurentApprox& a, const LaurentApprox& b);

    /// "1 + t + 2*t^2 + O(t^3)"; exact series omit the O-term.
    std::string to_string() const;

    /// Relative precision used for exact / exact division.
    static constexpr std::int64_t exact_terms = 64;

private:
    void normalize();
    ExtFieldPtr field_;
    std::int64_t lead_;
    std::vector<ExtFieldElem> c_;
    std::int64_t prec_;
    std::string name_;
};

std::int64_t sat_add(std::int64_t a, std::int64_t b);

}  // namespace orbitale

#endif  // ORBITALE_LOCALFIELD_LAURENT_HPP_
