#ifndef ORBITALE_COMMON_HPP_
#define ORBITALE_COMMON_HPP_

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitale {

/// Exact rational numbers. All "log" quantities are expressed in units of
/// log(1/eps), so they are rationals and never floating point.
using Rational = boost::rational<std::int64_t>;

/// Valuation of an element; std::nullopt stands for +infinity (the zero
/// element).
using Valuation = std::optional<std::int64_t>;

std::string to_string(const Rational& r);
std::string to_string(const Valuation& v);

// Error taxonomy. The CLI maps PreconditionError (and subclasses) to exit
// code 1 and ParseError to exit code 2.
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

struct WildCaseError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// A certified answer would need digits beyond the tracked precision.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)),
          message(what), offset(offset) {}
    std::string message;  // without the offset suffix
    std::size_t offset;
};

// Small integer number theory.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::vector<std::uint64_t> divisors(std::uint64_t n);       // ascending
std::uint64_t radical(std::uint64_t d);
int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);
/// Checked integer power; throws std::overflow_error.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Largest power of p dividing n, as (exponent, cofactor).
std::pair<unsigned, std::uint64_t> split_p_part(std::uint64_t n, std::uint64_t p);

/// Throws PreconditionError unless p is a prime usable as a field
/// characteristic (products of two residues must fit in 32 bits).
void require_field_prime(std::uint64_t p);

}  // namespace orbitale

#endif  // ORBITALE_COMMON_HPP_
