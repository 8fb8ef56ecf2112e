#include "orbitale/common.hpp"

#include <limits>
#include <numeric>

namespace orbitale {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const Valuation& v) {
    return v ? std::to_string(*v) : std::string("inf");
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t q = 1; q * q <= n; ++q) {
        if (n % q != 0) continue;
        lo.push_back(q);
        if (q != n / q) hi.push_back(n / q);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::uint64_t radical(std::uint64_t d) {
    std::uint64_t r = 1;
    for (auto q : prime_factors(d)) r *= q;
    return r;
}

int mobius(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        n /= q;
        if (n % q == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto q : prime_factors(n)) r = r / q * (q - 1);
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 r = 1 % mod, b = base % mod;
    while (exp) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (n == 1) return 1;
    if (std::gcd(a % n, n) != 1)
        throw PreconditionError("multiplicative_order: base not invertible");
    // The order divides phi(n); strip prime factors while the power stays 1.
    std::uint64_t ord = euler_phi(n);
    for (auto q : prime_factors(ord))
        while (ord % q == 0 && pow_mod(a, ord / q, n) == 1) ord /= q;
    return ord;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("ipow overflow");
        r *= base;
    }
    return r;
}

std::pair<unsigned, std::uint64_t> split_p_part(std::uint64_t n, std::uint64_t p) {
    unsigned a = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++a;
    }
    return {a, n};
}

void require_field_prime(std::uint64_t p) {
    if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 16)) throw PreconditionError("characteristic must be below 65536");
}

}  // namespace orbitale
