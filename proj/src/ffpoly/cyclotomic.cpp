#include "orbitale/ffpoly/cyclotomic.hpp"

#include "orbitale/common.hpp"

#include <random>
#include <stdexcept>

namespace orbitale {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
    return r;
}

// f * (x^e - 1)
IntPoly mul_binomial(const IntPoly& f, std::uint64_t e) {
    IntPoly r(f.size() + e, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        r[i + e] = checked_add(r[i + e], f[i]);
        r[i] = checked_add(r[i], -f[i]);
    }
    return r;
}

// f / (x^e - 1), exact.
IntPoly div_binomial(const IntPoly& f, std::uint64_t e) {
    // q_i = q_{i+e} - f_{i+e}, descending.
    if (f.size() <= e) throw std::logic_error("inexact binomial division");
    const std::size_t dq = f.size() - 1 - e;
    IntPoly r = f, q(dq + 1, 0);
    for (std::size_t i = f.size(); i-- > e;) {
        const std::int64_t c = r[i];
        q[i - e] = c;
        r[i] = 0;
        r[i - e] = checked_add(r[i - e], c);
    }
    for (std::size_t i = 0; i < e; ++i)
        if (r[i] != 0) throw std::logic_error("inexact binomial division");
    return q;
}

// Field of degree k in which the roots are first found; a fixed seed keeps
// the final presentation (and every printed root) reproducible.
constexpr std::uint64_t kRootsSeed = 0x7a657461ULL;

// Minimal polynomial of z over F_p, given that F_p(z) has degree k, by
// solving for the linear dependency of z^k on 1, z, ..., z^(k-1).
FpPoly minimal_polynomial(const ExtFieldElem& z, int k) {
    const std::uint32_t p = z.field()->characteristic();
    const std::size_t n = static_cast<std::size_t>(k);
    // Augmented system: columns are powers z^0..z^(k-1), rhs = -z^k.
    std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n + 1, 0));
    ExtFieldElem pw = z.one();
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t c = pw.value().coeff(i);
            m[i][j] = j < n ? c : (p - c) % p;
        }
        pw = pw * z;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("minimal_polynomial: degree mismatch");
        std::swap(m[piv], m[col]);
        const std::uint64_t inv = inv_mod_p(m[col][col], p);
        for (auto& a : m[col]) a = static_cast<std::uint32_t>(a * inv % p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const std::uint64_t f = p - m[r][col];
            for (std::size_t c = col; c <= n; ++c) m[r][c] = static_cast<std::uint32_t>((m[r][c] + f * m[col][c]) % p);
        }
    }
    std::vector<std::uint32_t> g(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g[i] = m[i][n];
    g[n] = 1;
    return FpPoly(p, std::move(g));
}

// z^((p^k - 1)/n), with the exponent expanded in base p by schoolbook
// division of the all-(p-1) digit string.
ExtFieldElem power_cofactor(const ExtFieldElem& a, std::uint64_t n, std::uint32_t p, int k) {
    std::vector<std::uint64_t> digits;
    std::uint64_t rem = 0;
    for (int i = 0; i < k; ++i) {
        const std::uint64_t cur = rem * p + (p - 1);
        digits.push_back(cur / n);
        rem = cur % n;
    }
    if (rem != 0) throw std::logic_error("n does not divide p^k - 1");
    std::vector<ExtFieldElem> small{a.one()};
    for (std::uint32_t i = 1; i < p; ++i) small.push_back(small.back() * a);
    ExtFieldElem r = a.one();
    for (auto dgt : digits) r = r.pow(p) * small[dgt];
    return r;
}

}  // namespace

IntPoly cyclotomic_integer(std::uint64_t n) {
    if (n == 0) throw PreconditionError("cyclotomic index must be positive");
    IntPoly f{1};
    const auto divs = divisors(n);
    for (auto e : divs)
        if (mobius(n / e) == 1) f = mul_binomial(f, e);
    for (auto e : divs)
        if (mobius(n / e) == -1) f = div_binomial(f, e);
    // (x^e - 1) factors carry a sign (-1)^(number of factors); Phi_n is monic.
    if (f.back() < 0)
        for (auto& c : f) c = -c;
    return f;
}

FpPoly reduce_mod(const IntPoly& f, std::uint32_t p) { return FpPoly::from_signed(p, f); }

FpPoly cyclotomic(std::uint64_t n, std::uint32_t p) {
    require_field_prime(p);
    if (n % p == 0) throw WildCaseError("cyclotomic: p divides n");
    return reduce_mod(cyclotomic_integer(n), p);
}

RootsOfUnity nth_roots_of_unity(std::uint64_t n, std::uint32_t p) {
    require_field_prime(p);
    if (n == 0) throw PreconditionError("n must be positive");
    if (n % p == 0) throw WildCaseError("roots of unity: p divides n");
    const int k = static_cast<int>(multiplicative_order(p % n, n));
    std::mt19937_64 rng(kRootsSeed ^ (n * 1000003ULL + p));
    auto search_field = ExtField::find(p, k, rng);
    const auto primes = prime_factors(n);
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    ExtFieldElem zeta = ExtFieldElem::from_int(search_field, 1);
    while (true) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(k));
        for (auto& x : c) x = coef(rng);
        ExtFieldElem a(search_field, FpPoly(p, c));
        if (a.is_zero()) continue;
        zeta = power_cofactor(a, n, p, k);
        bool primitive = true;
        for (auto q : primes)
            if (zeta.pow(n / q).is_one()) primitive = false;
        if (primitive) break;
    }
    RootsOfUnity out;
    out.embedding_degree = k;
    out.field = k == 1 ? ExtField::prime(p) : ExtField::create(minimal_polynomial(zeta, k));
    const ExtFieldElem z = k == 1 ? ExtFieldElem::from_int(out.field, zeta.value().coeff(0))
                                  : ExtFieldElem::generator(out.field);
    out.roots.reserve(n);
    ExtFieldElem cur = z.one();
    for (std::uint64_t j = 0; j < n; ++j) {
        out.roots.push_back(cur);
        cur = cur * z;
    }
    return out;
}

}  // namespace orbitale
