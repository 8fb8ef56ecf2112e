#include "orbitale/ffpoly/factor.hpp"

#include "orbitale/common.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbitale {
namespace {

FpPoly random_poly(std::uint32_t p, int deg_below, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(deg_below));
    for (auto& a : c) a = coef(rng);
    return FpPoly(p, std::move(c));
}

// Distinct-degree factorization of a monic square-free polynomial:
// (product of all irreducible factors of degree i, i).
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f) {
    const std::uint32_t p = f.modulus();
    const FpPoly x = FpPoly::x(p);
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly h = x;
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        h = pow_mod(h, p, f);
        FpPoly g = gcd(f, h - x);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
// degree i each.
void equal_degree(const FpPoly& f, int i, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == i) {
        out.push_back(f);
        return;
    }
    const std::uint32_t p = f.modulus();
    const int n = f.degree();
    while (true) {
        FpPoly a = random_poly(p, n, rng);
        if (a.degree() < 1) continue;
        FpPoly g = gcd(a, f);
        if (g.is_one()) {
            FpPoly b;
            if (p == 2) {
                // Absolute trace from F_{2^i} to F_2.
                FpPoly s = a, tr = a;
                for (int j = 1; j < i; ++j) {
                    s = mul_mod(s, s, f);
                    tr += s;
                }
                b = tr;
            } else {
                // a^((p^i - 1)/2) = (a^(1 + p + ... + p^(i-1)))^((p - 1)/2).
                FpPoly s = a % f, norm = a % f;
                for (int j = 1; j < i; ++j) {
                    s = pow_mod(s, p, f);
                    norm = mul_mod(norm, s, f);
                }
                b = pow_mod(norm, (p - 1) / 2, f) - FpPoly::constant(p, 1);
            }
            g = gcd(b, f);
        }
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree(g, i, rng, out);
            equal_degree(f / g, i, rng, out);
            return;
        }
    }
}

void sort_factors(std::vector<FactorPower>& v) {
    std::sort(v.begin(), v.end(), [](const FactorPower& a, const FactorPower& b) {
        if (a.factor != b.factor) return a.factor < b.factor;
        return a.multiplicity < b.multiplicity;
    });
}

// Merges equal factors (possible when square-free parts share nothing, but
// kept for safety of the trial-division path).
std::vector<FactorPower> merge(std::vector<FactorPower> v) {
    std::map<FpPoly, int> m;
    for (auto& fp : v) m[fp.factor] += fp.multiplicity;
    std::vector<FactorPower> out;
    for (auto& [f, k] : m) out.push_back({f, k});
    return out;
}

}  // namespace

bool is_irreducible(const FpPoly& f) {
    if (f.degree() < 1) return false;
    const FpPoly g = f.monic();
    const std::uint32_t p = g.modulus();
    const FpPoly x = FpPoly::x(p);
    FpPoly h = x;
    for (int i = 1; 2 * i <= g.degree(); ++i) {
        h = pow_mod(h, p, g);
        if (!gcd(g, h - x).is_one()) return false;
    }
    return true;
}

std::vector<FactorPower> squarefree_decomposition(const FpPoly& f) {
    if (f.is_zero()) throw std::domain_error("square-free decomposition of zero");
    std::vector<FactorPower> out;
    const std::uint32_t p = f.modulus();
    FpPoly a = f.monic();
    if (a.degree() == 0) return out;
    const FpPoly da = a.derivative();
    if (da.is_zero()) {
        for (auto& fp : squarefree_decomposition(a.pth_root()))
            out.push_back({fp.factor, fp.multiplicity * static_cast<int>(p)});
        return out;
    }
    FpPoly c = gcd(a, da);
    FpPoly w = a / c;
    int i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd(w, c);
        FpPoly z = w / y;
        if (!z.is_one()) out.push_back({z, i});
        ++i;
        w = y;
        c = c / y;
    }
    if (!c.is_one()) {
        for (auto& fp : squarefree_decomposition(c.pth_root()))
            out.push_back({fp.factor, fp.multiplicity * static_cast<int>(p)});
    }
    return out;
}

Factorization factor_by_trial_division(const FpPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    const std::uint32_t p = f.modulus();
    Factorization fz{f.lead(), {}};
    FpPoly g = f.monic();
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        // Enumerate monic polynomials of degree d; the first divisors found
        // at each degree are irreducible since smaller ones were removed.
        std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1, 0);
        c[static_cast<std::size_t>(d)] = 1;
        while (true) {
            FpPoly q(p, c);
            int k = multiplicity(g, q);
            if (k > 0) {
                fz.factors.push_back({q, k});
                for (int j = 0; j < k; ++j) g = g / q;
            }
            if (2 * d > g.degree()) break;
            std::size_t pos = 0;
            while (pos < static_cast<std::size_t>(d) && ++c[pos] == p) c[pos++] = 0;
            if (pos == static_cast<std::size_t>(d)) break;
        }
    }
    if (g.degree() > 0) fz.factors.push_back({g, 1});
    fz.factors = merge(std::move(fz.factors));
    sort_factors(fz.factors);
    return fz;
}

Factorization factor(const FpPoly& f, std::mt19937_64& rng) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    if (f.degree() <= 4) return factor_by_trial_division(f);
    Factorization fz{f.lead(), {}};
    for (auto& [sqf, mult] : squarefree_decomposition(f)) {
        for (auto& [block, i] : distinct_degree(sqf)) {
            std::vector<FpPoly> parts;
            equal_degree(block, i, rng, parts);
            for (auto& q : parts) fz.factors.push_back({q, mult});
        }
    }
    fz.factors = merge(std::move(fz.factors));
    sort_factors(fz.factors);
    return fz;
}

Factorization factor(const FpPoly& f) {
    std::mt19937_64 rng(0x6f72626974616c65ULL);
    return factor(f, rng);
}

FpPoly expand(const Factorization& fz, std::uint32_t p) {
    FpPoly r = FpPoly::constant(p, fz.unit);
    for (auto& fp : fz.factors) r = r * pow(fp.factor, static_cast<std::uint64_t>(fp.multiplicity));
    return r;
}

}  // namespace orbitale
