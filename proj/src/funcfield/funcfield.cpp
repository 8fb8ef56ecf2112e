#include "orbitale/funcfield/funcfield.hpp"

#include "orbitale/ffpoly/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitale {

Place Place::infinity(std::uint32_t p) { return Place(Kind::Infinity, FpPoly(p)); }

Place Place::finite(const FpPoly& irreducible) {
    if (!irreducible.is_monic() || !is_irreducible(irreducible))
        throw PreconditionError("place " + irreducible.to_string() + " is not a monic irreducible");
    return Place(Kind::Finite, irreducible);
}

Place Place::finite_unchecked(const FpPoly& irreducible) { return Place(Kind::Finite, irreducible); }

std::string Place::to_string() const { return is_infinite() ? "inf" : poly_.to_string("t"); }

std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (a.is_infinite() || b.is_infinite()) return b.is_infinite() <=> a.is_infinite();
    return a.poly_ <=> b.poly_;
}

Valuation valuation(const FpPoly& f, const Place& v) {
    if (f.is_zero()) return std::nullopt;
    if (v.is_infinite()) return -static_cast<std::int64_t>(f.degree());
    const std::uint32_t p = f.modulus();
    // f' = 0 means f = g^p with g the p-th root of the coefficients (they
    // lie in F_p), and v(g^p) = p v(g) since v is a place of a perfect field.
    std::int64_t scale = 1;
    FpPoly g = f;
    while (g.degree() > 0 && g.derivative().is_zero()) {
        std::vector<std::uint32_t> root(static_cast<std::size_t>(g.degree()) / p + 1);
        for (std::size_t i = 0; i < root.size(); ++i) root[i] = g.coeff(i * p);
        g = FpPoly(p, std::move(root));
        scale *= p;
    }
    if (v.poly().degree() == 1 && v.poly().coeff(0) == 0) {
        std::int64_t k = 0;
        while (g.coeff(static_cast<std::size_t>(k)) == 0) ++k;
        return scale * k;
    }
    return scale * multiplicity(g, v.poly());
}

Valuation valuation(const RatFunc& alpha, const Place& v) {
    if (alpha.is_zero()) return std::nullopt;
    return *valuation(alpha.num(), v) - *valuation(alpha.den(), v);
}

LogAbs log_abs(const RatFunc& alpha, const Place& v) {
    if (alpha.is_zero()) throw PreconditionError("log_abs of zero");
    return LogAbs(-static_cast<std::int64_t>(v.degree()) * *valuation(alpha, v));
}

std::vector<PlaceValuation> support(const RatFunc& alpha) {
    if (alpha.is_zero()) throw PreconditionError("support of zero");
    std::vector<PlaceValuation> out;
    const std::int64_t vinf = alpha.den().degree() - alpha.num().degree();
    if (vinf != 0) out.push_back({Place::infinity(alpha.characteristic()), vinf});
    for (auto& fp : factor(alpha.num()).factors) out.push_back({Place::finite_unchecked(fp.factor), fp.multiplicity});
    for (auto& fp : factor(alpha.den()).factors) out.push_back({Place::finite_unchecked(fp.factor), -fp.multiplicity});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.place < b.place; });
    return out;
}

Rational product_formula_check(const RatFunc& alpha) {
    Rational sum(0);
    for (auto& [place, val] : support(alpha)) sum += Rational(place.degree() * val);
    return sum;
}

Rational height(const ProjectivePoint& alpha) {
    if (alpha.is_infinity() || alpha.value().is_zero()) return Rational(0);
    return Rational(std::max(alpha.value().num().degree(), alpha.value().den().degree()));
}

Rational height_by_places(const RatFunc& alpha) {
    if (alpha.is_zero()) return Rational(0);
    Rational sum(0);
    for (auto& [place, val] : support(alpha)) {
        LogAbs la = -place.degree() * val;
        if (la > 0) sum += la;
    }
    return sum;
}

namespace {

// All polynomials over F_p of degree <= d (zero included), optionally monic
// of exact degree j for j <= d.
std::vector<FpPoly> all_polys(std::uint32_t p, int d) {
    std::vector<FpPoly> out;
    std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1, 0);
    while (true) {
        out.emplace_back(p, c);
        std::size_t pos = 0;
        while (pos < c.size() && ++c[pos] == p) c[pos++] = 0;
        if (pos == c.size()) break;
    }
    return out;
}

std::vector<FpPoly> monic_polys(std::uint32_t p, int d) {
    std::vector<FpPoly> out;
    for (auto& f : all_polys(p, d - 1)) out.push_back(f + FpPoly::monomial(p, 1, static_cast<std::size_t>(d)));
    if (d == 0) out = {FpPoly::constant(p, 1)};
    return out;
}

}  // namespace

std::vector<RatFunc> bounded_height_enum(const Rational& bound, std::uint32_t p) {
    require_field_prime(p);
    std::vector<RatFunc> out;
    if (bound < 0) return out;
    const int d = static_cast<int>(bound.numerator() / bound.denominator());
    out.push_back(RatFunc(p));
    std::vector<FpPoly> dens;
    for (int j = 0; j <= d; ++j)
        for (auto& b : monic_polys(p, j)) dens.push_back(b);
    for (auto& a : all_polys(p, d)) {
        if (a.is_zero()) continue;
        for (auto& b : dens)
            if (gcd(a, b).is_one()) out.push_back(RatFunc(a, b));
    }
    std::sort(out.begin(), out.end(), [](const RatFunc& x, const RatFunc& y) {
        auto hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        if (x.num() != y.num()) return x.num() < y.num();
        return x.den() < y.den();
    });
    return out;
}

std::vector<Place> finite_places_up_to(std::uint32_t p, int max_degree) {
    std::vector<Place> out;
    for (int j = 1; j <= max_degree; ++j)
        for (auto& f : monic_polys(p, j))
            if (is_irreducible(f)) out.push_back(Place::finite_unchecked(f));
    return out;
}

}  // namespace orbitale
