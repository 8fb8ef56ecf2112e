#include "orbitale/funcfield/rational_map.hpp"

#include <algorithm>
#include <limits>

namespace orbitale {

RationalMapPair RationalMapPair::powering(int d, std::uint32_t p) {
    RationalMapPair phi;
    phi.degree = d;
    phi.f_coeffs.assign(static_cast<std::size_t>(d) + 1, RatFunc(p));
    phi.g_coeffs.assign(static_cast<std::size_t>(d) + 1, RatFunc(p));
    phi.f_coeffs.back() = RatFunc::constant(p, 1);
    phi.g_coeffs.front() = RatFunc::constant(p, 1);
    return phi;
}

RationalMapPair RationalMapPair::from_polynomial(const FpPoly& poly) {
    const std::uint32_t p = poly.modulus();
    RationalMapPair phi;
    phi.degree = poly.degree();
    for (int i = 0; i <= phi.degree; ++i)
        phi.f_coeffs.push_back(RatFunc::constant(p, poly.coeff(static_cast<std::size_t>(i))));
    phi.g_coeffs.assign(static_cast<std::size_t>(phi.degree) + 1, RatFunc(p));
    phi.g_coeffs.front() = RatFunc::constant(p, 1);
    return phi;
}

ExtFieldPtr residue_field(const Place& v) {
    return v.is_infinite() ? ExtField::prime(v.characteristic()) : ExtField::create(v.poly());
}

ExtFieldElem reduce_at(const RatFunc& x, const Place& v, const ExtFieldPtr& kappa) {
    const auto val = valuation(x, v);
    if (val && *val < 0) throw PreconditionError("reduction of a non-integral element at " + v.to_string());
    if (!val || *val > 0) return ExtFieldElem::from_int(kappa, 0);
    if (v.is_infinite()) {
        // Equal degrees; the denominator is monic.
        return ExtFieldElem::from_int(kappa, x.num().lead());
    }
    return ExtFieldElem(kappa, x.num()) / ExtFieldElem(kappa, x.den());
}

ReducedMap reduce_map(const RationalMapPair& phi, const Place& v) {
    const std::uint32_t p = v.characteristic();
    std::int64_t mu = std::numeric_limits<std::int64_t>::max();
    for (const auto* side : {&phi.f_coeffs, &phi.g_coeffs})
        for (const auto& c : *side)
            if (auto val = valuation(c, v)) mu = std::min(mu, *val);
    if (mu == std::numeric_limits<std::int64_t>::max()) throw PreconditionError("degenerate rational map [0:0]");

    // Multiplier with valuation -mu.
    RatFunc scale = v.is_infinite() ? RatFunc::t(p).pow(mu) : RatFunc(v.poly()).pow(-mu);
    auto kappa = residue_field(v);
    ReducedMap out;
    for (const auto& c : phi.f_coeffs) out.f.push_back(reduce_at(c * scale, v, kappa));
    for (const auto& c : phi.g_coeffs) out.g.push_back(reduce_at(c * scale, v, kappa));

    Poly<ExtFieldElem> f1(out.f), g1(out.g);
    const int d = phi.degree;
    if (f1.is_zero() || g1.is_zero()) {
        // [F : 0] is the constant map after removing the common factor F.
        out.degree = 0;
        const auto one = ExtFieldElem::from_int(kappa, 1);
        out.f_reduced = f1.is_zero() ? Poly<ExtFieldElem>() : Poly<ExtFieldElem>::constant(one);
        out.g_reduced = g1.is_zero() ? Poly<ExtFieldElem>() : Poly<ExtFieldElem>::constant(one);
    } else {
        const Poly<ExtFieldElem> common = gcd(f1, g1);
        const int y_order = std::min(d - f1.degree(), d - g1.degree());
        out.degree = d - common.degree() - y_order;
        out.f_reduced = divmod(f1, common).first;
        out.g_reduced = divmod(g1, common).first;
    }
    out.good_reduction = out.degree == d;
    return out;
}

}  // namespace orbitale
