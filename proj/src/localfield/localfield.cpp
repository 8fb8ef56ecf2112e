#include "orbitale/localfield/localfield.hpp"

#include "orbitale/ffpoly/cyclotomic.hpp"

#include <algorithm>

namespace orbitale {

namespace {

LaurentApprox horner(const FpPoly& g, const LaurentApprox& x) {
    const ExtFieldPtr& F = x.field();
    LaurentApprox r(F, 0, {}, kExact, x.uniformizer());
    for (std::size_t i = g.coeffs().size(); i-- > 0;)
        r = r * x + LaurentApprox::constant(ExtFieldElem::from_int(F, g.coeffs()[i]), x.uniformizer());
    return r;
}

std::vector<ExtFieldElem> to_residues(const ExtFieldPtr& F, const std::vector<std::uint32_t>& c) {
    std::vector<ExtFieldElem> out;
    out.reserve(c.size());
    for (auto x : c) out.push_back(ExtFieldElem::from_int(F, x));
    return out;
}

}  // namespace

Completion::Completion(const Place& v) : v_(v) {
    const std::uint32_t p = v.characteristic();
    if (v.is_infinite()) {
        field_ = ExtField::prime(p);
        name_ = "u";
    } else if (v.degree() == 1) {
        field_ = ExtField::prime(p);
        name_ = v.poly() == FpPoly::x(p) ? "t" : "(" + v.poly().to_string("t") + ")";
    } else {
        field_ = ExtField::create(v.poly());
        name_ = "(" + v.poly().to_string("t") + ")";
    }
}

LaurentApprox Completion::t_image(std::int64_t prec) const {
    const ExtFieldElem one = ExtFieldElem::from_int(field_, 1);
    if (v_.is_infinite()) return LaurentApprox::monomial(one, -1, name_).truncated(prec);
    if (v_.degree() == 1) {
        // P = t - c, so t = c + u.
        const ExtFieldElem c = -ExtFieldElem::from_int(field_, v_.poly().coeff(0));
        return (LaurentApprox::constant(c, name_) + LaurentApprox::monomial(one, 1, name_)).truncated(prec);
    }
    // Solve P(T) = u by Newton iteration from T = a, doubling the precision.
    const FpPoly& P = v_.poly();
    const FpPoly dP = P.derivative();
    const LaurentApprox u = LaurentApprox::monomial(one, 1, name_);
    LaurentApprox T = LaurentApprox::constant(ExtFieldElem::generator(field_), name_).with_prec_unchecked(1);
    std::int64_t q = 1;
    while (q < prec) {
        q = std::min(2 * q, prec);
        const LaurentApprox Tq = T.with_prec_unchecked(q);
        const LaurentApprox res = horner(P, Tq) - u;
        T = (Tq - res / horner(dP, Tq)).truncated(q).with_prec_unchecked(q);
    }
    return T.truncated(prec);
}

LaurentApprox Completion::expand_poly(const FpPoly& f, std::int64_t prec) const {
    const std::uint32_t p = f.modulus();
    if (f.is_zero()) return LaurentApprox(field_, 0, {}, kExact, name_);
    if (v_.is_infinite()) {
        std::vector<std::uint32_t> rev(f.coeffs().rbegin(), f.coeffs().rend());
        return LaurentApprox(field_, -f.degree(), to_residues(field_, rev), kExact, name_);
    }
    if (v_.degree() == 1) {
        const FpPoly shift = FpPoly(p, {(p - v_.poly().coeff(0)) % p, 1});  // t + c
        return LaurentApprox(field_, 0, to_residues(field_, f.compose(shift).coeffs()), kExact, name_);
    }
    // P-adic digits f = sum_i a_i P^i with deg a_i < deg P map to
    // sum_i u^i a_i(T).
    const int k = v_.degree();
    const LaurentApprox T = t_image(prec);
    std::vector<LaurentApprox> Tpow{LaurentApprox::constant(ExtFieldElem::from_int(field_, 1), name_)};
    for (int j = 1; j < k; ++j) Tpow.push_back(Tpow.back() * T);
    LaurentApprox sum = LaurentApprox::zero(field_, prec, name_);
    FpPoly g = f;
    const ExtFieldElem one = ExtFieldElem::from_int(field_, 1);
    for (std::int64_t i = 0; !g.is_zero() && i < prec; ++i) {
        auto [q, r] = divmod(g, v_.poly());
        LaurentApprox digit(field_, 0, {}, kExact, name_);
        for (int j = 0; j <= r.degree(); ++j)
            if (r.coeff(static_cast<std::size_t>(j)) != 0)
                digit = digit + Tpow[static_cast<std::size_t>(j)].scaled(ExtFieldElem::from_int(field_, r.coeff(static_cast<std::size_t>(j))));
        sum = sum + digit * LaurentApprox::monomial(one, i, name_);
        g = q;
    }
    return sum.truncated(prec);
}

LaurentApprox Completion::expand(const RatFunc& alpha, std::int64_t prec) const {
    if (alpha.is_zero()) throw PreconditionError("completion of zero");
    const std::int64_t va = *valuation(alpha, v_);
    if (prec <= va) throw PreconditionError("precision " + std::to_string(prec) + " does not reach the lead term u^" + std::to_string(va));
    std::int64_t w = prec;
    if (!v_.is_infinite() && v_.degree() > 1) w = prec - va + std::max(*valuation(alpha.num(), v_), *valuation(alpha.den(), v_));
    const LaurentApprox N = expand_poly(alpha.num(), w);
    const LaurentApprox D = expand_poly(alpha.den(), w);
    return (N * D.inverse(prec - va)).truncated(prec);
}

LaurentApprox complete(const RatFunc& alpha, const Place& v, std::int64_t prec) { return Completion(v).expand(alpha, prec); }

LaurentApprox eval_series(const RatPoly& f, const Completion& kv, const LaurentApprox& x, std::int64_t w) {
    const ExtFieldPtr& F = kv.residue_field();
    LaurentApprox r(F, 0, {}, kExact, kv.uniformizer());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const RatFunc& c = f[i];
        LaurentApprox ci(F, 0, {}, kExact, kv.uniformizer());
        if (!c.is_zero()) ci = *valuation(c, kv.place()) >= w ? LaurentApprox::zero(F, w, kv.uniformizer()) : kv.expand(c, w);
        r = r * x + ci;
    }
    return r;
}

namespace {

// Lower bound for v(y): the lead exponent, or the precision of a zero
// approximation.
std::int64_t val_bound(const LaurentApprox& y) { return y.is_zero_approx() ? y.prec() : y.lead_exponent(); }

}  // namespace

LaurentApprox hensel_lift(const RatPoly& f, const Place& v, const LaurentApprox& x0, std::int64_t prec) {
    if (f.is_zero()) throw PreconditionError("Hensel lift of the zero polynomial");
    const RatPoly df = f.derivative();
    if (df.is_zero()) throw WildCaseError("derivative vanishes identically");
    const Completion kv(v);
    const LaurentApprox start = x0.as_exact();

    std::int64_t w = prec + 8;
    const std::int64_t w_cap = 8 * (std::abs(prec) + 64);
    for (; w <= w_cap; w *= 2) {
        const LaurentApprox fx0 = eval_series(f, kv, start, w);
        if (val_bound(fx0) >= prec) return x0;
        const LaurentApprox dfx0 = eval_series(df, kv, start, w);
        if (dfx0.is_exact_zero()) throw PreconditionError("Hensel condition violated: f'(x0) = 0");
        if (dfx0.is_zero_approx()) continue;
        const std::int64_t e = dfx0.lead_exponent();
        if (!fx0.is_zero_approx() && fx0.lead_exponent() <= 2 * e)
            throw PreconditionError("Hensel condition violated: v(f(x0)) = " + std::to_string(fx0.lead_exponent()) +
                                    ", v(f'(x0)) = " + std::to_string(e));
        if (fx0.is_zero_approx()) continue;

        const std::int64_t wn = w + 2 * std::max<std::int64_t>(e, 0);
        LaurentApprox x = start;
        std::int64_t last = fx0.lead_exponent();
        bool stalled = false;
        for (int it = 0; it < 64; ++it) {
            const LaurentApprox fx = eval_series(f, kv, x, wn);
            if (val_bound(fx) >= prec) {
                const LaurentApprox root = x.truncated(prec - e);
                const LaurentApprox check = eval_series(f, kv, root.as_exact(), wn);
                if (val_bound(check) >= prec) return root;
                stalled = true;
                break;
            }
            if (fx.is_zero_approx() || (it > 0 && fx.lead_exponent() <= last)) {
                stalled = true;
                break;
            }
            last = fx.lead_exponent();
            x = (x - fx / eval_series(df, kv, x, wn)).as_exact();
        }
        if (!stalled) break;
    }
    throw PrecisionExhausted("Hensel lift did not certify v(f(root)) >= " + std::to_string(prec));
}

std::string PowerDistance::to_string() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(valuation);
        case Kind::Infinite: return "inf";
        case Kind::Exhausted: return "exhausted(" + std::to_string(valuation) + ")";
    }
    return "";
}

std::vector<PowerDistance> unit_power_distance(const LaurentApprox& beta, std::int64_t d, std::int64_t n_max) {
    if (d < 1) throw PreconditionError("d must be positive");
    if (beta.is_exact_zero() || (!beta.is_zero_approx() && beta.lead_exponent() != 0))
        throw PreconditionError("beta is not a unit");
    if (beta.is_zero_approx()) throw PrecisionExhausted("valuation of beta is not known");
    const LaurentApprox one = LaurentApprox::constant(ExtFieldElem::from_int(beta.field(), 1), beta.uniformizer());
    std::vector<PowerDistance> out;
    LaurentApprox cur = beta;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (n > 0) cur = cur.pow(static_cast<std::uint64_t>(d));
        const LaurentApprox diff = one - cur;
        if (diff.is_exact_zero())
            out.push_back({PowerDistance::Kind::Infinite, 0});
        else if (diff.is_zero_approx())
            out.push_back({PowerDistance::Kind::Exhausted, diff.prec()});
        else
            out.push_back({PowerDistance::Kind::Finite, diff.lead_exponent()});
    }
    return out;
}

std::vector<PowerDistance> unit_power_distance(const RatFunc& beta, const Place& v, std::int64_t d, std::int64_t n_max,
                                               std::int64_t start, std::int64_t cap) {
    if (beta.is_zero() || *valuation(beta, v) != 0) throw PreconditionError("beta is not a unit at " + v.to_string());
    const Completion kv(v);
    if (beta.is_constant())
        return unit_power_distance(LaurentApprox::constant(ExtFieldElem::from_int(kv.residue_field(), beta.num().coeff(0)), kv.uniformizer()),
                                   d, n_max);
    std::int64_t prec = std::max<std::int64_t>(start, 1);
    while (true) {
        auto res = unit_power_distance(kv.expand(beta, prec), d, n_max);
        const bool done = std::none_of(res.begin(), res.end(), [](auto& r) { return r.kind == PowerDistance::Kind::Exhausted; });
        if (done || prec >= cap) return res;
        prec = std::min(2 * prec, cap);
    }
}

UnityCensus unity_distance_census(std::int64_t d, std::int64_t n, const Place& v, const LogAbs& r_threshold) {
    const std::uint32_t p = v.characteristic();
    if (d < 1 || n < 0) throw PreconditionError("census needs d >= 1 and n >= 0");
    if (d % p == 0) throw WildCaseError("census with p | d");
    UnityCensus c;
    c.d = d;
    c.n = n;
    c.p = p;
    c.place = v;
    const std::uint64_t m = ipow(static_cast<std::uint64_t>(d), static_cast<unsigned>(n));
    RootsOfUnity ru = nth_roots_of_unity(m, p);
    c.embedding_degree = ru.embedding_degree;
    c.roots = static_cast<std::int64_t>(ru.roots.size());
    for (auto& zeta : ru.roots) {
        if (zeta.is_one()) continue;
        // 1 - zeta is a nonzero residue, hence a unit: log|1 - zeta|_v = 0.
        if ((zeta.one() - zeta).is_zero()) continue;
        ++c.units;
        if (LogAbs(0) < r_threshold) c.close.push_back(zeta);
    }
    return c;
}

}  // namespace orbitale
