#include "orbitale/algpoint/algpoint.hpp"

#include "orbitale/ffpoly/factor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace orbitale {

RatPoly ratpoly_x(std::uint32_t p) { return RatPoly::x(RatFunc(p)); }

RatPoly binomial(std::int64_t m, const RatFunc& a) {
    if (m < 1) throw PreconditionError("binomial exponent must be positive");
    return RatPoly::monomial(a.one(), static_cast<std::size_t>(m)) - RatPoly::constant(a);
}

std::string to_string(const RatPoly& f) {
    return poly_to_string(f, "x", [](const RatFunc& c) { return c.to_string(); });
}

namespace {

std::uint32_t eval_at(const RatFunc& a, std::uint32_t c) {
    const std::uint32_t p = a.characteristic();
    return static_cast<std::uint32_t>(std::uint64_t{a.num().eval(c)} * inv_mod_p(a.den().eval(c), p) % p);
}

// Subset sums in (0, n) of a multiset of factor degrees.
std::vector<bool> proper_subset_sums(const Factorization& fz, int n) {
    std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
    reach[0] = true;
    for (auto& fp : fz.factors)
        for (int k = 0; k < fp.multiplicity; ++k)
            for (int s = n; s >= fp.factor.degree(); --s)
                if (reach[static_cast<std::size_t>(s - fp.factor.degree())]) reach[static_cast<std::size_t>(s)] = true;
    reach[0] = false;
    reach[static_cast<std::size_t>(n)] = false;
    return reach;
}

// Reductions t -> c that keep all coefficients regular. A factor of degree k
// over F_p(t) reduces to a factor of degree k at every such c, so if no k in
// (0, n) is a subset sum of factor degrees at every c, f is irreducible.
bool certify_by_specialization(const RatPoly& f) {
    const std::uint32_t p = f.lead().characteristic();
    const int n = f.degree();
    std::vector<bool> common(static_cast<std::size_t>(n) + 1, true);
    const std::uint32_t limit = std::min<std::uint32_t>(p, 64);
    for (std::uint32_t c = 0; c < limit; ++c) {
        bool regular = true;
        for (auto& a : f.coeffs())
            if (a.den().eval(c) == 0) regular = false;
        if (!regular) continue;
        std::vector<std::uint32_t> red;
        for (auto& a : f.coeffs()) red.push_back(eval_at(a, c));
        Factorization fz = factor(FpPoly(p, red));
        auto sums = proper_subset_sums(fz, n);
        bool open = false;
        for (int k = 1; k < n; ++k) {
            common[static_cast<std::size_t>(k)] = common[static_cast<std::size_t>(k)] && sums[static_cast<std::size_t>(k)];
            open = open || common[static_cast<std::size_t>(k)];
        }
        if (!open) return true;
    }
    return false;
}

bool is_binomial(const RatPoly& f) {
    for (int i = 1; i < f.degree(); ++i)
        if (!f[static_cast<std::size_t>(i)].is_zero()) return false;
    return true;
}

std::uint32_t smallest_root_mod_p(std::uint32_t c, std::int64_t l, std::uint32_t p) {
    for (std::uint32_t r = 1; r < p; ++r)
        if (pow_mod(r, static_cast<std::uint64_t>(l), p) == c) return r;
    return 0;
}

}  // namespace

AlgebraicPoint AlgebraicPoint::from_minpoly(const RatPoly& f0) {
    if (f0.degree() < 1) throw PreconditionError("minimal polynomial must have positive degree");
    RatPoly f = f0.monic();
    if (f.derivative().is_zero()) throw PreconditionError("minimal polynomial is inseparable");
    if (f.degree() == 1) return AlgebraicPoint(f);
    const std::uint32_t p = f.lead().characteristic();
    if (is_binomial(f) && f.degree() % p != 0) {
        if (!f[0].is_zero() && is_irreducible_xm_minus_a(f.degree(), -f[0])) return AlgebraicPoint(f);
        throw PreconditionError("minimal polynomial " + orbitale::to_string(f) + " is reducible");
    }
    if (f[0].is_zero()) throw PreconditionError("minimal polynomial " + orbitale::to_string(f) + " is reducible");
    if (certify_by_specialization(f)) return AlgebraicPoint(f);
    throw PreconditionError("cannot certify irreducibility of " + orbitale::to_string(f));
}

AlgebraicPoint AlgebraicPoint::rational(const RatFunc& beta) { return AlgebraicPoint(ratpoly_x(beta.characteristic()) - RatPoly::constant(beta)); }

AlgebraicPoint AlgebraicPoint::from_certified(RatPoly monic_irreducible) { return AlgebraicPoint(std::move(monic_irreducible)); }

std::vector<Rational> NewtonPolygon::root_valuations() const {
    std::vector<Rational> out;
    for (auto& s : segments)
        for (std::int64_t i = 0; i < s.length; ++i) out.push_back(-s.slope);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t NewtonPolygon::total_length() const {
    std::int64_t n = zero_root_count;
    for (auto& s : segments) n += s.length;
    return n;
}

std::vector<NewtonSegment> lower_hull(const std::vector<std::pair<std::int64_t, Rational>>& points) {
    auto slope = [](const auto& a, const auto& b) { return (b.second - a.second) / Rational(b.first - a.first); };
    std::vector<std::pair<std::int64_t, Rational>> hull;
    for (auto& pt : points) {
        while (hull.size() >= 2 && slope(hull[hull.size() - 2], hull.back()) >= slope(hull.back(), pt)) hull.pop_back();
        hull.push_back(pt);
    }
    std::vector<NewtonSegment> segs;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) segs.push_back({slope(hull[i], hull[i + 1]), hull[i + 1].first - hull[i].first});
    return segs;
}

NewtonPolygon newton_polygon(const RatPoly& f, const Place& v) {
    if (f.is_zero()) throw PreconditionError("Newton polygon of the zero polynomial");
    NewtonPolygon np;
    std::size_t z = 0;
    while (f[z].is_zero()) ++z;
    np.zero_root_count = static_cast<std::int64_t>(z);
    std::vector<std::pair<std::int64_t, Rational>> pts;
    for (std::size_t i = z; i < f.coeffs().size(); ++i)
        if (!f[i].is_zero()) pts.emplace_back(static_cast<std::int64_t>(i - z), Rational(*valuation(f[i], v)));
    np.segments = lower_hull(pts);
    return np;
}

LogAbs conj_log_sum(const RatPoly& f, const RatFunc& alpha, const Place& v) {
    const RatFunc value = f.eval(alpha);
    if (value.is_zero()) throw PreconditionError("alpha is a root of the polynomial");
    return log_abs(value / f.lead(), v);
}

std::vector<LogAbs> conj_distance_multiset(const RatPoly& f, const RatFunc& alpha, const Place& v) {
    const RatPoly g = f.taylor_shift(alpha);
    if (g.is_zero() || g[0].is_zero()) throw PreconditionError("alpha is a root of the polynomial");
    std::vector<LogAbs> out;
    for (auto& s : newton_polygon(g, v).segments)
        for (std::int64_t i = 0; i < s.length; ++i) out.push_back(Rational(v.degree()) * s.slope);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Place> coefficient_places(const RatPoly& f) {
    std::set<Place> places;
    places.insert(Place::infinity(f.lead().characteristic()));
    for (auto& a : f.coeffs())
        if (!a.is_zero())
            for (auto& pv : support(a)) places.insert(pv.place);
    return {places.begin(), places.end()};
}

Rational height_algebraic(const AlgebraicPoint& gamma) {
    Rational sum(0);
    for (auto& v : coefficient_places(gamma.minpoly()))
        for (auto& s : newton_polygon(gamma.minpoly(), v).segments) {
            const Rational contrib = Rational(v.degree()) * s.slope;
            if (contrib > Rational(0)) sum += contrib * Rational(s.length);
        }
    return sum / Rational(gamma.degree());
}

std::optional<RatFunc> lth_power_test(const RatFunc& a, std::int64_t l) {
    if (a.is_zero()) throw PreconditionError("l-th power test of zero");
    if (l < 1) throw PreconditionError("l must be positive");
    const std::uint32_t p = a.characteristic();
    RatFunc root = a.one();
    for (auto& pv : support(a)) {
        if (pv.valuation % l != 0) return std::nullopt;
        if (!pv.place.is_infinite()) root = root * RatFunc(pv.place.poly()).pow(pv.valuation / l);
    }
    const RatFunc rest = a / root.pow(l);  // a unit constant
    const std::uint32_t r = smallest_root_mod_p(rest.num().lead(), l, p);
    if (r == 0) return std::nullopt;
    return root * RatFunc::constant(p, r);
}

bool is_irreducible_xm_minus_a(std::int64_t m, const RatFunc& a) {
    const std::uint32_t p = a.characteristic();
    if (m < 1) throw PreconditionError("exponent must be positive");
    if (m % p == 0) throw WildCaseError("x^m - a with p | m");
    if (a.is_zero()) throw PreconditionError("x^m - 0 is not squarefree");
    for (auto l : prime_factors(static_cast<std::uint64_t>(m)))
        if (lth_power_test(a, static_cast<std::int64_t>(l))) return false;
    if (m % 4 == 0) {
        const RatFunc w = -a / a.from_int(4);
        if (auto s = lth_power_test(w, 2))
            if (lth_power_test(*s, 2) || lth_power_test(-*s, 2)) return false;
    }
    return true;
}

std::vector<AlgebraicPoint> factor_binomial(std::int64_t m, const RatFunc& a) {
    const std::uint32_t p = a.characteristic();
    if (m < 1) throw PreconditionError("exponent must be positive");
    if (m % p == 0) throw WildCaseError("x^m - a with p | m");
    if (a.is_zero()) throw PreconditionError("x^m - 0 is not squarefree");
    const RatFunc one = a.one();
    std::vector<AlgebraicPoint> out;

    if (a.is_constant()) {
        FpPoly f = FpPoly::monomial(p, 1, static_cast<std::size_t>(m)) - FpPoly::constant(p, a.num().lead());
        for (auto& fp : factor(f).factors) {
            std::vector<RatFunc> c;
            for (auto x : fp.factor.coeffs()) c.push_back(RatFunc::constant(p, x));
            out.push_back(AlgebraicPoint::from_certified(RatPoly(std::move(c))));
        }
        return out;
    }

    // a = c * b^e with e the gcd of the exponents in the factorization of a.
    auto sup = support(a);
    std::int64_t e = 0;
    for (auto& pv : sup) e = std::gcd(e, pv.valuation);
    RatFunc b = one;
    for (auto& pv : sup)
        if (!pv.place.is_infinite()) b = b * RatFunc(pv.place.poly()).pow(pv.valuation / e);
    const RatFunc c = a / b.pow(e);
    const std::int64_t g = std::gcd(m, e), m1 = m / g, e1 = e / g;
    const RatFunc Y = b.pow(e1);

    // Each irreducible h(y) | y^g - c of degree k gives Y^k h(x^{m1} / Y).
    FpPoly yg = FpPoly::monomial(p, 1, static_cast<std::size_t>(g)) - FpPoly::constant(p, c.num().lead());
    for (auto& fp : factor(yg).factors) {
        const int k = fp.factor.degree();
        std::vector<RatFunc> coeffs(static_cast<std::size_t>(k * m1) + 1, a.zero());
        for (int j = 0; j <= k; ++j)
            coeffs[static_cast<std::size_t>(j * m1)] = RatFunc::constant(p, fp.factor.coeff(static_cast<std::size_t>(j))) * Y.pow(k - j);
        out.push_back(AlgebraicPoint::from_certified(RatPoly(std::move(coeffs))));
    }
    return out;
}

}  // namespace orbitale
