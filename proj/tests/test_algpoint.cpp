#include "doctest.h"

#include "orbitale/algpoint/algpoint.hpp"
#include "orbitale/ffpoly/resultant.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace orbitale;
using orbitale::testing::random_nonconstant;
using orbitale::testing::random_ratfunc;

namespace {

RatFunc R(std::uint32_t p, std::vector<std::int64_t> num, std::vector<std::int64_t> den = {1}) {
    return RatFunc(FpPoly::from_signed(p, num), FpPoly::from_signed(p, den));
}
Place fin(std::uint32_t p, std::vector<std::int64_t> c) { return Place::finite(FpPoly::from_signed(p, c)); }

RatPoly from_roots(const std::vector<RatFunc>& roots, std::uint32_t p) {
    RatPoly f = RatPoly::constant(RatFunc::constant(p, 1));
    for (auto& r : roots) f = f * (ratpoly_x(p) - RatPoly::constant(r));
    return f;
}

// Lower hull by brute force: a point is a vertex iff no segment between two
// other points passes strictly below it; slopes then read off consecutive
// vertices.
std::vector<NewtonSegment> brute_hull(const std::vector<std::pair<std::int64_t, Rational>>& pts) {
    std::vector<std::pair<std::int64_t, Rational>> verts;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        bool vertex = true;
        for (std::size_t i = 0; i < pts.size() && vertex; ++i)
            for (std::size_t j = i + 1; j < pts.size() && vertex; ++j) {
                if (!(pts[i].first < pts[k].first && pts[k].first < pts[j].first)) continue;
                Rational on_line = pts[i].second + (pts[j].second - pts[i].second) * Rational(pts[k].first - pts[i].first) /
                                                       Rational(pts[j].first - pts[i].first);
                if (on_line <= pts[k].second) vertex = false;
            }
        if (vertex) verts.push_back(pts[k]);
    }
    std::vector<NewtonSegment> out;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        out.push_back({(verts[i + 1].second - verts[i].second) / Rational(verts[i + 1].first - verts[i].first),
                       verts[i + 1].first - verts[i].first});
    return out;
}

std::vector<Place> test_places(std::uint32_t p) {
    auto pl = finite_places_up_to(p, 2);
    pl.insert(pl.begin(), Place::infinity(p));
    return pl;
}

}  // namespace

TEST_CASE("Newton polygon slope convention") {
    const RatFunc t = RatFunc::t(3);
    RatPoly f = binomial(2, t);
    auto at_t = newton_polygon(f, fin(3, {0, 1}));
    REQUIRE(at_t.segments.size() == 1);
    CHECK(at_t.segments[0].slope == Rational(-1, 2));
    CHECK(at_t.segments[0].length == 2);
    CHECK(at_t.root_valuations() == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    auto at_inf = newton_polygon(f, Place::infinity(3));
    REQUIRE(at_inf.segments.size() == 1);
    CHECK(at_inf.segments[0].slope == Rational(1, 2));
    CHECK(at_inf.root_valuations() == std::vector<Rational>{Rational(-1, 2), Rational(-1, 2)});

    const RatFunc a = R(3, {1, 0, 1}, {0, 1});
    for (auto& v : test_places(3)) {
        auto np = newton_polygon(ratpoly_x(3) - RatPoly::constant(a), v);
        CHECK(np.root_valuations() == std::vector<Rational>{Rational(*valuation(a, v))});
    }
    CHECK_THROWS_AS(newton_polygon(RatPoly(), Place::infinity(3)), PreconditionError);

    // x^3 (x - t): zero roots are split off.
    RatPoly g = from_roots({RatFunc(3), RatFunc(3), RatFunc(3), t}, 3);
    auto ng = newton_polygon(g, fin(3, {0, 1}));
    CHECK(ng.zero_root_count == 3);
    CHECK(ng.root_valuations() == std::vector<Rational>{Rational(1)});
    CHECK(ng.total_length() == 4);
}

TEST_CASE("Newton polygon against known roots") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int it = 0; it < 60; ++it) {
            std::vector<RatFunc> roots;
            const int n = 1 + static_cast<int>(rng() % 5);
            for (int i = 0; i < n; ++i) roots.push_back(random_ratfunc(p, 3, rng));
            RatPoly f = from_roots(roots, p);
            for (auto& v : test_places(p)) {
                std::vector<Rational> expect;
                for (auto& r : roots) expect.push_back(Rational(*valuation(r, v)));
                std::sort(expect.begin(), expect.end());
                auto np = newton_polygon(f, v);
                CHECK(np.root_valuations() == expect);
                CHECK(np.total_length() == f.degree());
                for (std::size_t i = 1; i < np.segments.size(); ++i) CHECK(np.segments[i - 1].slope < np.segments[i].slope);
            }
        }
}

TEST_CASE("lower hull matches brute force") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 500; ++it) {
        std::vector<std::pair<std::int64_t, Rational>> pts;
        std::int64_t x = 0;
        const int n = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < n; ++i) {
            pts.emplace_back(x, Rational(static_cast<std::int64_t>(rng() % 11) - 5));
            x += 1 + static_cast<std::int64_t>(rng() % 3);
        }
        CHECK(lower_hull(pts) == brute_hull(pts));
    }
}

TEST_CASE("conj_log_sum and conj_distance_multiset examples") {
    const RatFunc t = RatFunc::t(3);
    const Place pt = fin(3, {0, 1});
    CHECK(conj_log_sum(binomial(2, t), RatFunc(3), pt) == Rational(-1));
    CHECK(conj_log_sum(binomial(2, t + t.one()), t, Place::infinity(3)) == Rational(2));
    CHECK(conj_distance_multiset(binomial(2, t), RatFunc(3), pt) == std::vector<LogAbs>{Rational(-1, 2), Rational(-1, 2)});
    CHECK(conj_distance_multiset(binomial(2, t), t.one(), pt) == std::vector<LogAbs>{Rational(0), Rational(0)});
    const RatFunc beta = R(3, {1, 1, 1}, {0, 1});
    for (auto& v : test_places(3)) {
        RatPoly lin = ratpoly_x(3) - RatPoly::constant(beta);
        CHECK(conj_distance_multiset(lin, t, v) == std::vector<LogAbs>{log_abs(t - beta, v)});
        CHECK(conj_log_sum(lin, t, v) == log_abs(t - beta, v));
    }
    CHECK_THROWS_AS(conj_log_sum(binomial(2, t * t), t, pt), PreconditionError);
    CHECK_THROWS_AS(conj_distance_multiset(binomial(2, t * t), -t, pt), PreconditionError);
}

TEST_CASE("distance multiset against known roots") {
    std::mt19937_64 rng(13);
    for (std::uint32_t p : {3u, 5u})
        for (int it = 0; it < 50; ++it) {
            std::vector<RatFunc> roots;
            for (int i = 0; i < 4; ++i) roots.push_back(random_ratfunc(p, 3, rng));
            const RatFunc alpha = random_ratfunc(p, 3, rng);
            if (std::find(roots.begin(), roots.end(), alpha) != roots.end()) continue;
            RatPoly f = from_roots(roots, p);
            for (auto& v : test_places(p)) {
                std::vector<LogAbs> expect;
                for (auto& r : roots) expect.push_back(log_abs(alpha - r, v));
                std::sort(expect.begin(), expect.end());
                CHECK(conj_distance_multiset(f, alpha, v) == expect);
            }
        }
}

TEST_CASE("polygon, evaluation and resultant agree") {
    std::mt19937_64 rng(14);
    int checked = 0;
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int it = 0; it < 40; ++it) {
            std::vector<RatFunc> c;
            const int n = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < n; ++i) c.push_back(random_ratfunc(p, 3, rng));
            c.push_back(random_ratfunc(p, 2, rng));
            RatPoly f(c);
            const RatFunc alpha = random_ratfunc(p, 3, rng);
            if (f.eval(alpha).is_zero()) continue;
            const RatFunc res = resultant(f, ratpoly_x(p) - RatPoly::constant(alpha));
            for (auto& v : test_places(p)) {
                auto ms = conj_distance_multiset(f, alpha, v);
                Rational sum(0);
                for (auto& x : ms) sum += x;
                const LogAbs direct = conj_log_sum(f, alpha, v);
                CHECK(sum == direct);
                CHECK(direct == log_abs(res / f.lead(), v));
                CHECK(static_cast<int>(ms.size()) == f.degree());
                ++checked;
            }
        }
    CHECK(checked > 500);
}

TEST_CASE("lth_power_test") {
    const RatFunc t = RatFunc::t(3);
    auto r = lth_power_test(t * t, 2);
    REQUIRE(r);
    CHECK(*r * *r == t * t);
    CHECK(*r == t);
    CHECK(!lth_power_test(t, 2));
    CHECK(*lth_power_test(t.one(), 5) == t.one());
    CHECK(!lth_power_test(RatFunc::constant(3, 2), 2));
    CHECK(*lth_power_test(RatFunc::constant(7, 6), 3) == RatFunc::constant(7, 3));  // 3^3 = 27 = 6

    std::mt19937_64 rng(15);
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::int64_t l : {2, 3, 5})
            for (int it = 0; it < 20; ++it) {
                const RatFunc b = random_ratfunc(p, 3, rng);
                auto root = lth_power_test(b.pow(l), l);
                REQUIRE(root);
                CHECK(root->pow(l) == b.pow(l));
                const RatFunc a = random_ratfunc(p, 4, rng);
                if (auto ra = lth_power_test(a, l)) CHECK(ra->pow(l) == a);
            }
}

TEST_CASE("x^m - a criterion") {
    const RatFunc t = RatFunc::t(3);
    CHECK(is_irreducible_xm_minus_a(2, t));
    CHECK(!is_irreducible_xm_minus_a(2, t * t));
    CHECK(!is_irreducible_xm_minus_a(4, t.pow(4)));
    CHECK(is_irreducible_xm_minus_a(4, t + t.one()));
    CHECK_THROWS_AS(is_irreducible_xm_minus_a(3, t), WildCaseError);
    // x^4 + 4 t^4 = (x^2 + 2tx + 2t^2)(x^2 - 2tx + 2t^2) over F_5.
    const RatFunc t5 = RatFunc::t(5);
    CHECK(!is_irreducible_xm_minus_a(4, -RatFunc::constant(5, 4) * t5.pow(4)));
    CHECK(factor_binomial(4, -RatFunc::constant(5, 4) * t5.pow(4)).size() > 1);
    // Over a constant: x^2 - 2 irreducible over F_3, x^2 - 1 not.
    CHECK(is_irreducible_xm_minus_a(2, RatFunc::constant(3, 2)));
    CHECK(!is_irreducible_xm_minus_a(2, RatFunc::constant(3, 1)));
}

TEST_CASE("binomial factorization") {
    std::mt19937_64 rng(16);
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::int64_t m : {1, 2, 3, 4, 6, 8, 9, 12}) {
            if (m % p == 0) continue;
            for (int it = 0; it < 12; ++it) {
                RatFunc a = random_ratfunc(p, 3, rng);
                if (it % 3 == 1) a = a.pow(static_cast<std::int64_t>(1 + rng() % 4)) * RatFunc::constant(p, 1 + rng() % (p - 1));
                if (it % 3 == 2) a = RatFunc::constant(p, 1 + rng() % (p - 1));
                auto fs = factor_binomial(m, a);
                RatPoly prod = RatPoly::constant(a.one());
                int deg = 0;
                for (auto& g : fs) {
                    prod = prod * g.minpoly();
                    deg += g.degree();
                    CHECK(g.minpoly().lead().is_one());
                }
                CHECK(prod == binomial(m, a));
                CHECK(deg == m);
                CHECK((fs.size() == 1) == is_irreducible_xm_minus_a(m, a));
            }
        }
    // x^4 - t^2 = (x^2 - t)(x^2 + t) over F_3.
    const RatFunc t = RatFunc::t(3);
    auto fs = factor_binomial(4, t * t);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].minpoly() == binomial(2, -t));
    CHECK(fs[1].minpoly() == binomial(2, t));
    // x^2 - t^2 over F_3 splits into linear factors.
    CHECK(factor_binomial(2, t * t).size() == 2);
}

TEST_CASE("binomial factors pass independent certification") {
    // Non-binomial factors come from y^g - c splitting over F_p; the
    // specialization certificate in from_minpoly must accept them.
    // x^3 - t^3 = (x - t)(x^2 + tx + t^2) over F_2.
    const RatFunc t2 = RatFunc::t(2);
    auto f2 = factor_binomial(3, t2.pow(3));
    REQUIRE(f2.size() == 2);
    CHECK(f2[1].minpoly() == RatPoly({t2 * t2, t2, t2.one()}));
    for (auto& g : f2) CHECK(AlgebraicPoint::from_minpoly(g.minpoly()) == g);
    // x^6 - t^3 over F_7: three quadratic binomials x^2 - c t with c^3 = 1.
    const RatFunc t7 = RatFunc::t(7);
    auto f7 = factor_binomial(6, t7.pow(3));
    CHECK(f7.size() == 3);
    for (auto& g : f7) CHECK(AlgebraicPoint::from_minpoly(g.minpoly()) == g);
}

TEST_CASE("AlgebraicPoint construction") {
    const RatFunc t = RatFunc::t(3);
    CHECK(AlgebraicPoint::from_minpoly(binomial(2, t)).degree() == 2);
    CHECK_THROWS_AS(AlgebraicPoint::from_minpoly(binomial(2, t * t)), PreconditionError);
    CHECK_THROWS_AS(AlgebraicPoint::from_minpoly(binomial(3, t)), PreconditionError);  // inseparable
    CHECK_THROWS_AS(AlgebraicPoint::from_minpoly(RatPoly::constant(t)), PreconditionError);
    // x^2 + x + t: specialization t = 2 gives x^2 + x + 2, irreducible mod 3.
    RatPoly f({t, t.one(), t.one()});
    CHECK(AlgebraicPoint::from_minpoly(f).minpoly() == f);
    // Monic normalization.
    CHECK(AlgebraicPoint::from_minpoly(binomial(2, t).scaled(t)).minpoly() == binomial(2, t));
    // (x - t)(x - t - 1) is reducible: every specialization splits.
    CHECK_THROWS_AS(AlgebraicPoint::from_minpoly(from_roots({t, t + t.one()}, 3)), PreconditionError);
    CHECK(AlgebraicPoint::rational(t).minpoly() == ratpoly_x(3) - RatPoly::constant(t));
}

TEST_CASE("algebraic height") {
    const RatFunc t = RatFunc::t(3);
    CHECK(height_algebraic(AlgebraicPoint::from_minpoly(binomial(2, t))) == Rational(1, 2));
    for (std::int64_t c = 1; c < 7; ++c)
        CHECK(height_algebraic(AlgebraicPoint::rational(RatFunc::constant(7, c))) == Rational(0));
    CHECK(height_algebraic(AlgebraicPoint::rational(RatFunc(7))) == Rational(0));

    std::mt19937_64 rng(17);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (int it = 0; it < 30; ++it) {
            const RatFunc b = random_ratfunc(p, 5, rng);
            CHECK(height_algebraic(AlgebraicPoint::rational(b)) == height(b));
        }
        for (std::int64_t m : {2, 3, 4, 8}) {
            if (m % p == 0) continue;
            int hits = 0;
            for (int it = 0; it < 40 && hits < 10; ++it) {
                const RatFunc a = random_nonconstant(p, 4, rng);
                if (!is_irreducible_xm_minus_a(m, a)) continue;
                ++hits;
                CHECK(height_algebraic(AlgebraicPoint::from_certified(binomial(m, a))) * Rational(m) == height(a));
            }
            CHECK(hits > 0);
        }
    }
    // Every factor of x^m - a has height h(a)/m, since all roots do.
    for (auto& g : factor_binomial(4, RatFunc::t(5).pow(2) * RatFunc::constant(5, 2)))
        CHECK(height_algebraic(g) == Rational(2, 4));
    for (auto& g : factor_binomial(6, RatFunc::t(5).pow(3))) CHECK(height_algebraic(g) == Rational(3, 6));
}

TEST_CASE("algebraic height is independent of place order") {
    const RatFunc t = RatFunc::t(5);
    const RatPoly f = binomial(3, (t * t + RatFunc::constant(5, 2)) / (t + RatFunc::constant(5, 2)));
    auto gamma = AlgebraicPoint::from_minpoly(f);
    Rational forward(0), backward(0);
    auto places = coefficient_places(f);
    auto contrib = [&](const Place& v) {
        Rational s(0);
        for (auto& seg : newton_polygon(f, v).segments)
            if (seg.slope > Rational(0)) s += Rational(v.degree()) * seg.slope * Rational(seg.length);
        return s;
    };
    for (auto& v : places) forward += contrib(v);
    for (auto it = places.rbegin(); it != places.rend(); ++it) backward += contrib(*it);
    CHECK(forward == backward);
    CHECK(forward / Rational(3) == height_algebraic(gamma));
    CHECK(height_algebraic(gamma) == Rational(2, 3));
}
