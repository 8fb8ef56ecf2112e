#include "doctest.h"

#include "orbitale/localfield/localfield.hpp"
#include "test_util.hpp"

#include "orbitale/ffpoly/cyclotomic.hpp"

#include <set>
#include <tuple>

using namespace orbitale;
using orbitale::testing::random_nonzero_poly;
using orbitale::testing::random_ratfunc;

namespace {

RatFunc R(std::uint32_t p, std::vector<std::int64_t> num, std::vector<std::int64_t> den = {1}) {
    return RatFunc(FpPoly::from_signed(p, num), FpPoly::from_signed(p, den));
}
Place fin(std::uint32_t p, std::vector<std::int64_t> c) { return Place::finite(FpPoly::from_signed(p, c)); }

// Power series long division over F_p at the place t: coefficients of
// a/b up to t^(n-1), for b(0) != 0.
std::vector<std::uint32_t> series_div(const FpPoly& a, const FpPoly& b, int n) {
    const std::uint32_t p = a.modulus();
    std::vector<std::int64_t> rem(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) rem[static_cast<std::size_t>(i)] = a.coeff(static_cast<std::size_t>(i));
    const std::int64_t inv = inv_mod_p(b.coeff(0), p);
    std::vector<std::uint32_t> q(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::int64_t c = ((rem[static_cast<std::size_t>(i)] % p + p) % p) * inv % p;
        q[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c);
        for (int j = 0; i + j < n; ++j) rem[static_cast<std::size_t>(i + j)] -= c * b.coeff(static_cast<std::size_t>(j));
    }
    return q;
}

std::vector<Place> places(std::uint32_t p) {
    auto pl = finite_places_up_to(p, 2);
    pl.insert(pl.begin(), Place::infinity(p));
    return pl;
}

LaurentApprox exact_const(const Place& v, std::uint32_t c) {
    Completion kv(v);
    return LaurentApprox::constant(ExtFieldElem::from_int(kv.residue_field(), c), kv.uniformizer());
}

}  // namespace

TEST_CASE("completion examples") {
    const Place t3 = fin(3, {0, 1});
    CHECK(complete(R(3, {1}, {1, -1}), t3, 4).to_string() == "1 + t + t^2 + t^3 + O(t^4)");
    CHECK(complete(R(3, {0, 1}, {1, 1}), t3, 4).to_string() == "t + 2*t^2 + t^3 + O(t^4)");
    CHECK(complete(RatFunc::t(3), Place::infinity(3), 3).to_string() == "u^-1 + O(u^3)");
    CHECK(complete(R(5, {1, 1}), fin(5, {-1, 1}), 3).to_string() == "2 + (t+4) + O((t+4)^3)");
    CHECK_THROWS_AS(complete(RatFunc(3), t3, 4), PreconditionError);
    CHECK_THROWS_AS(complete(R(3, {0, 0, 1}), t3, 2), PreconditionError);
}

TEST_CASE("completion matches series long division") {
    std::mt19937_64 rng(21);
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int it = 0; it < 50; ++it) {
            FpPoly a = random_nonzero_poly(p, 6, rng), b = random_nonzero_poly(p, 6, rng);
            if (b.coeff(0) == 0) b = b + FpPoly::constant(p, 1);
            if (b.coeff(0) == 0) continue;
            const RatFunc alpha(a, b);
            if (*valuation(alpha, fin(p, {0, 1})) < 0) continue;
            const int n = 20;
            auto q = series_div(a, b, n);
            const LaurentApprox s = complete(alpha, fin(p, {0, 1}), n);
            CHECK(s.prec() == n);
            for (int i = 0; i < n; ++i) CHECK(s.coeff(i).value().coeff(0) == q[static_cast<std::size_t>(i)]);
        }
}

TEST_CASE("completion is a ring homomorphism") {
    std::mt19937_64 rng(22);
    for (std::uint32_t p : {2u, 3u, 5u})
        for (auto& v : places(p))
            for (int it = 0; it < 8; ++it) {
                const RatFunc a = random_ratfunc(p, 4, rng), b = random_ratfunc(p, 4, rng);
                const std::int64_t prec = 24;
                auto ca = complete(a, v, prec), cb = complete(b, v, prec);
                CHECK(*ca.valuation() == *valuation(a, v));
                CHECK(agrees(complete(a * b, v, prec + 10), ca * cb));
                CHECK((ca * cb).prec() >= std::min(*valuation(a, v), *valuation(b, v)) + prec - 10);
                if (!(a + b).is_zero()) CHECK(agrees(complete(a + b, v, prec), ca + cb));
                CHECK(agrees(complete(a / b, v, prec), ca / cb));
            }
}

TEST_CASE("degree-two place embedding") {
    // At P = t^2 + 1 over F_3 the image of P is the uniformizer itself.
    const Place v = fin(3, {1, 0, 1});
    Completion kv(v);
    CHECK(kv.residue_field()->degree() == 2);
    const LaurentApprox s = complete(R(3, {1, 0, 1}), v, 12);
    CHECK(s.to_string() == "(t^2+1) + O((t^2+1)^12)");
    const LaurentApprox T = kv.t_image(16);
    CHECK(agrees(T * T + exact_const(v, 1), LaurentApprox::monomial(ExtFieldElem::from_int(kv.residue_field(), 1), 1, kv.uniformizer())));
    CHECK(T.coeff(0) == ExtFieldElem::generator(kv.residue_field()));
}

TEST_CASE("series arithmetic tracks precision") {
    const Place t3 = fin(3, {0, 1});
    auto a = complete(R(3, {1}, {1, -1}), t3, 5);   // 1 + t + ... + O(t^5)
    auto b = complete(R(3, {0, 0, 1}), t3, 6);     // t^2 + O(t^6)
    CHECK((a * b).prec() == 6);
    CHECK((a + b).prec() == 5);
    auto c = a - a;
    CHECK(c.is_zero_approx());
    CHECK(c.prec() == 5);
    CHECK_THROWS_AS(c.valuation(), PrecisionExhausted);
    CHECK_THROWS_AS(a.coeff(5), PrecisionExhausted);
    auto inv = b.inverse();
    CHECK(inv.lead_exponent() == -2);
    CHECK(inv.prec() == 2);
    // Frobenius in characteristic 3.
    auto f = complete(R(3, {1, 1}), t3, 4).pow(3);
    CHECK(f.to_string() == "1 + t^3 + O(t^12)");
}

TEST_CASE("hensel_lift examples") {
    const Place t3 = fin(3, {0, 1});
    const RatFunc t = RatFunc::t(3);
    const RatPoly f = binomial(2, t + t.one());
    auto root = hensel_lift(f, t3, exact_const(t3, 1), 10);
    CHECK(root.prec() == 10);
    CHECK(root.coeff(0).value().coeff(0) == 1);
    CHECK(root.coeff(1).value().coeff(0) == 2);
    CHECK(root.coeff(2).value().coeff(0) == 1);
    CHECK(agrees(root * root, complete(t + t.one(), t3, 10)));

    const RatPoly g = binomial(2, t.one());
    CHECK(hensel_lift(g, t3, exact_const(t3, 1), 10) == exact_const(t3, 1));

    CHECK_THROWS_AS(hensel_lift(binomial(3, t.one()), t3, exact_const(t3, 1), 10), WildCaseError);
    CHECK_THROWS_AS(hensel_lift(binomial(2, t), t3, exact_const(t3, 1), 10), PreconditionError);
    CHECK_THROWS_AS(hensel_lift(binomial(2, t), t3, LaurentApprox::zero(Completion(t3).residue_field(), kExact, "t"), 10),
                    PreconditionError);
}

TEST_CASE("hensel_lift contract on random tame instances") {
    std::mt19937_64 rng(23);
    int done = 0;
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::int64_t m : {2, 4, 6}) {
            if (m % p == 0) continue;
            for (int it = 0; it < 10; ++it) {
                // beta = zeta + t*h with zeta^m = 1 in F_p.
                std::uint32_t zeta = 0;
                for (std::uint32_t z = 1 + static_cast<std::uint32_t>(rng() % (p - 1));; z = z % (p - 1) + 1)
                    if (pow_mod(z, static_cast<std::uint64_t>(m), p) == 1) {
                        zeta = z;
                        break;
                    }
                const Place v = fin(p, {0, 1});
                RatFunc h = random_ratfunc(p, 3, rng);
                if (*valuation(h, v) < 0) h = h.inverse();
                const RatFunc beta = RatFunc::constant(p, zeta) + RatFunc::t(p) * h;
                const RatPoly f = binomial(m, beta.one());
                const std::int64_t prec = 40;
                const LaurentApprox x0 = complete(beta, v, prec + 10);
                const LaurentApprox root = hensel_lift(f, v, x0, prec);
                Completion kv(v);
                CHECK(eval_series(f, kv, root.as_exact(), prec + 20).is_zero_approx());
                CHECK(eval_series(f, kv, root.as_exact(), prec + 20).prec() >= prec);
                // |beta - zeta| <= |f(beta)|.
                const std::int64_t vf = *valuation(f.eval(beta), v);
                const LaurentApprox diff = (root - x0).truncated(prec);
                CHECK((diff.is_zero_approx() ? diff.prec() : diff.lead_exponent()) >= vf);
                // The root is the constant zeta.
                CHECK(agrees(root, exact_const(v, zeta)));
                // Doubling the precision keeps the certified coefficients.
                CHECK(agrees(root, hensel_lift(f, v, complete(beta, v, 2 * prec + 10), 2 * prec)));
                ++done;
            }
        }
    CHECK(done >= 60);
}

TEST_CASE("hensel_lift at infinity and at a degree-two place") {
    const RatFunc t = RatFunc::t(5);
    // x^2 - (t^2 + 1) at infinity: a root t * sqrt(1 + 1/t^2).
    const RatPoly f = binomial(2, t * t + t.one());
    const Place inf = Place::infinity(5);
    const LaurentApprox x0 = complete(t, inf, 10);
    const LaurentApprox root = hensel_lift(f, inf, x0, 12);
    CHECK(agrees(root * root, complete(t * t + t.one(), inf, 12)));

    const Place q = fin(3, {1, 0, 1});
    const RatFunc s = RatFunc::t(3);
    Completion kv(q);
    // x^2 - (1 + P) has root near 1 at P.
    const RatPoly g = binomial(2, s * s + s.one() + s.one());
    const LaurentApprox r = hensel_lift(g, q, exact_const(q, 1), 8);
    CHECK(agrees(r * r, complete(s * s + s.one() + s.one(), q, 8)));
}

TEST_CASE("unit_power_distance examples") {
    const Place t3 = fin(3, {0, 1});
    const RatFunc beta = R(3, {1, 1});
    auto tame = unit_power_distance(beta, t3, 2, 10);
    REQUIRE(tame.size() == 11);
    for (auto& r : tame) CHECK(r == PowerDistance{PowerDistance::Kind::Finite, 1});

    // Frobenius is exact, so (1 + t + O(t^64))^(3^n) = 1 + t^(3^n) + O(t^(64*3^n)).
    auto wild = unit_power_distance(beta, t3, 3, 10);
    for (std::int64_t n = 0; n <= 10; ++n)
        CHECK(wild[static_cast<std::size_t>(n)] == PowerDistance{PowerDistance::Kind::Finite, static_cast<std::int64_t>(ipow(3, static_cast<unsigned>(n)))});
    // A series known only to 1 + O(t^5) cannot certify anything: reported,
    // not guessed.
    const LaurentApprox vague = exact_const(t3, 1).truncated(5);
    auto ex = unit_power_distance(vague, 2, 2);
    CHECK(ex[0].kind == PowerDistance::Kind::Exhausted);
    CHECK(ex[2].to_string() == "exhausted(5)");

    for (auto& r : unit_power_distance(beta.one(), t3, 2, 5)) CHECK(r.kind == PowerDistance::Kind::Infinite);
    auto c = unit_power_distance(RatFunc::constant(5, 2), fin(5, {0, 1}), 2, 3);
    CHECK(c[0].kind == PowerDistance::Kind::Finite);
    CHECK(c[0].valuation == 0);
    CHECK(c[2].kind == PowerDistance::Kind::Infinite);  // 2^4 = 1 in F_5
    CHECK_THROWS_AS(unit_power_distance(RatFunc::t(3), t3, 2, 3), PreconditionError);
}

TEST_CASE("tame versus wild distances on random units") {
    std::mt19937_64 rng(24);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const Place v = fin(p, {0, 1});
        for (int it = 0; it < 12; ++it) {
            RatFunc beta = random_ratfunc(p, 3, rng);
            if (beta.is_constant() || *valuation(beta, v) != 0) continue;
            for (std::int64_t d : {2, 3, 4}) {
                if (d % p == 0) continue;
                auto seq = unit_power_distance(beta, v, d, 15);
                std::int64_t mx = -1;
                std::size_t first = 0;
                for (std::size_t n = 0; n < seq.size(); ++n) {
                    REQUIRE(seq[n].kind == PowerDistance::Kind::Finite);
                    if (seq[n].valuation > mx) {
                        mx = seq[n].valuation;
                        first = n;
                    }
                }
                for (std::size_t n = first; n < seq.size(); ++n) CHECK(seq[n].valuation == mx);
            }
            // d = p on beta = 1 + t*h: strictly increasing.
            RatFunc h = beta;
            const RatFunc b1 = beta.one() + RatFunc::t(p) * h;
            if (*valuation(b1, v) != 0) continue;
            auto wild = unit_power_distance(b1, v, p, 3);
            for (std::size_t n = 1; n < wild.size(); ++n)
                if (wild[n].kind == PowerDistance::Kind::Finite && wild[n - 1].kind == PowerDistance::Kind::Finite)
                    CHECK(wild[n].valuation > wild[n - 1].valuation);
        }
    }
}

TEST_CASE("unity census examples") {
    auto c = unity_distance_census(2, 3, fin(3, {0, 1}), Rational(0));
    CHECK(c.count() == 0);
    CHECK(c.roots == 8);
    CHECK(c.units == 7);
    CHECK(c.embedding_degree == 2);
    auto c2 = unity_distance_census(6, 2, fin(5, {0, 1}), Rational(0));
    CHECK(c2.count() == 0);
    CHECK(c2.embedding_degree == 6);
    CHECK(c2.roots == 36);
    // Any threshold above 1 admits every zeta != 1.
    CHECK(unity_distance_census(2, 3, fin(3, {0, 1}), Rational(1, 2)).count() == 7);
    CHECK_THROWS_AS(unity_distance_census(3, 2, fin(3, {0, 1}), Rational(0)), WildCaseError);
}

TEST_CASE("unity census against brute force over F_{p^k}") {
    for (auto [d, n, p] : std::vector<std::tuple<std::int64_t, std::int64_t, std::uint32_t>>{
             {2, 3, 3}, {2, 2, 5}, {4, 1, 7}, {3, 2, 5}, {2, 4, 7}, {6, 1, 5}, {3, 1, 7}}) {
        auto c = unity_distance_census(d, n, fin(p, {0, 1}), Rational(0));
        const std::uint64_t m = ipow(static_cast<std::uint64_t>(d), static_cast<unsigned>(n));
        // Enumerate F_{p^k} via the census field and count m-th roots of unity.
        auto F = nth_roots_of_unity(m, p).field;
        const int k = F->degree();
        std::uint64_t total = ipow(p, static_cast<unsigned>(k)), found = 0, units = 0;
        for (std::uint64_t code = 1; code < total; ++code) {
            std::vector<std::uint32_t> digits;
            for (std::uint64_t x = code; digits.size() < static_cast<std::size_t>(k); x /= p) digits.push_back(static_cast<std::uint32_t>(x % p));
            ExtFieldElem z(F, FpPoly(p, digits));
            if (z.pow(m).is_one()) {
                ++found;
                if (!z.is_one() && !(z.one() - z).is_zero()) ++units;
            }
        }
        CHECK(found == m);
        CHECK(static_cast<std::uint64_t>(c.roots) == m);
        CHECK(static_cast<std::uint64_t>(c.units) == units);
        CHECK(c.count() == 0);
    }
}
