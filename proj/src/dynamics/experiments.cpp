#include "orbitale/dynamics/experiments.hpp"

#include "orbitale/ffpoly/factor.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace orbitale {

std::string to_string(UnitPowerReport::Verdict v) {
    switch (v) {
        case UnitPowerReport::Verdict::Bounded: return "bounded";
        case UnitPowerReport::Verdict::Unbounded: return "unbounded";
        case UnitPowerReport::Verdict::Inconclusive: return "inconclusive";
        case UnitPowerReport::Verdict::Degenerate: return "degenerate";
    }
    return "?";
}

namespace {

void require_unit(const RatFunc& x, const Place& v, const char* what) {
    auto val = valuation(x, v);
    if (!val || *val != 0)
        throw PreconditionError(std::string(what) + " must satisfy |" + what + "|_v = 1 at " + v.to_string());
}

std::int64_t checked_power(std::int64_t d, std::int64_t n) {
    std::int64_t m = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        m *= d;
        if (m > kMaxIterateDegree) throw PreconditionError("d^n exceeds " + std::to_string(kMaxIterateDegree));
    }
    return m;
}

// "num/den" always, so CSV cells never depend on the integer case.
std::string frac(const Rational& r) { return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()); }

}  // namespace

UnitPowerReport lemma2_experiment(const RatFunc& beta, const Place& v, std::int64_t d, std::int64_t n_max) {
    require_field_prime(beta.characteristic());
    if (d < 1) throw PreconditionError("lemma2_experiment: d must be >= 1");
    if (n_max < 0) throw PreconditionError("lemma2_experiment: n_max must be >= 0");
    require_unit(beta, v, "beta");
    UnitPowerReport rep;
    const RatFunc one = RatFunc::constant(beta.characteristic(), 1);
    RatFunc cur = beta;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        rep.valuations.push_back(valuation(one - cur, v));
        if (n == n_max) break;
        if (height(cur) * Rational(d) > Rational(kMaxIterateDegree))
            throw PreconditionError("lemma2_experiment: beta^(d^n) exceeds degree " + std::to_string(kMaxIterateDegree));
        cur = cur.pow(d);
    }
    const auto& vals = rep.valuations;
    if (std::any_of(vals.begin(), vals.end(), [](const Valuation& x) { return !x; })) {
        rep.verdict = UnitPowerReport::Verdict::Degenerate;
        return rep;
    }
    rep.max_valuation = *std::max_element(vals.begin(), vals.end());
    const std::size_t k = vals.size();
    if (k >= 3 && *vals[k - 3] < *vals[k - 2] && *vals[k - 2] < *vals[k - 1])
        rep.verdict = UnitPowerReport::Verdict::Unbounded;
    else if (k >= 2 && *vals[k - 2] == *vals[k - 1] && *vals[k - 1] == *rep.max_valuation)
        rep.verdict = UnitPowerReport::Verdict::Bounded;
    return rep;
}

DistanceReport lemma3_experiment(const RatFunc& alpha, const RatFunc& beta, const Place& v, std::int64_t d,
                                 const std::vector<std::pair<std::int64_t, std::int64_t>>& levels) {
    PoweringMap phi(d, beta.characteristic());
    require_unit(alpha, v, "alpha");
    require_unit(beta, v, "beta");
    if (beta.is_one()) throw PreconditionError("lemma3_experiment: beta = 1 is excluded");
    if (levels.empty()) throw PreconditionError("lemma3_experiment: no levels");
    DistanceReport rep;
    for (auto [m, n] : levels) {
        if (!(m > n && n >= 0)) throw PreconditionError("lemma3_experiment: levels need m > n >= 0");
        const std::int64_t dm = checked_power(d, m);
        RatFunc bn = phi.iterate(beta, n);
        if (phi.iterate(alpha, m) == bn)
            throw PreconditionError("alpha lies in the fiber at level (m, n) = (" + std::to_string(m) + ", " +
                                    std::to_string(n) + ")");
        DistanceLevel lvl;
        lvl.m = m;
        lvl.n = n;
        lvl.distances = conj_distance_multiset(binomial(dm, bn), alpha, v);
        lvl.closest = lvl.distances.front();
        if (rep.levels.empty() || lvl.closest < rep.observed_infimum) rep.observed_infimum = lvl.closest;
        rep.levels.push_back(std::move(lvl));
    }
    return rep;
}

bool ConvergenceReport::has_other() const {
    return std::any_of(other.begin(), other.end(), [](const Rational& r) { return r != Rational(0); });
}

std::string ConvergenceReport::to_csv() const {
    std::ostringstream out;
    out << "place,n,numerator,denominator,predicted_limit,A_n\n";
    auto row = [&](const std::string& name, std::int64_t n, const Rational& s, const Rational& lim) {
        out << name << ',' << n << ',' << s.numerator() << ',' << s.denominator() << ',' << frac(lim) << ','
            << frac(A[static_cast<std::size_t>(n - 1)]) << '\n';
    };
    for (std::size_t i = 0; i < places.size(); ++i)
        for (std::int64_t n = 1; n <= n_max; ++n) row(places[i].to_string(), n, table[i][static_cast<std::size_t>(n - 1)], limits[i]);
    if (has_other())
        for (std::int64_t n = 1; n <= n_max; ++n) row("other", n, other[static_cast<std::size_t>(n - 1)], Rational(0));
    return out.str();
}

std::string ConvergenceReport::to_json() const {
    using nlohmann::ordered_json;
    auto place_list = [](const std::vector<Place>& ps) {
        ordered_json a = ordered_json::array();
        for (const auto& v : ps) a.push_back(v.to_string());
        return a;
    };
    auto fracs = [](const std::vector<Rational>& rs) {
        ordered_json a = ordered_json::array();
        for (const auto& r : rs) a.push_back(frac(r));
        return a;
    };
    ordered_json j;
    j["alpha"] = alpha.to_string();
    j["beta"] = beta.to_string();
    j["d"] = d;
    j["p"] = alpha.characteristic();
    j["n_max"] = n_max;
    j["S"] = place_list(S.places());
    j["T"] = place_list(T.places());
    j["height"] = frac(height);
    j["A"] = fracs(A);
    j["global_sums"] = fracs(global_sums);
    ordered_json lim = ordered_json::object();
    for (std::size_t i = 0; i < places.size(); ++i) lim[places[i].to_string()] = frac(limits[i]);
    j["limits"] = lim;
    const bool zero_sums =
        std::all_of(global_sums.begin(), global_sums.end(), [](const Rational& r) { return r == Rational(0); });
    j["verdicts"] = {{"global_sums_zero", zero_sums}, {"A_equals_height", !A.empty() && A.back() == height}};
    return j.dump(2) + "\n";
}

ConvergenceReport main_theorem_experiment(const RatFunc& alpha, const RatFunc& beta, std::int64_t d,
                                          std::int64_t n_max, const PlaceSet& S) {
    const std::uint32_t p = alpha.characteristic();
    if (beta.characteristic() != p) throw PreconditionError("alpha and beta have different characteristic");
    PoweringMap phi(d, p);
    if (is_preperiodic(alpha, phi)) throw PreconditionError("alpha is preperiodic");
    if (beta.is_zero()) throw PreconditionError("beta must be nonzero");
    if (n_max < 1) throw PreconditionError("n_max must be >= 1");

    ConvergenceReport rep;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.d = d;
    rep.n_max = n_max;
    rep.S = S;
    rep.T = T_set(alpha);
    rep.height = orbitale::height(ProjectivePoint(alpha));

    // Pass 1: the differences alpha^(d^n) - beta, and every place we can
    // name (small numerators are factored completely).
    std::vector<Place> known(S.places());
    for (const auto& v : rep.T.places()) known.push_back(v);
    for (const auto& pv : support(alpha)) known.push_back(pv.place);
    for (const auto& pv : support(beta)) known.push_back(pv.place);
    known.push_back(Place::infinity(p));
    std::vector<RatFunc> diffs;
    RatFunc an = alpha;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        if (height(an) * Rational(d) > Rational(kMaxIterateDegree))
            throw PreconditionError("main_theorem_experiment: alpha^(d^n) exceeds degree " +
                                    std::to_string(kMaxIterateDegree));
        an = phi(an);
        RatFunc diff = an - beta;
        if (diff.is_zero())
            throw PreconditionError("fiber collision at level " + std::to_string(n) + ": alpha^(d^n) = beta");
        if (diff.num().degree() <= kFactorDegreeLimit)
            for (const auto& fp : factor(diff.num()).factors) known.push_back(Place::finite_unchecked(fp.factor));
        diffs.push_back(std::move(diff));
    }
    std::sort(known.begin(), known.end());
    known.erase(std::unique(known.begin(), known.end()), known.end());
    rep.places = known;

    // Pass 2: valuations at the named places; whatever remains of the
    // numerator and denominator lives at unnamed finite places.
    rep.table.assign(known.size(), {});
    for (const auto& v : known) rep.limits.push_back(std::max(Rational(0), log_abs(alpha, v)));
    Rational dn(1);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        dn *= Rational(d);
        const RatFunc& diff = diffs[static_cast<std::size_t>(n - 1)];
        FpPoly num = diff.num(), den = diff.den();
        Rational total(0);
        for (std::size_t i = 0; i < known.size(); ++i) {
            const Place& v = known[i];
            std::int64_t val = 0;
            if (v.is_infinite()) {
                val = static_cast<std::int64_t>(diff.den().degree()) - diff.num().degree();
            } else {
                const std::int64_t vn = *valuation(num, v), vd = *valuation(den, v);
                if (vn > 0) num = divmod(num, pow(v.poly(), static_cast<std::uint64_t>(vn))).first;
                if (vd > 0) den = divmod(den, pow(v.poly(), static_cast<std::uint64_t>(vd))).first;
                val = vn - vd;
            }
            Rational s(-static_cast<std::int64_t>(v.degree()) * val);
            s /= dn;
            rep.table[i].push_back(s);
            total += s;
        }
        Rational rest(static_cast<std::int64_t>(den.degree()) - num.degree());
        rest /= dn;
        rep.other.push_back(rest);
        total += rest;
        rep.global_sums.push_back(total);
        Rational a(0);
        for (std::size_t i = 0; i < known.size(); ++i)
            if (S.contains(known[i]) || rep.T.contains(known[i])) a += rep.table[i].back();
        rep.A.push_back(a);
    }
    return rep;
}

TransferVerdict integrality_transfer_check(const RatFunc& alpha, const RatFunc& beta, const PlaceSet& S,
                                           const PoweringMap& phi) {
    if (!phi.is_tame()) throw WildCaseError("integrality_transfer_check: wild map");
    if (beta.is_zero()) throw PreconditionError("integrality_transfer_check: beta = 0");
    const std::uint32_t p = phi.characteristic();
    TransferVerdict out;

    // (a) beta against phi(alpha), as K-points.
    const RatFunc phi_alpha = phi(alpha);
    auto a = is_S_integral(beta, phi_alpha, S);
    out.side_a = a.integral;
    out.witness_a = a.witness;

    // (b) the conjugacy classes of phi^{-1}(beta) against alpha.
    out.fiber = factor_binomial(phi.degree(), beta);
    std::vector<Place> checked{Place::infinity(p)};
    if (!(beta == phi_alpha)) {
        auto rel = relevant_places(beta, phi_alpha);
        checked.insert(checked.end(), rel.begin(), rel.end());
    }
    out.side_b = true;
    for (const auto& g : out.fiber) {
        IntegralityVerdict vb;
        if (g.minpoly().eval(alpha).is_zero()) {
            // alpha is a conjugate of the fiber: distance 0 at every place.
            vb = is_S_integral(alpha, alpha, S);
        } else {
            vb = is_S_integral_algebraic(g, alpha, S);
            auto rel = relevant_places_algebraic(g, alpha);
            checked.insert(checked.end(), rel.begin(), rel.end());
        }
        if (!vb.integral) {
            out.side_b = false;
            if (!out.witness_b || *vb.witness < *out.witness_b) out.witness_b = vb.witness;
        }
    }

    // Good reduction is a hypothesis at every place outside S; the places
    // that matter to either side are the ones checked.
    std::sort(checked.begin(), checked.end());
    checked.erase(std::unique(checked.begin(), checked.end()), checked.end());
    const RationalMapPair pair = phi.as_pair();
    for (const auto& v : checked)
        if (!S.contains(v) && !reduce_map(pair, v).good_reduction)
            throw PreconditionError("bad reduction at " + v.to_string() + " outside S");
    return out;
}

}  // namespace orbitale
