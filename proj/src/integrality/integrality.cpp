#include "orbitale/integrality/integrality.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitale {

PlaceSet::PlaceSet(std::vector<Place> places, std::optional<std::string> label)
    : places_(std::move(places)), label_(std::move(label)) {
    std::sort(places_.begin(), places_.end());
    places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
}

bool PlaceSet::contains(const Place& v) const { return std::binary_search(places_.begin(), places_.end(), v); }

PlaceSet PlaceSet::united(const PlaceSet& other) const {
    std::vector<Place> all = places_;
    all.insert(all.end(), other.places_.begin(), other.places_.end());
    return PlaceSet(std::move(all), label_);
}

std::string PlaceSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < places_.size(); ++i) {
        if (i) out += ", ";
        out += places_[i].to_string();
    }
    return out + "}";
}

PlaceSet T_set(const RatFunc& alpha) {
    if (alpha.is_zero()) throw PreconditionError("T_set: alpha = 0");
    std::vector<Place> poles;
    for (const auto& pv : support(alpha))
        if (pv.valuation < 0) poles.push_back(pv.place);
    return PlaceSet(std::move(poles), "T");
}

namespace {

// |x|_v > 1, with the point at infinity large everywhere and 0 small.
bool is_large(const ProjectivePoint& x, const Place& v) {
    if (x.is_infinity()) return true;
    if (x.value().is_zero()) return false;
    return log_abs(x.value(), v) > Rational(0);
}

void add_support(std::vector<Place>& out, const RatFunc& a) {
    if (a.is_zero()) return;
    for (const auto& pv : support(a)) out.push_back(pv.place);
}

std::vector<Place> canonical(std::vector<Place> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// First place outside S in canonical order.
Place first_outside(const PlaceSet& S, std::uint32_t p) {
    Place inf = Place::infinity(p);
    if (!S.contains(inf)) return inf;
    for (int k = 1;; ++k)
        for (const auto& v : finite_places_up_to(p, k))
            if (!S.contains(v)) return v;
}

}  // namespace

bool integral_at(const ProjectivePoint& beta, const ProjectivePoint& alpha, const Place& v) {
    if (is_large(alpha, v)) {
        if (beta.is_infinity()) return false;
        return !is_large(beta, v);
    }
    if (beta.is_infinity()) return true;
    RatFunc diff = beta.value() - alpha.value();
    if (diff.is_zero()) return false;
    return log_abs(diff, v) >= Rational(0);
}

std::vector<Place> relevant_places(const ProjectivePoint& beta, const ProjectivePoint& alpha) {
    std::uint32_t p = beta.characteristic();
    std::vector<Place> out{Place::infinity(p)};
    if (!alpha.is_infinity()) add_support(out, alpha.value());
    if (!beta.is_infinity()) add_support(out, beta.value());
    if (!alpha.is_infinity() && !beta.is_infinity()) add_support(out, beta.value() - alpha.value());
    return canonical(std::move(out));
}

IntegralityVerdict is_S_integral(const ProjectivePoint& beta, const ProjectivePoint& alpha, const PlaceSet& S) {
    if (beta.characteristic() != alpha.characteristic()) throw PreconditionError("is_S_integral: characteristic mismatch");
    // beta = alpha fails at every place: distance 0, or a pole against a pole.
    if (beta == alpha) return {false, first_outside(S, beta.characteristic())};
    for (const auto& v : relevant_places(beta, alpha)) {
        if (S.contains(v)) continue;
        if (!integral_at(beta, alpha, v)) return {false, v};
    }
    return {true, std::nullopt};
}

bool integral_at_algebraic(const AlgebraicPoint& gamma, const RatFunc& alpha, const Place& v) {
    const RatPoly& f = gamma.minpoly();
    if (alpha.is_zero() || log_abs(alpha, v) <= Rational(0)) {
        for (const auto& d : conj_distance_multiset(f, alpha, v))
            if (d < Rational(0)) return false;
        return true;
    }
    for (const auto& r : newton_polygon(f, v).root_valuations())
        if (r < Rational(0)) return false;
    return true;
}

std::vector<Place> relevant_places_algebraic(const AlgebraicPoint& gamma, const RatFunc& alpha) {
    std::vector<Place> out = coefficient_places(gamma.minpoly());
    add_support(out, alpha);
    add_support(out, gamma.minpoly().eval(alpha));
    return canonical(std::move(out));
}

IntegralityVerdict is_S_integral_algebraic(const AlgebraicPoint& gamma, const RatFunc& alpha, const PlaceSet& S) {
    if (gamma.characteristic() != alpha.characteristic())
        throw PreconditionError("is_S_integral_algebraic: characteristic mismatch");
    if (gamma.minpoly().eval(alpha).is_zero())
        throw PreconditionError("is_S_integral_algebraic: alpha is a root of the minimal polynomial");
    for (const auto& v : relevant_places_algebraic(gamma, alpha)) {
        if (S.contains(v)) continue;
        if (!integral_at_algebraic(gamma, alpha, v)) return {false, v};
    }
    return {true, std::nullopt};
}

bool symmetry_check(const ProjectivePoint& alpha, const ProjectivePoint& beta, const PlaceSet& S) {
    bool ab = is_S_integral(beta, alpha, S).integral;
    bool ba = is_S_integral(alpha, beta, S).integral;
    if (ab != ba)
        throw std::logic_error("symmetry_check: verdicts differ for " + alpha.to_string() + ", " + beta.to_string());
    return ab;
}

}  // namespace orbitale
