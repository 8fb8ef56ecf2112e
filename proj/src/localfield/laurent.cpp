#include "orbitale/localfield/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitale {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a >= kExact || b >= kExact) return kExact;
    return std::min(a + b, kExact);
}

namespace {

// Sums of products of residue-field elements, reduced once at the end.
class Accumulator {
public:
    explicit Accumulator(const ExtFieldPtr& f)
        : field_(f), p_(f->characteristic()), acc_(static_cast<std::size_t>(2 * f->degree() - 1), 0) {}
    void add_product(const ExtFieldElem& a, const ExtFieldElem& b) {
        const auto& x = a.value().coeffs();
        const auto& y = b.value().coeffs();
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) acc_[i + j] += std::uint64_t{x[i]} * y[j];
        }
    }
    ExtFieldElem take() {
        std::vector<std::uint32_t> v(acc_.size());
        for (std::size_t i = 0; i < acc_.size(); ++i) {
            v[i] = static_cast<std::uint32_t>(acc_[i] % p_);
            acc_[i] = 0;
        }
        return ExtFieldElem(field_, FpPoly(p_, std::move(v)));
    }

private:
    ExtFieldPtr field_;
    std::uint64_t p_;
    std::vector<std::uint64_t> acc_;
};

void require_same_field(const LaurentApprox& a, const LaurentApprox& b) {
    if (a.field() != b.field() && !(a.field()->modulus() == b.field()->modulus()))
        throw std::invalid_argument("series over different residue fields");
}

}  // namespace

LaurentApprox::LaurentApprox(ExtFieldPtr field, std::int64_t lead, std::vector<ExtFieldElem> coeffs, std::int64_t prec,
                             std::string uniformizer)
    : field_(std::move(field)), lead_(lead), c_(std::move(coeffs)), prec_(std::min(prec, kExact)), name_(std::move(uniformizer)) {
    normalize();
}

void LaurentApprox::normalize() {
    if (!is_exact() && lead_ < prec_ && static_cast<std::int64_t>(c_.size()) > prec_ - lead_)
        c_.resize(static_cast<std::size_t>(prec_ - lead_), ExtFieldElem::from_int(field_, 0));
    if (!is_exact() && lead_ >= prec_) c_.clear();
    std::size_t z = 0;
    while (z < c_.size() && c_[z].is_zero()) ++z;
    if (z == c_.size()) {
        c_.clear();
        lead_ = is_exact() ? 0 : prec_;
        return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(z));
    lead_ += static_cast<std::int64_t>(z);
    while (c_.back().is_zero()) c_.pop_back();
}

LaurentApprox LaurentApprox::zero(ExtFieldPtr field, std::int64_t prec, std::string uniformizer) {
    return LaurentApprox(std::move(field), prec, {}, prec, std::move(uniformizer));
}

LaurentApprox LaurentApprox::constant(const ExtFieldElem& c, std::string uniformizer) { return monomial(c, 0, std::move(uniformizer)); }

LaurentApprox LaurentApprox::monomial(const ExtFieldElem& c, std::int64_t k, std::string uniformizer) {
    return LaurentApprox(c.field(), k, {c}, kExact, std::move(uniformizer));
}

Valuation LaurentApprox::valuation() const {
    if (!c_.empty()) return lead_;
    if (is_exact()) return std::nullopt;
    throw PrecisionExhausted("no nonzero term below O(" + name_ + "^" + std::to_string(prec_) + ")");
}

std::int64_t LaurentApprox::relative_prec() const {
    if (is_exact()) return kExact;
    return prec_ - lead_;
}

ExtFieldElem LaurentApprox::coeff(std::int64_t e) const {
    if (e >= prec_) throw PrecisionExhausted("coefficient beyond precision");
    if (e < lead_ || e - lead_ >= static_cast<std::int64_t>(c_.size())) return ExtFieldElem::from_int(field_, 0);
    return c_[static_cast<std::size_t>(e - lead_)];
}

LaurentApprox LaurentApprox::truncated(std::int64_t prec) const {
    return LaurentApprox(field_, lead_, c_, std::min(prec, prec_), name_);
}

LaurentApprox LaurentApprox::with_prec_unchecked(std::int64_t prec) const {
    return LaurentApprox(field_, c_.empty() ? std::min(prec, kExact) : lead_, c_, prec, name_);
}

LaurentApprox LaurentApprox::operator-() const {
    std::vector<ExtFieldElem> v;
    v.reserve(c_.size());
    for (auto& c : c_) v.push_back(-c);
    return LaurentApprox(field_, lead_, std::move(v), prec_, name_);
}

LaurentApprox operator+(const LaurentApprox& a, const LaurentApprox& b) {
    require_same_field(a, b);
    const std::int64_t prec = std::min(a.prec_, b.prec_);
    if (a.c_.empty() && b.c_.empty()) return LaurentApprox(a.field_, prec, {}, prec, a.name_);
    std::int64_t lo = kExact, hi = -kExact;
    for (const auto* s : {&a, &b})
        if (!s->c_.empty()) {
            lo = std::min(lo, s->lead_);
            hi = std::max(hi, s->lead_ + static_cast<std::int64_t>(s->c_.size()));
        }
    hi = std::min(hi, prec);
    if (hi <= lo) return LaurentApprox(a.field_, prec, {}, prec, a.name_);
    std::vector<ExtFieldElem> v(static_cast<std::size_t>(hi - lo), ExtFieldElem::from_int(a.field_, 0));
    for (const auto* s : {&a, &b})
        for (std::size_t i = 0; i < s->c_.size(); ++i) {
            const std::int64_t e = s->lead_ + static_cast<std::int64_t>(i);
            if (e >= hi) break;
            v[static_cast<std::size_t>(e - lo)] = v[static_cast<std::size_t>(e - lo)] + s->c_[i];
        }
    return LaurentApprox(a.field_, lo, std::move(v), prec, a.name_);
}

LaurentApprox operator*(const LaurentApprox& a, const LaurentApprox& b) {
    require_same_field(a, b);
    if (a.is_exact_zero() || b.is_exact_zero()) return LaurentApprox(a.field_, 0, {}, kExact, a.name_);
    // Lower bounds for the valuations; a zero approximation has lead == prec.
    const std::int64_t va = a.lead_, vb = b.lead_;
    const std::int64_t prec = std::min(sat_add(va, b.prec_), sat_add(vb, a.prec_));
    if (a.c_.empty() || b.c_.empty()) return LaurentApprox(a.field_, prec, {}, prec, a.name_);
    const std::int64_t full = static_cast<std::int64_t>(a.c_.size() + b.c_.size()) - 1;
    const std::int64_t n = std::min(full, prec - (va + vb));
    if (n <= 0) return LaurentApprox(a.field_, prec, {}, prec, a.name_);
    Accumulator acc(a.field_);
    std::vector<ExtFieldElem> v;
    v.reserve(static_cast<std::size_t>(n));
    const std::int64_t na = static_cast<std::int64_t>(a.c_.size()), nb = static_cast<std::int64_t>(b.c_.size());
    for (std::int64_t s = 0; s < n; ++s) {
        for (std::int64_t i = std::max<std::int64_t>(0, s - nb + 1); i <= std::min(s, na - 1); ++i)
            acc.add_product(a.c_[static_cast<std::size_t>(i)], b.c_[static_cast<std::size_t>(s - i)]);
        v.push_back(acc.take());
    }
    return LaurentApprox(a.field_, va + vb, std::move(v), prec, a.name_);
}

LaurentApprox LaurentApprox::scaled(const ExtFieldElem& c) const {
    if (c.is_zero()) return LaurentApprox(field_, 0, {}, kExact, name_) * *this;
    std::vector<ExtFieldElem> v;
    v.reserve(c_.size());
    for (auto& x : c_) v.push_back(x * c);
    return LaurentApprox(field_, lead_, std::move(v), prec_, name_);
}

LaurentApprox LaurentApprox::inverse(std::int64_t rel_terms) const {
    if (c_.empty()) {
        if (is_exact()) throw std::domain_error("inverse of zero");
        throw PrecisionExhausted("inverse of a series with no known nonzero term");
    }
    const std::int64_t rel = std::min(rel_terms, relative_prec());
    if (c_.size() == 1) {
        // Monomial: the inverse is known to the same relative precision.
        return LaurentApprox(field_, -lead_, {c_[0].inverse()}, is_exact() ? kExact : -lead_ + relative_prec(), name_);
    }
    const ExtFieldElem inv0 = c_[0].inverse();
    std::vector<ExtFieldElem> b;
    b.reserve(static_cast<std::size_t>(rel));
    b.push_back(inv0);
    Accumulator acc(field_);
    const std::int64_t na = static_cast<std::int64_t>(c_.size());
    for (std::int64_t s = 1; s < rel; ++s) {
        for (std::int64_t i = 1; i <= std::min(s, na - 1); ++i) acc.add_product(c_[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(s - i)]);
        b.push_back(-(acc.take() * inv0));
    }
    return LaurentApprox(field_, -lead_, std::move(b), -lead_ + rel, name_);
}

LaurentApprox LaurentApprox::inverse() const { return inverse(is_exact() ? exact_terms : relative_prec()); }

LaurentApprox operator/(const LaurentApprox& a, const LaurentApprox& b) {
    std::int64_t rel = std::min(a.relative_prec(), b.relative_prec());
    if (rel >= kExact) rel = LaurentApprox::exact_terms;
    return a * b.inverse(rel);
}

LaurentApprox LaurentApprox::frobenius() const {
    const std::uint32_t p = field_->characteristic();
    std::vector<ExtFieldElem> v(c_.empty() ? 0 : (c_.size() - 1) * p + 1, ExtFieldElem::from_int(field_, 0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * p] = c_[i].pow(p);
    const std::int64_t prec = is_exact() ? kExact : (prec_ >= kExact / p ? kExact - 1 : prec_ * p);
    const std::int64_t lead = c_.empty() ? prec : lead_ * static_cast<std::int64_t>(p);
    return LaurentApprox(field_, lead, std::move(v), prec, name_);
}

LaurentApprox LaurentApprox::pow(std::uint64_t e) const {
    LaurentApprox r = monomial(ExtFieldElem::from_int(field_, 1), 0, name_);
    if (e == 0) return r;
    auto [k, m] = split_p_part(e, field_->characteristic());
    LaurentApprox b = *this;
    for (unsigned i = 0; i < k; ++i) b = b.frobenius();
    while (m) {
        if (m & 1) r = r * b;
        m >>= 1;
        if (m) b = b * b;
    }
    return r;
}

bool operator==(const LaurentApprox& a, const LaurentApprox& b) {
    return a.prec_ == b.prec_ && a.lead_ == b.lead_ && a.c_ == b.c_;
}

bool agrees(const LaurentApprox& a, const LaurentApprox& b) {
    const std::int64_t prec = std::min(a.prec_, b.prec_);
    return (a.truncated(prec) - b.truncated(prec)).is_zero_approx();
}

std::string LaurentApprox::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const ExtFieldElem& c = c_[i];
        if (c.is_zero()) continue;
        const std::int64_t e = lead_ + static_cast<std::int64_t>(i);
        std::string cs = c.to_string();
        if (c.value().degree() > 0 && c.value().coeffs().size() > 1 &&
            std::count_if(c.value().coeffs().begin(), c.value().coeffs().end(), [](auto x) { return x != 0; }) > 1)
            cs = "(" + cs + ")";
        std::string term;
        if (e == 0) {
            term = cs;
        } else {
            term = cs == "1" ? "" : cs + "*";
            term += name_;
            if (e != 1) term += "^" + std::to_string(e);
        }
        if (!s.empty()) s += " + ";
        s += term;
    }
    if (!is_exact()) {
        if (!s.empty()) s += " + ";
        s += "O(" + name_ + (prec_ == 1 ? "" : "^" + std::to_string(prec_)) + ")";
    }
    return s.empty() ? "0" : s;
}

}  // namespace orbitale
