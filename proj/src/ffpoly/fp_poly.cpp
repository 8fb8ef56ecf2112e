#include "orbitale/ffpoly/fp_poly.hpp"

#include "orbitale/common.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitale {

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
    return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

PrimeFieldElem PrimeFieldElem::from_signed(std::int64_t value, std::uint32_t p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return {static_cast<std::uint32_t>(r), p};
}

PrimeFieldElem PrimeFieldElem::inverse() const { return {inv_mod_p(v_, p_), p_}; }

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& a : c_) a %= p_;
    trim();
}

FpPoly FpPoly::from_signed(std::uint32_t p, const std::vector<std::int64_t>& coeffs) {
    std::vector<std::uint32_t> c;
    c.reserve(coeffs.size());
    for (auto a : coeffs) c.push_back(PrimeFieldElem::from_signed(a, p).value());
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::constant(std::uint32_t p, std::uint32_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::uint32_t p, std::uint32_t c, std::size_t k) {
    std::vector<std::uint32_t> v(k + 1, 0);
    v[k] = c;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(inv_mod_p(lead(), p_));
}

FpPoly FpPoly::scaled(std::uint32_t k) const {
    FpPoly r(p_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = static_cast<std::uint32_t>(std::uint64_t{c_[i]} * k % p_);
    r.trim();
    return r;
}

FpPoly FpPoly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    FpPoly r(p_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

FpPoly FpPoly::derivative() const {
    FpPoly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = static_cast<std::uint32_t>(std::uint64_t{c_[i]} * (i % p_) % p_);
    r.trim();
    return r;
}

FpPoly FpPoly::compose(const FpPoly& g) const {
    FpPoly r(p_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(p_, c_[i]);
    return r;
}

std::uint32_t FpPoly::eval(std::uint32_t x) const {
    std::uint64_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = (r * x + c_[i]) % p_;
    return static_cast<std::uint32_t>(r);
}

FpPoly FpPoly::frobenius() const {
    if (is_zero()) return *this;
    FpPoly r(p_);
    r.c_.assign((c_.size() - 1) * p_ + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * p_] = c_[i];
    return r;
}

FpPoly FpPoly::pth_root() const {
    FpPoly r(p_);
    if (is_zero()) return r;
    r.c_.resize((c_.size() - 1) / p_ + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i % p_ != 0) {
            if (c_[i] != 0) throw std::domain_error("pth_root: not a p-th power");
            continue;
        }
        r.c_[i / p_] = c_[i];
    }
    r.trim();
    return r;
}

FpPoly FpPoly::operator-() const {
    FpPoly r(*this);
    for (auto& a : r.c_) a = (p_ - a) % p_;
    return r;
}

FpPoly& FpPoly::operator+=(const FpPoly& g) {
    if (c_.size() < g.c_.size()) c_.resize(g.c_.size(), 0);
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] = (c_[i] + g.c_[i]) % p_;
    trim();
    return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& g) {
    if (c_.size() < g.c_.size()) c_.resize(g.c_.size(), 0);
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] = (c_[i] + p_ - g.c_[i]) % p_;
    trim();
    return *this;
}

FpPoly operator*(const FpPoly& f, const FpPoly& g) {
    FpPoly r(f.p_);
    if (f.is_zero() || g.is_zero()) return r;
    // p < 2^16, so each product is below 2^32 and a 64-bit accumulator
    // holds any realistic convolution length without reduction.
    std::vector<std::uint64_t> acc(f.c_.size() + g.c_.size() - 1, 0);
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        const std::uint64_t a = f.c_[i];
        if (a == 0) continue;
        std::uint64_t* out = acc.data() + i;
        for (std::size_t j = 0; j < g.c_.size(); ++j) out[j] += a * g.c_[j];
    }
    r.c_.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i] % f.p_);
    r.trim();
    return r;
}

std::strong_ordering operator<=>(const FpPoly& f, const FpPoly& g) {
    if (auto c = f.degree() <=> g.degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(f.c_.begin(), f.c_.end(), g.c_.begin(), g.c_.end());
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c_[i]);
            continue;
        }
        if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& f, const FpPoly& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::uint32_t p = f.modulus();
    if (f.degree() < g.degree()) return {FpPoly(p), f};
    std::vector<std::uint64_t> r(f.coeffs().begin(), f.coeffs().end());
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    const std::uint64_t inv = inv_mod_p(g.lead(), p);
    std::vector<std::uint32_t> q(r.size() - dg, 0);
    for (std::size_t i = r.size(); i-- > dg;) {
        const std::uint64_t c = r[i] % p * inv % p;
        q[i - dg] = static_cast<std::uint32_t>(c);
        if (c == 0) continue;
        const std::uint64_t neg = p - c;
        for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] = (r[i - dg + j] + neg * gc[j]) % p;
    }
    r.resize(dg);
    std::vector<std::uint32_t> rr(r.begin(), r.end());
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(rr))};
}

FpPoly operator/(const FpPoly& f, const FpPoly& g) { return divmod(f, g).first; }
FpPoly operator%(const FpPoly& f, const FpPoly& g) { return divmod(f, g).second; }

FpPoly gcd(const FpPoly& f, const FpPoly& g) {
    FpPoly a = f, b = g;
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtGcd ext_gcd(const FpPoly& f, const FpPoly& h) {
    const std::uint32_t p = f.modulus();
    FpPoly r0 = f, r1 = h;
    FpPoly s0 = FpPoly::constant(p, 1), s1(p);
    FpPoly t0(p), t1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        FpPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const std::uint32_t inv = inv_mod_p(r0.lead(), p);
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

FpPoly pow(const FpPoly& f, std::uint64_t e) {
    const std::uint32_t p = f.modulus();
    auto [frob, m] = split_p_part(e, p);
    if (e == 0) return FpPoly::constant(p, 1);
    FpPoly r = FpPoly::constant(p, 1), b = f;
    while (m) {
        if (m & 1) r = r * b;
        m >>= 1;
        if (m) b = b * b;
    }
    for (unsigned i = 0; i < frob; ++i) r = r.frobenius();
    return r;
}

FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

FpPoly pow_mod(const FpPoly& f, std::uint64_t e, const FpPoly& m) {
    FpPoly r = FpPoly::constant(f.modulus(), 1) % m, b = f % m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        e >>= 1;
        if (e) b = mul_mod(b, b, m);
    }
    return r;
}

int multiplicity(const FpPoly& f, const FpPoly& q) {
    if (f.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
    int k = 0;
    FpPoly g = f;
    while (true) {
        auto [quo, rem] = divmod(g, q);
        if (!rem.is_zero()) return k;
        g = std::move(quo);
        ++k;
    }
}

}  // namespace orbitale
