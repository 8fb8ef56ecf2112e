#ifndef ORBITALE_FFPOLY_POLY_HPP_
#define ORBITALE_FFPOLY_POLY_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitale {

// Coefficient types used with Poly<T> provide the field operations
// (+ - * / unary-, ==) plus is_zero(), zero(), one() and from_int(k), the
// last three producing elements of the same field as *this.
template <class T>
concept FieldElement = requires(const T& a, std::int64_t k) {
    { a + a } -> std::convertible_to<T>;
    { a - a } -> std::convertible_to<T>;
    { a * a } -> std::convertible_to<T>;
    { a / a } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero() } -> std::convertible_to<T>;
    { a.one() } -> std::convertible_to<T>;
    { a.from_int(k) } -> std::convertible_to<T>;
};

/// Dense univariate polynomial, coefficients low-to-high; the zero
/// polynomial is the empty vector.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
    static Poly monomial(const T& c, std::size_t k) {
        std::vector<T> v(k + 1, c.zero());
        v[k] = c;
        return Poly(std::move(v));
    }
    /// x itself, in the field of `proto`.
    static Poly x(const T& proto) { return monomial(proto.one(), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const T& lead() const { return c_.back(); }
    const T& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<T>& coeffs() const { return c_; }
    /// Coefficient i, with `zero` returned past the degree.
    T coeff(std::size_t i, const T& zero) const { return i < c_.size() ? c_[i] : zero; }

    Poly operator-() const {
        std::vector<T> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(-a);
        return Poly(std::move(v));
    }
    friend Poly operator+(const Poly& f, const Poly& g) {
        if (f.c_.size() < g.c_.size()) return g + f;
        std::vector<T> v = f.c_;
        for (std::size_t i = 0; i < g.c_.size(); ++i) v[i] = v[i] + g.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }
    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return Poly();
        std::vector<T> v(f.c_.size() + g.c_.size() - 1, f.c_[0].zero());
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j) v[i + j] = v[i + j] + f.c_[i] * g.c_[j];
        }
        return Poly(std::move(v));
    }
    Poly scaled(const T& k) const {
        std::vector<T> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(a * k);
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }

    T eval(const T& x) const {
        if (is_zero()) return x.zero();
        T r = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            v.push_back(c_[i] * c_[i].from_int(static_cast<std::int64_t>(i)));
        return Poly(std::move(v));
    }

    Poly compose(const Poly& g) const {
        Poly r;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(c_[i]);
        return r;
    }

    /// f(x + a) by synthetic division (repeated Horner steps).
    Poly taylor_shift(const T& a) const {
        std::vector<T> v = c_;
        const std::size_t n = v.size();
        for (std::size_t k = 0; k + 1 < n; ++k)
            for (std::size_t i = n - 1; i-- > k;) v[i] = v[i] + a * v[i + 1];
        return Poly(std::move(v));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().one() / lead());
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& f, const Poly<T>& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly<T>(), f};
    std::vector<T> r = f.coeffs();
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    const T inv = g.lead().one() / g.lead();
    std::vector<T> q(r.size() - dg, g.lead().zero());
    for (std::size_t i = r.size(); i-- > dg;) {
        const T c = r[i] * inv;
        q[i - dg] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] = r[i - dg + j] - c * g[j];
    }
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(dg), r.end());
    return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

/// Monic gcd.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        Poly<T> r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class T>
Poly<T> pow(const Poly<T>& f, std::uint64_t e) {
    if (f.is_zero()) {
        if (e == 0) throw std::domain_error("0^0");
        return f;
    }
    Poly<T> r = Poly<T>::constant(f.lead().one()), b = f;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r.
template <class T>
Poly<T> pseudo_rem(const Poly<T>& f, const Poly<T>& g) {
    if (g.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    if (f.degree() < g.degree()) return f;
    const T& lc = g.lead();
    std::vector<T> r = f.coeffs();
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    // One step per coefficient from deg f down to deg g: deg f - deg g + 1
    // multiplications by lc in total.
    for (std::size_t i = r.size(); i-- > dg;) {
        const T c = r[i];
        for (std::size_t j = 0; j < i; ++j) r[j] = r[j] * lc;
        for (std::size_t j = 0; j < dg; ++j) r[i - dg + j] = r[i - dg + j] - c * g[j];
        r[i] = lc.zero();
    }
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(dg), r.end());
    return Poly<T>(std::move(r));
}

template <class T, class Printer>
std::string poly_to_string(const Poly<T>& f, const std::string& var, Printer&& print_coeff) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const T& c = f[i];
        if (c.is_zero()) continue;
        if (!s.empty()) s += "+";
        const bool unit = c == c.one();
        if (i == 0) {
            s += "(" + print_coeff(c) + ")";
            continue;
        }
        if (!unit) s += "(" + print_coeff(c) + ")*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace orbitale

#endif  // ORBITALE_FFPOLY_POLY_HPP_
