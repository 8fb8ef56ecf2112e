#ifndef ORBITALE_FFPOLY_RESULTANT_HPP_
#define ORBITALE_FFPOLY_RESULTANT_HPP_

#include "orbitale/ffpoly/poly.hpp"

#include <stdexcept>
#include <utility>

namespace orbitale {

/// Sylvester resultant Res(f, g) = lc(f)^deg g * prod_{f(r)=0} g(r), by the
/// fraction-free subresultant PRS. All divisions in the recurrence are exact.
template <class T>
T sylvester_resultant(Poly<T> a, Poly<T> b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant of the zero polynomial");
    const T one = a.lead().one();
    auto ipow = [&](T x, long e) {
        T r = one;
        for (long i = 0; i < e; ++i) r = r * x;
        return r;
    };
    bool negate = false;
    if (a.degree() < b.degree()) {
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) negate = true;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        T r = ipow(b.lead(), a.degree());
        return negate ? -r : r;
    }
    T g = one, h = one;
    while (true) {
        const long delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) negate = !negate;
        Poly<T> r = pseudo_rem(a, b);
        a = std::move(b);
        if (r.is_zero()) return one.zero();
        b = r.scaled(one / (g * ipow(h, delta)));
        g = a.lead();
        // h <- g^delta / h^(delta - 1)
        h = ipow(g, delta) / ipow(h, delta - 1);
        if (b.degree() == 0) break;
    }
    // h <- lc(b)^deg a / h^(deg a - 1)
    T res = ipow(b.lead(), a.degree()) / ipow(h, a.degree() - 1);
    return negate ? -res : res;
}

/// Resultant under the convention Res(f, g) = lc(g)^deg f * prod_{g(r)=0} f(r),
/// i.e. (-1)^(deg f * deg g) times the Sylvester resultant. Consumers only
/// take valuations of it, which are sign-independent.
template <class T>
T resultant(const Poly<T>& f, const Poly<T>& g) {
    T r = sylvester_resultant(f, g);
    if ((static_cast<long>(f.degree()) * g.degree()) % 2 != 0) r = -r;
    return r;
}

}  // namespace orbitale

#endif  // ORBITALE_FFPOLY_RESULTANT_HPP_
