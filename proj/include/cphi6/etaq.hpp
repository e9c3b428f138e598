#ifndef CPHI6_ETAQ_HPP
#define CPHI6_ETAQ_HPP

/* Eta quotients prod eta(n tau)^e and q-Pochhammer products
 * prod (s q^b; q^c)_inf^e, with exact expansion into Series.
 *
 * An eta quotient expands as q^{sum n*e/24} times a mantissa product
 * prod (q^n;q^n)_inf^e; the mantissa has integer coefficients and constant
 * term 1, and the prefactor exponent must be an integer to expand on the
 * q-grid.  Mantissa factors are expanded through the sparse pentagonal
 * series for (q^c;q^c)_inf, multiplied or divided in via the gather kernel;
 * generic Pochhammer factors run as sequential binomial passes. */

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cphi6/series.hpp"

namespace cphi6 {

struct EtaFactor {
    long n; /* eta(n tau), n >= 1 */
    long e;
};
using EtaQuotient = std::vector<EtaFactor>;

struct PochFactor {
    int sign; /* +1 or -1 */
    long b;   /* >= 0 */
    long c;   /* >= 1 */
    long e;
};
using PochProduct = std::vector<PochFactor>;

struct Rational {
    long num;
    long den; /* > 0, reduced */
    bool is_integer() const { return den == 1; }
};

Rational q_order(const EtaQuotient &eq);
EtaQuotient parse_eta_quotient(const std::string &text);
std::string format_eta_quotient(const EtaQuotient &eq);

template <class R>
Series<R> make_const(const R &ring, long value, long prec) {
    if (prec <= 0) return Series<R>(ring, prec);
    std::vector<typename R::elem> c(static_cast<std::size_t>(prec), ring.zero());
    c[0] = ring.from_long(value);
    return Series<R>(ring, 0, std::move(c));
}

template <class R>
Series<R> make_one(const R &ring, long prec) {
    return make_const(ring, 1, prec);
}

/* sum_{k in Z} (-1)^k q^{c k(3k-1)/2} on the window [0, L) */
template <class R>
Series<R> pentagonal_series(const R &ring, long c, long L) {
    if (L <= 0) return Series<R>(ring, L);
    std::vector<typename R::elem> v(static_cast<std::size_t>(L), ring.zero());
    v[0] = ring.one();
    const typename R::elem minus_one = ring.neg(ring.one());
    for (long k = 1;; ++k) {
        const long g1 = c * (k * (3 * k - 1) / 2);
        const long g2 = c * (k * (3 * k + 1) / 2);
        if (g1 >= L) break;
        const typename R::elem s = (k % 2 != 0) ? minus_one : ring.one();
        v[static_cast<std::size_t>(g1)] = s;
        if (g2 < L) v[static_cast<std::size_t>(g2)] = s;
    }
    return Series<R>(ring, 0, std::move(v));
}

/* prod (q^n;q^n)_inf^e over the factor list, window [0, L) */
template <class R>
Series<R> expand_mantissa(const EtaQuotient &eq, const R &ring, long L) {
    Series<R> f = make_one(ring, L);
    for (const EtaFactor &fac : eq) {
        if (fac.n < 1) throw series_error("eta index must be positive");
        if (fac.e == 0) continue;
        Series<R> p = pentagonal_series(ring, fac.n, L);
        for (long rep = 0; rep < (fac.e > 0 ? fac.e : -fac.e); ++rep)
            f = fac.e > 0 ? mul(f, p) : divide(f, p);
    }
    return f;
}

/* q^{q_order} * mantissa, window [q_order, prec) */
template <class R>
Series<R> expand_eta(const EtaQuotient &eq, const R &ring, long prec) {
    const Rational qo = q_order(eq);
    if (!qo.is_integer())
        throw series_error("non-integral q-prefactor " + std::to_string(qo.num) + "/" +
                           std::to_string(qo.den) + " in eta quotient");
    const long ord = qo.num;
    if (prec <= ord) return Series<R>(ring, prec);
    return shift_q(expand_mantissa(eq, ring, prec - ord), ord);
}

namespace detail {

/* in-place multiply of the window v[0..L) by (1 + u q^d) */
template <class R>
void binomial_mul(const R &ring, std::vector<typename R::elem> &v, long d,
                  const typename R::elem &u) {
    const long L = static_cast<long>(v.size());
    for (long k = L - 1; k >= d; --k) {
        auto &vk = v[static_cast<std::size_t>(k)];
        vk = ring.add(vk, ring.mul(u, v[static_cast<std::size_t>(k - d)]));
    }
}

/* in-place divide of the window v[0..L) by (1 + u q^d) */
template <class R>
void binomial_div(const R &ring, std::vector<typename R::elem> &v, long d,
                  const typename R::elem &u) {
    const long L = static_cast<long>(v.size());
    for (long k = d; k < L; ++k) {
        auto &vk = v[static_cast<std::size_t>(k)];
        vk = ring.sub(vk, ring.mul(u, v[static_cast<std::size_t>(k - d)]));
    }
}

/* binomial-pass expansion of a full Pochhammer product, no pentagonal
 * shortcut; quadratic in the window but independent of the sparse route */
template <class R>
Series<R> expand_poch_binomial(const PochProduct &pp, const R &ring, long prec) {
    if (prec <= 0) return Series<R>(ring, prec);
    std::vector<typename R::elem> v(static_cast<std::size_t>(prec), ring.zero());
    v[0] = ring.one();
    for (const PochFactor &fac : pp) {
        if (fac.c < 1 || fac.b < 0) throw series_error("malformed Pochhammer factor");
        if (fac.e == 0) continue;
        if (fac.b == 0 && fac.sign > 0) {
            /* a (1 - q^0) = 0 factor annihilates the product */
            if (fac.e < 0) throw series_error("cannot invert a Pochhammer factor with zero constant term");
            return Series<R>(ring, prec);
        }
        const typename R::elem u = fac.sign > 0 ? ring.neg(ring.one()) : ring.one();
        for (long rep = 0; rep < (fac.e > 0 ? fac.e : -fac.e); ++rep)
            for (long d = fac.b; d < prec; d += fac.c)
                fac.e > 0 ? binomial_mul(ring, v, d, u) : binomial_div(ring, v, d, u);
    }
    return Series<R>(ring, 0, std::move(v));
}

} // namespace detail

/* window [0, prec); (q^c;q^c)-type factors go through the pentagonal sparse
 * series, everything else through binomial passes */
template <class R>
Series<R> expand_poch(const PochProduct &pp, const R &ring, long prec) {
    if (prec <= 0) return Series<R>(ring, prec);
    Series<R> f = make_one(ring, prec);
    PochProduct generic;
    for (const PochFactor &fac : pp) {
        if (fac.c < 1 || fac.b < 0) throw series_error("malformed Pochhammer factor");
        if (fac.e == 0) continue;
        if (fac.sign > 0 && fac.b == fac.c) {
            Series<R> p = pentagonal_series(ring, fac.c, prec);
            for (long rep = 0; rep < (fac.e > 0 ? fac.e : -fac.e); ++rep)
                f = fac.e > 0 ? mul(f, p) : divide(f, p);
        } else {
            generic.push_back(fac);
        }
    }
    if (!generic.empty()) f = mul(f, detail::expand_poch_binomial(generic, ring, prec));
    return f;
}

/* the named eta objects; L0 is the two-quotient sum plus the constant 24 */
const EtaQuotient &named_eta(const std::string &name);

template <class R>
Series<R> expand_named(const std::string &name, const R &ring, long prec) {
    if (name == "t" || name == "y" || name == "p0" || name == "p1" || name == "A" ||
        name == "B")
        return expand_eta(named_eta(name), ring, prec);
    if (name == "L0") {
        Series<R> s = expand_eta(named_eta("L0_first"), ring, prec);
        s = add(s, make_const(ring, 24, prec));
        return add(s, scal_long(expand_eta(named_eta("L0_second"), ring, prec), 4));
    }
    if (name == "weight_odd" || name == "weight_even")
        return expand_mantissa(named_eta(name), ring, prec);
    throw series_error("unknown generator name: " + name);
}

/* memoized named expansion; a longer cached window serves shorter requests */
template <class R>
Series<R> named_generator(const std::string &name, const R &ring, long prec) {
    static std::mutex mtx;
    static std::map<std::string, Series<R>> cache;
    const std::string key = name + "|" + ring.key();
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end() || it->second.prec() < prec) {
        Series<R> s = expand_named(name, ring, prec);
        if (it == cache.end())
            it = cache.emplace(key, std::move(s)).first;
        else
            it->second = std::move(s);
    }
    return it->second.truncated(prec);
}

} // namespace cphi6

#endif
