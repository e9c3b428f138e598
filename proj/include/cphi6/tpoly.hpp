#ifndef CPHI6_TPOLY_HPP
#define CPHI6_TPOLY_HPP

/* Sparse Laurent polynomials in t with exact integer coefficients, used for
 * the appendix rows, the modular-equation coefficients, and the fundamental
 * arrays.  Stored zeros are pruned.  A polynomial may carry a truncation
 * cap D: exponents above D are dropped and the poly is flagged truncated.
 * Both recurrences that run on capped polynomials multiply only by
 * polynomials of nonnegative exponents, so degrees only move upward and
 * coefficients at exponents <= D stay exact. */

#include <gmpxx.h>

#include <limits>
#include <map>
#include <string>

#include "cphi6/ints.hpp"
#include "cphi6/series.hpp"

namespace cphi6 {

struct TPoly {
    std::map<long, mpz_class> c;
    long cap = std::numeric_limits<long>::max();
    bool truncated = false;

    bool is_zero() const { return c.empty(); }
    long min_exp() const { return c.empty() ? 0 : c.begin()->first; }
    long max_exp() const { return c.empty() ? 0 : c.rbegin()->first; }

    const mpz_class &coeff(long n) const {
        static const mpz_class zero = 0;
        auto it = c.find(n);
        return it == c.end() ? zero : it->second;
    }

    void set(long n, const mpz_class &v) {
        if (n > cap) {
            truncated = true;
            return;
        }
        if (v == 0)
            c.erase(n);
        else
            c[n] = v;
    }

    /* this += f * t^shift * g */
    void add_scaled(const TPoly &g, const mpz_class &f, long shift = 0) {
        if (f == 0) return;
        truncated = truncated || g.truncated;
        for (const auto &[n, v] : g.c) {
            const long m = n + shift;
            if (m > cap) {
                truncated = true;
                continue;
            }
            auto it = c.find(m);
            if (it == c.end()) it = c.emplace(m, 0).first;
            mpz_addmul(it->second.get_mpz_t(), f.get_mpz_t(), v.get_mpz_t());
            if (it->second == 0) c.erase(it);
        }
    }
};

inline TPoly tp_from(std::map<long, mpz_class> coeffs,
                     long cap = std::numeric_limits<long>::max()) {
    TPoly p;
    p.cap = cap;
    for (auto &[n, v] : coeffs) p.set(n, v);
    return p;
}

inline TPoly tp_add(const TPoly &a, const TPoly &b) {
    TPoly r = a;
    r.add_scaled(b, 1);
    return r;
}

inline TPoly tp_scal(const TPoly &a, const mpz_class &f) {
    TPoly r;
    r.cap = a.cap;
    r.truncated = a.truncated;
    r.add_scaled(a, f);
    return r;
}

inline TPoly tp_mul(const TPoly &a, const TPoly &b, long cap) {
    TPoly r;
    r.cap = cap;
    r.truncated = a.truncated || b.truncated;
    for (const auto &[n, v] : a.c) r.add_scaled(b, v, n);
    return r;
}

inline bool tp_equal(const TPoly &a, const TPoly &b) { return a.c == b.c; }

inline std::string tp_str(const TPoly &p) {
    if (p.c.empty()) return "0";
    std::string s;
    for (const auto &[n, v] : p.c) {
        if (!s.empty()) s += " + ";
        s += v.get_str() + "*t^" + std::to_string(n);
    }
    if (p.truncated) s += " (truncated beyond t^" + std::to_string(p.cap) + ")";
    return s;
}

/* evaluate a Laurent polynomial on a series argument */
template <class R>
Series<R> tp_eval(const TPoly &p, const Series<R> &x) {
    Series<R> acc(x.ring(), x.prec());
    for (const auto &[n, v] : p.c)
        acc = add(acc, scal(pow(x, n), x.ring().from_mpz(v)));
    return acc;
}

} // namespace cphi6

#endif
