#ifndef CPHI6_INTS_HPP
#define CPHI6_INTS_HPP

/* Small integer utilities shared across the library: the 3-adic valuation
 * (with val3(0) = +infinity by convention), powers of 3, and floor/ceil
 * division helpers that are correct for negative operands. */

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <limits>
#include <string>

namespace cphi6 {

/* 3-adic valuation value: a nonnegative integer or +infinity. */
struct Val {
    bool inf = false;
    long v = 0;

    static Val infinity() { return Val{true, 0}; }
    static Val of(long x) { return Val{false, x}; }

    bool operator==(const Val &o) const {
        return inf == o.inf && (inf || v == o.v);
    }
    bool operator!=(const Val &o) const { return !(*this == o); }
    /* pi(xy) = pi(x) + pi(y) */
    Val operator+(const Val &o) const {
        if (inf || o.inf) return infinity();
        return of(v + o.v);
    }
    bool operator>=(long bound) const { return inf || v >= bound; }
    bool operator<(long bound) const { return !(*this >= bound); }

    std::string str() const { return inf ? "inf" : std::to_string(v); }
};

inline Val val3(const mpz_class &x) {
    if (x == 0) return Val::infinity();
    mpz_class rem;
    const mpz_class three = 3;
    mp_bitcnt_t k = mpz_remove(rem.get_mpz_t(), x.get_mpz_t(), three.get_mpz_t());
    return Val::of(static_cast<long>(k));
}

inline Val val3(long x) {
    if (x == 0) return Val::infinity();
    long k = 0;
    while (x % 3 == 0) { x /= 3; ++k; }
    return Val::of(k);
}

/* 3^k as uint64; valid for 0 <= k <= 40. */
inline std::uint64_t pow3_u64(int k) {
    assert(k >= 0 && k <= 40);
    std::uint64_t r = 1;
    while (k-- > 0) r *= 3u;
    return r;
}

inline mpz_class pow3_mpz(long k) {
    assert(k >= 0);
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3u, static_cast<unsigned long>(k));
    return r;
}

/* floor(a/b) and ceil(a/b) for b > 0, exact for negative a. */
inline long floor_div(long a, long b) {
    assert(b > 0);
    long q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

inline long ceil_div(long a, long b) {
    assert(b > 0);
    return -floor_div(-a, b);
}

} // namespace cphi6

#endif
