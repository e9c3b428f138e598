#ifndef CPHI6_RING_HPP
#define CPHI6_RING_HPP

/* Coefficient rings for truncated q-series:
 *   ExactRing  - arbitrary-precision signed integers,
 *   ModRing    - integers mod 3^K for K <= 38, stored in a machine word,
 *   BigModRing - integers mod 3^K for arbitrary K (word-width exceeded).
 *
 * A ring instance is carried by every series; operations that combine two
 * series require compatible rings (same kind and same K).  Each ring also
 * provides an accumulator type used by the convolution kernels, so that
 * mod-ring dot products can defer the expensive reduction: 128 products of
 * residues < 3^38 fit in an unsigned 128-bit accumulator
 * (128 * (3^38)^2 < 2^128). */

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <string>

#include "cphi6/ints.hpp"

namespace cphi6 {

struct ExactRing {
    using elem = mpz_class;
    static constexpr bool is_exact = true;

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_long(long v) const { return v; }
    elem from_mpz(const mpz_class &v) const { return v; }
    bool is_zero(const elem &a) const { return a == 0; }
    /* units of Z relevant to series inversion: leading coefficient +-1 */
    bool is_unit(const elem &a) const { return a == 1 || a == -1; }
    elem inv_unit(const elem &a) const {
        assert(is_unit(a));
        return a;
    }
    elem add(const elem &a, const elem &b) const { return a + b; }
    elem sub(const elem &a, const elem &b) const { return a - b; }
    elem mul(const elem &a, const elem &b) const { return a * b; }
    elem neg(const elem &a) const { return -a; }
    bool eq(const elem &a, const elem &b) const { return a == b; }
    std::string str(const elem &a) const { return a.get_str(); }
    std::string key() const { return "Z"; }
    bool compatible(const ExactRing &) const { return true; }

    struct Acc {
        mpz_class s;
        explicit Acc(const ExactRing &) {}
        void addmul(const elem &a, const elem &b) {
            mpz_addmul(s.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        }
        elem finish() { return s; }
    };
};

struct ModRing {
    int K = 1;
    std::uint64_t mod = 3;

    using elem = std::uint64_t;
    static constexpr bool is_exact = false;

    ModRing() = default;
    explicit ModRing(int k) : K(k), mod(pow3_u64(k)) { assert(k >= 1 && k <= 38); }

    elem zero() const { return 0; }
    elem one() const { return 1 % mod; }
    elem from_long(long v) const {
        long r = v % static_cast<long>(mod);
        if (r < 0) r += static_cast<long>(mod);
        return static_cast<elem>(r);
    }
    elem from_mpz(const mpz_class &v) const {
        return mpz_fdiv_ui(v.get_mpz_t(), mod);
    }
    bool is_zero(elem a) const { return a == 0; }
    /* units mod 3^K: residues not divisible by 3 */
    bool is_unit(elem a) const { return a % 3 != 0; }
    elem inv_unit(elem a) const {
        assert(is_unit(a));
        /* extended euclid on signed 128-bit; mod < 2^61 keeps it exact */
        __int128 r0 = static_cast<__int128>(mod), r1 = a;
        __int128 s0 = 0, s1 = 1;
        while (r1 != 0) {
            __int128 q = r0 / r1;
            __int128 r2 = r0 - q * r1; r0 = r1; r1 = r2;
            __int128 s2 = s0 - q * s1; s0 = s1; s1 = s2;
        }
        assert(r0 == 1);
        long s = static_cast<long>(s0 % static_cast<__int128>(mod));
        if (s < 0) s += static_cast<long>(mod);
        return static_cast<elem>(s);
    }
    elem add(elem a, elem b) const {
        elem s = a + b; /* < 2^62, no overflow */
        return s >= mod ? s - mod : s;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + mod - b; }
    elem mul(elem a, elem b) const {
        return static_cast<elem>((static_cast<unsigned __int128>(a) * b) % mod);
    }
    elem neg(elem a) const { return a == 0 ? 0 : mod - a; }
    bool eq(elem a, elem b) const { return a == b; }
    std::string str(elem a) const { return std::to_string(a); }
    std::string key() const { return "m3^" + std::to_string(K); }
    bool compatible(const ModRing &o) const { return K == o.K; }

    struct Acc {
        unsigned __int128 s = 0;
        std::uint64_t m;
        int n = 0;
        explicit Acc(const ModRing &r) : m(r.mod) {}
        void addmul(elem a, elem b) {
            s += static_cast<unsigned __int128>(a) * b;
            /* 128 summands of (3^38-1)^2 stay below 2^128; reduce then */
            if (++n == 128) { s %= m; n = 0; }
        }
        elem finish() { return static_cast<elem>(s % m); }
    };
};

struct BigModRing {
    int K = 39;
    mpz_class mod;

    using elem = mpz_class;
    static constexpr bool is_exact = false;

    BigModRing() : mod(pow3_mpz(39)) {}
    explicit BigModRing(int k) : K(k), mod(pow3_mpz(k)) { assert(k >= 1); }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_long(long v) const { return reduce(mpz_class(v)); }
    elem from_mpz(const mpz_class &v) const { return reduce(v); }
    elem reduce(const mpz_class &v) const {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
        return r;
    }
    bool is_zero(const elem &a) const { return a == 0; }
    bool is_unit(const elem &a) const { return mpz_fdiv_ui(a.get_mpz_t(), 3) != 0; }
    elem inv_unit(const elem &a) const {
        mpz_class r;
        int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
        assert(ok != 0);
        (void)ok;
        return r;
    }
    elem add(const elem &a, const elem &b) const { return reduce(a + b); }
    elem sub(const elem &a, const elem &b) const { return reduce(a - b); }
    elem mul(const elem &a, const elem &b) const { return reduce(a * b); }
    elem neg(const elem &a) const { return reduce(-a); }
    bool eq(const elem &a, const elem &b) const { return a == b; }
    std::string str(const elem &a) const { return a.get_str(); }
    std::string key() const { return "M3^" + std::to_string(K); }
    bool compatible(const BigModRing &o) const { return K == o.K; }

    struct Acc {
        mpz_class s;
        const BigModRing *r;
        explicit Acc(const BigModRing &ring) : r(&ring) {}
        void addmul(const elem &a, const elem &b) {
            mpz_addmul(s.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        }
        elem finish() { return r->reduce(s); }
    };
};

} // namespace cphi6

#endif
