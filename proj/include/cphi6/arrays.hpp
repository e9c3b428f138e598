#ifndef CPHI6_ARRAYS_HPP
#define CPHI6_ARRAYS_HPP

/* Provider for the fundamental arrays a(k,m,n) and b(k,m,n), defined by
 *   U_A(p1 y^m t^k) = y^{3m+8} p0 * sum_n a(k,m,n) t^n,
 *   U_B(p0 y^m t^k) = y^{3m}   p1 * sum_n b(k,m,n) t^n.
 *
 * Rows are grown from the eighteen stored base rows (k in {-1,0,1},
 * m in {0,1,2}) by two upward recurrences:
 *   m-step: row(k,m) = g0*row(k,m-3) + g1*row(k,m-2) + g2*row(k,m-1)
 *   k-step: row(k,m) = u0*row(k-3,m) + u1*row(k-2,m) + u2*row(k-1,m)
 * with g_j the rewrite multipliers and u_j = -a_j(t).  All multipliers have
 * nonnegative exponents, so a degree cap D keeps every coefficient at
 * exponent <= D exact.  Downward extension (k < -1) is not implemented.
 *
 * Every computed row is checked at insertion time against the valuation
 * bounds  val3(a(k,m,n)) >= floor((2n-k+3)/3),
 *         val3(b(k,m,n)) >= floor((2n-k+2)/3)
 * and the order bounds  a(k,m,n) = 0 for n < ceil((k-3)/3),
 *                       b(k,m,n) = 0 for n < ceil((k-1)/3).
 *
 * Rows requested through the public API are persisted as JSON files
 * {array}_k{k}_m{m}_D{cap}.json holding
 * {"array":"a"|"b","k":int,"m":int,"values":{"n":"decimal"}}; a file with a
 * higher cap serves a lower-cap provider by truncation. */

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <tuple>

#include "cphi6/tpoly.hpp"

namespace cphi6 {

enum class RowProvenance { base, m_recurrence, k_recurrence };

class ArrayProvider {
public:
    explicit ArrayProvider(long cap, std::string cache_dir = "");

    /* the full row polynomial sum_n x(k,m,n) t^n, exact up to t^cap */
    const TPoly &row(char array, long k, long m);

    /* single entry; n must not exceed the cap */
    mpz_class value(char array, long k, long m, long n);

    long cap() const { return cap_; }
    const std::string &cache_dir() const { return cache_dir_; }
    static RowProvenance provenance(long k, long m);

private:
    using Key = std::tuple<char, long, long>;

    const TPoly &row_locked(char array, long k, long m);
    TPoly compute(char array, long k, long m);
    void check_row(char array, long k, long m, const TPoly &p) const;
    bool load_cached(char array, long k, long m, TPoly &out) const;
    void store_cached(char array, long k, long m, const TPoly &p) const;
    void persist_locked(char array, long k, long m, const TPoly &p);

    long cap_;
    std::string cache_dir_;
    std::map<Key, TPoly> rows_;
    std::set<Key> stored_;
    std::mutex mtx_;
};

} // namespace cphi6

#endif
