#include "cphi6/frob6.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>

#include "cphi6/ints.hpp"

namespace cphi6 {

std::vector<mpz_class> cphi6_oracle_andrews(long N) {
    if (N <= 0) return {};
    /* theta coefficient at q^Q counts m in Z^5 with
     * Q = (sum m_i^2 + (sum m_i)^2) / 2; track (sum, sum of squares) */
    const long emax = 2 * (N - 1);
    long B = 0;
    while ((B + 1) * (B + 1) <= emax) ++B;
    const long smax = 5 * B;
    const long soff = smax;

    std::vector<std::vector<long>> dp(
        static_cast<std::size_t>(2 * smax + 1),
        std::vector<long>(static_cast<std::size_t>(emax + 1), 0));
    dp[static_cast<std::size_t>(soff)][0] = 1;
    for (int var = 0; var < 5; ++var) {
        std::vector<std::vector<long>> nx(
            dp.size(), std::vector<long>(static_cast<std::size_t>(emax + 1), 0));
        for (long s = -smax; s <= smax; ++s)
            for (long e = 0; e <= emax; ++e) {
                const long c = dp[static_cast<std::size_t>(s + soff)]
                                 [static_cast<std::size_t>(e)];
                if (c == 0) continue;
                for (long m = -B; m <= B; ++m) {
                    const long e2 = e + m * m;
                    const long s2 = s + m;
                    if (e2 > emax || s2 < -smax || s2 > smax) continue;
                    nx[static_cast<std::size_t>(s2 + soff)]
                      [static_cast<std::size_t>(e2)] += c;
                }
            }
        dp = std::move(nx);
    }

    std::vector<mpz_class> theta(static_cast<std::size_t>(N), 0);
    for (long s = -smax; s <= smax; ++s)
        for (long e = 0; e <= emax; ++e) {
            const long c = dp[static_cast<std::size_t>(s + soff)]
                             [static_cast<std::size_t>(e)];
            if (c == 0) continue;
            const long q2 = e + s * s;
            if (q2 % 2 != 0 || q2 / 2 >= N) continue;
            theta[static_cast<std::size_t>(q2 / 2)] += c;
        }

    const ExactRing ring;
    Series<ExactRing> f(ring, 0, std::move(theta));
    const Series<ExactRing> penta = pentagonal_series(ring, 1, N);
    for (int i = 0; i < 6; ++i) f = divide(f, penta);

    std::vector<mpz_class> out(static_cast<std::size_t>(N), 0);
    for (long n = 0; n < N; ++n) out[static_cast<std::size_t>(n)] = f.coeff(n);
    return out;
}

std::vector<mpz_class> cphi6_enumerate(long n_max) {
    /* a two-row array contributing to n uses rows of the same length r made
     * of distinct (value, color) pairs, with n = r + (row value sums) */
    const long V = n_max + 1; /* values 0..n_max suffice */
    const long R = n_max;     /* row length r contributes r to n */
    std::vector<std::vector<mpz_class>> rows(
        static_cast<std::size_t>(R + 1),
        std::vector<mpz_class>(static_cast<std::size_t>(n_max + 1), 0));
    rows[0][0] = 1;
    for (long v = 0; v < V; ++v)
        for (int color = 0; color < 6; ++color)
            for (long r = std::min<long>(R, 6 * v + color + 1); r >= 1; --r)
                for (long s = n_max; s >= v; --s)
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] +=
                        rows[static_cast<std::size_t>(r - 1)]
                            [static_cast<std::size_t>(s - v)];

    std::vector<mpz_class> out(static_cast<std::size_t>(n_max + 1), 0);
    for (long n = 0; n <= n_max; ++n)
        for (long r = 0; r <= n; ++r)
            for (long sa = 0; sa + r <= n; ++sa)
                out[static_cast<std::size_t>(n)] +=
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(sa)] *
                    rows[static_cast<std::size_t>(r)]
                        [static_cast<std::size_t>(n - r - sa)];
    return out;
}

long lambda(int alpha) {
    if (alpha < 1 || alpha > 37)
        throw series_error("lambda supported for 1 <= alpha <= 37");
    const int e = (alpha % 2 != 0) ? alpha : alpha + 1;
    long p = 1;
    for (int i = 0; i < e; ++i) p *= 3;
    return (p + 1) / 4;
}

Series<ModRing> cphi6_table(int K, long N) {
    static std::mutex mtx;
    static std::map<int, Series<ModRing>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(K);
    if (it == cache.end() || it->second.prec() < N) {
        Series<ModRing> s = cphi6_series(ModRing(K), N);
        if (it == cache.end())
            it = cache.emplace(K, std::move(s)).first;
        else
            it->second = std::move(s);
    }
    return it->second.truncated(N);
}

TheoremOutcome check_theorem(int alpha_max, long n_max, int K) {
    if (alpha_max < 1) throw series_error("alpha_max must be at least 1");
    if (n_max < 0) throw series_error("n_max must be nonnegative");
    if (K < alpha_max / 2 + 2)
        throw series_error("modulus exponent too small for this alpha range");

    long stride_top = 1;
    for (int i = 0; i < alpha_max; ++i) stride_top *= 3;
    const long N = stride_top * n_max + lambda(alpha_max) + 1;
    const Series<ModRing> tab = cphi6_table(K, N);

    TheoremOutcome out;
    long stride = 1;
    for (int a = 1; a <= alpha_max; ++a) {
        stride *= 3;
        const std::uint64_t M = pow3_u64(a / 2 + 2);
        const long base = lambda(a);
        for (long n = 0; n <= n_max; ++n) {
            const std::uint64_t r = tab.coeff(stride * n + base);
            if (r % M != 0) {
                out.pass = false;
                out.witness = "c(" + std::to_string(stride * n + base) +
                              ") = " + std::to_string(r) + " mod 3^" +
                              std::to_string(K) + " is not divisible by 3^" +
                              std::to_string(a / 2 + 2);
                return out;
            }
            ++out.checks;
        }
    }
    out.witness = "alpha <= " + std::to_string(alpha_max) + ", n <= " +
                  std::to_string(n_max) +
                  ": each target coefficient vanishes mod 3^(floor(alpha/2)+2)";
    return out;
}

TheoremOutcome check_known_congruences() {
    struct Family {
        long stride, base, n_max;
        int pow;
    };
    const Family fams[4] = {
        {3, 2, 500, 3},
        {9, 7, 500, 3},
        {19683, 11482, 1, 7},
        {59049, 44287, 0, 7},
    };
    const Series<ModRing> tab = cphi6_table(9, 44288);

    TheoremOutcome out;
    for (const Family &f : fams) {
        const std::uint64_t M = pow3_u64(f.pow);
        for (long n = 0; n <= f.n_max; ++n) {
            const std::uint64_t r = tab.coeff(f.stride * n + f.base);
            if (r % M != 0) {
                out.pass = false;
                out.witness = "c(" + std::to_string(f.stride) + "n+" +
                              std::to_string(f.base) + ") fails mod 3^" +
                              std::to_string(f.pow) + " at n = " +
                              std::to_string(n);
                return out;
            }
            ++out.checks;
        }
    }
    out.witness = "published congruence families hold on their sampled ranges";
    return out;
}

} // namespace cphi6
