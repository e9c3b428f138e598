#ifndef CPHI6_FROB6_HPP
#define CPHI6_FROB6_HPP

/* The 6-colored count c(n) and its congruence checks.  The production
 * series comes from the theta representation
 *   sum c(n) q^n = [ phi^3(q) phi(q^2) phi(q^6) + 24q psi^3(q) psi(q^2) psi(q^3)
 *                    + 4q^2 phi^3(q) psi(q^4) psi(q^12) ] / (q;q)_inf^6
 * with phi(q) = (q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2) and
 * psi(q) = (q^2;q^2)^2 / (q;q), both expanded through sparse pentagonal
 * factors.  Two independent oracles cross-check it: the 5-fold quadratic-form
 * theta sum over the same denominator, and a direct subset-count of two-row
 * colored arrays for very small n. */

#include <vector>

#include "cphi6/etaq.hpp"
#include "cphi6/ring.hpp"
#include "cphi6/series.hpp"

namespace cphi6 {

template <class R>
Series<R> phi_theta(const R &ring, long m, long N) {
    return expand_mantissa({{2 * m, 5}, {m, -2}, {4 * m, -2}}, ring, N);
}

template <class R>
Series<R> psi_theta(const R &ring, long m, long N) {
    return expand_mantissa({{2 * m, 2}, {m, -1}}, ring, N);
}

template <class R>
Series<R> cphi6_series(const R &ring, long N) {
    const Series<R> phi1 = phi_theta(ring, 1, N);
    const Series<R> phi1_3 = mul(mul(phi1, phi1), phi1);
    const Series<R> psi1 = psi_theta(ring, 1, N);

    Series<R> num = mul(mul(phi1_3, phi_theta(ring, 2, N)), phi_theta(ring, 6, N));
    num = add(num,
              shift_q(scal_long(mul(mul(mul(mul(psi1, psi1), psi1),
                                         psi_theta(ring, 2, N)),
                                     psi_theta(ring, 3, N)),
                                24),
                      1)
                  .truncated(N));
    num = add(num,
              shift_q(scal_long(mul(mul(phi1_3, psi_theta(ring, 4, N)),
                                    psi_theta(ring, 12, N)),
                                4),
                      2)
                  .truncated(N));

    const Series<R> penta = pentagonal_series(ring, 1, N);
    Series<R> out = num;
    for (int i = 0; i < 6; ++i) out = divide(out, penta);
    return out;
}

/* c(0..N-1) by the 5-variable quadratic-form sum; exact, meant for small N */
std::vector<mpz_class> cphi6_oracle_andrews(long N);

/* c(0..n_max) counted from two-row colored arrays; n_max <= 10 or so */
std::vector<mpz_class> cphi6_enumerate(long n_max);

/* residue target index: (3^alpha + 1)/4 for odd alpha, (3^{alpha+1} + 1)/4
 * for even alpha */
long lambda(int alpha);

/* shared mod-3^K coefficient table, grown monotonically per K */
Series<ModRing> cphi6_table(int K, long N);

struct TheoremOutcome {
    bool pass = true;
    long checks = 0;
    std::string witness;
};

/* c(3^alpha n + lambda_alpha) == 0 mod 3^{floor(alpha/2)+2} for
 * 1 <= alpha <= alpha_max, 0 <= n <= n_max */
TheoremOutcome check_theorem(int alpha_max, long n_max, int K = 12);

/* the four previously published congruences */
TheoremOutcome check_known_congruences();

} // namespace cphi6

#endif
