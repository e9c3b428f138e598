#ifndef CPHI6_TOWER_HPP
#define CPHI6_TOWER_HPP

/* The operator tower L_0, L_1, L_2, ... with
 *   L_0 = 1/t + 27 + 3t + 9t^2,
 *   L_{2a-1} = U_3(A * L_{2a-2}),  L_{2a} = U_3(B * L_{2a-1}),
 * together with the finite t-polynomial rows d_n^{(beta)} attached to each
 * level through L_beta = weight * y^{f(beta)} * sum_n d_n^{(beta)} t^n.
 * The rows are computed twice: symbolically through the stored base rows and
 * the two array recurrences, and directly from the q-series by weight
 * division and order peeling.
 *
 * Each application of U_3 divides the usable window by three, so a level
 * requested at precision P asks its predecessor for 3P + 3 coefficients;
 * the overhead of 3 absorbs the negative orders of A and B. */

#include <map>
#include <string>

#include "cphi6/arrays.hpp"
#include "cphi6/etaq.hpp"
#include "cphi6/ring.hpp"
#include "cphi6/series.hpp"

namespace cphi6 {

template <class R>
Series<R> apply_UA(const Series<R> &f) {
    /* A has order -3; this window makes the product as long as f allows */
    Series<R> A = named_generator("A", f.ring(), f.prec() - 3 - f.ord());
    return u_operator(mul(A, f), 3);
}

template <class R>
Series<R> apply_UB(const Series<R> &f) {
    /* B has order -1 */
    Series<R> B = named_generator("B", f.ring(), f.prec() - 1 - f.ord());
    return u_operator(mul(B, f), 3);
}

template <class R>
Series<R> L_series(int beta, const R &ring, long prec) {
    if (beta < 0) throw series_error("tower level must be nonnegative");
    if (beta == 0) {
        Series<R> t = named_generator("t", ring, prec + 2);
        Series<R> L = add(invert(t), make_const(ring, 27, prec));
        L = add(L, scal_long(t, 3));
        return add(L, scal_long(mul(t, t), 9));
    }
    Series<R> prev = L_series(beta - 1, ring, 3 * prec + 3);
    return (beta % 2 == 1) ? apply_UA(prev) : apply_UB(prev);
}

struct IdentityCheck {
    bool pass = false;
    long window = 0; /* q-exponents the check actually covered */
    std::string witness;
};

/* the cubic modular equation for t, its y-form, and the substitution
 * self-check t(q^3) == tripled eta quotient */
IdentityCheck verify_modeq_t(long prec = 300);
IdentityCheck verify_modeq_y(long prec = 300);
IdentityCheck verify_modeq_t_mutated(long prec = 120);
IdentityCheck verify_tripled_t(long prec = 300);
IdentityCheck verify_tripled_y(long prec = 300);

/* U_3(t) = 3t^3 - 2t and U_3(1/t) = t */
IdentityCheck verify_u3_t(long prec = 200);
IdentityCheck verify_u3_t_inverse(long prec = 200);

/* the two array recurrences as q-series operator identities; weight is
 * 'a' (A-side), 'b' (B-side) or '1' (bare power, no eta multiplier) */
IdentityCheck verify_k_recurrence_qseries(char weight, long k, long prec = 120);
IdentityCheck verify_m_recurrence_qseries(char weight, long m, long prec = 120);

/* y-exponent f(beta) of level beta: f(1) = 8, then *3 at even steps and
 * *3 + 8 at odd steps; equals 3^{beta+1} - 1 (odd) or 3^{beta+1} - 3 (even) */
long y_exponent(int beta);

/* the row d_n^{(level)} for n in [-1, n_max], exact, via the stored base
 * rows and the recurrences held by the provider */
std::map<long, mpz_class> d_coeffs_symbolic(int level, long n_max,
                                            ArrayProvider &ap);

/* the provider cap d_coeffs_symbolic needs for this request */
long d_symbolic_cap(int level, long n_max);

struct DRow {
    std::map<long, mpz_class> poly;
    bool complete = false; /* no terms remain above n_max */
};

/* the same row read off the actual q-series of L_level */
DRow d_coeffs_qseries(int level, long n_max);

struct LemmaOutcome {
    bool pass = true;
    long rows_checked = 0;
    std::string witness;
};

/* 3-adic lower bounds on every d_n^{(beta)} for beta in [1, level_max]:
 * floor((2n+5)/3) + ceil(beta/2), with the sharper bound ceil(beta/2) + 2
 * at n = 0 on even levels and d_{-1} = 0 there; also checks that the
 * smallest bound per level equals floor(beta/2) + 2 */
LemmaOutcome check_main_lemma(int level_max, long n_max, ArrayProvider &ap);

/* closed three-term recurrences for b(-1,m,0), a(0,m,0) (coupled with
 * a(0,m,-1) = 1) and a(1,m,0), checked against the provider together with
 * divisibility by 3 of every term */
LemmaOutcome check_divisibility_recurrences(long m_max = 100);

} // namespace cphi6

#endif
