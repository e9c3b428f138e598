#ifndef CPHI6_MODEQ_HPP
#define CPHI6_MODEQ_HPP

/* Coefficient data of the two cubic modular equations:
 *   X^3 + a2(t)X^2 + a1(t)X + a0(t) = 0   satisfied by X = t(q) over t(q^3),
 *   X^3 + b2(y)X^2 + b1(y)X + b0(y) = 0   satisfied by X = y(q) over y(q^3),
 * plus the s-table generating the a_j, and the rewrites
 *   b_j(y) = -y^{p_j} * g_j(t)  with  (p_0,p_1,p_2) = (9,6,3),
 * which are rederived here from b_j and y = 1/(1-3t) by exact polynomial
 * algebra rather than trusted from any transcription.  The g_j are the
 * multipliers of the m-recurrence on array rows, and -a_j are the
 * multipliers of the k-recurrence. */

#include <map>

#include "cphi6/tpoly.hpp"

namespace cphi6 {

struct BRewrite {
    long y_power;
    TPoly poly; /* b_j(y) = -y^{y_power} * poly(t) */
};

struct ModEqCoeffs {
    TPoly a[3];
    std::map<long, mpz_class> b[3]; /* y-degree -> coefficient */
    BRewrite rw[3];
    long s[3][4]; /* s[j][l] for l = 1..3; s[j][0] unused */
};

/* canonical instance; rw derived by exact algebra at construction */
const ModEqCoeffs &modeq_coeffs();

/* a_j(t) = sum_{l=1..3} s(j,l) 3^{floor((2l+j)/3)} t^l */
TPoly a_poly_from_s(int j);

/* m-recurrence: row(m) = g0*row(m-3) + g1*row(m-2) + g2*row(m-1) */
const TPoly &m_multiplier(int j);

/* k-recurrence: row(k) = u0*row(k-3) + u1*row(k-2) + u2*row(k-1), u_j = -a_j */
const TPoly &k_multiplier(int j);

/* two transcribed variants of the b_1 rewrite circulate, differing at
 * degrees 3 and 4; value = sign * y^{y_power} * poly.  The exact derivation
 * decides which (if either) is correct. */
struct PrintedForm {
    int sign;
    long y_power;
    TPoly poly;
};
const PrintedForm &b1_rewrite_variant_display();
const PrintedForm &b1_rewrite_variant_inline();

/* (1-3t)^e as a TPoly */
TPoly one_minus_3t_power(long e);

} // namespace cphi6

#endif
