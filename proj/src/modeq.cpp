#include "cphi6/modeq.hpp"

namespace cphi6 {

TPoly one_minus_3t_power(long e) {
    TPoly base = tp_from({{0, 1}, {1, -3}});
    TPoly r = tp_from({{0, 1}});
    for (long i = 0; i < e; ++i) r = tp_mul(r, base, std::numeric_limits<long>::max());
    return r;
}

TPoly a_poly_from_s(int j) {
    const ModEqCoeffs &mc = modeq_coeffs();
    TPoly p;
    for (long l = 1; l <= 3; ++l) {
        const long fl = floor_div(2 * l + j, 3);
        p.set(l, p.coeff(l) + mpz_class(mc.s[j][l]) * pow3_mpz(fl));
    }
    return p;
}

namespace {

/* b_j(y) with y = 1/(1-3t): clearing (1-3t)^{p} gives
 *   -poly = sum_d beta_d (1-3t)^{p-d},  so  poly = -sum_d beta_d (1-3t)^{p-d} */
TPoly derive_rewrite_poly(const std::map<long, mpz_class> &b, long y_power) {
    TPoly acc;
    for (const auto &[d, beta] : b) acc.add_scaled(one_minus_3t_power(y_power - d), -beta);
    return acc;
}

ModEqCoeffs build() {
    ModEqCoeffs mc;
    mc.a[0] = tp_from({{1, -1}});
    mc.a[1] = tp_from({{2, 3}});
    mc.a[2] = tp_from({{3, -9}, {1, 6}});
    mc.b[0] = {{3, -1}};
    mc.b[1] = {{3, 8}, {2, -3}, {1, -3}, {0, 1}};
    mc.b[2] = {{3, -16}, {2, 12}, {1, 3}, {0, -2}};
    const long powers[3] = {9, 6, 3};
    for (int j = 0; j < 3; ++j)
        mc.rw[j] = BRewrite{powers[j], derive_rewrite_poly(mc.b[j], powers[j])};
    const long s_rows[3][4] = {{0, -1, 0, 0}, {0, 0, 1, 0}, {0, 2, 0, -1}};
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 4; ++l) mc.s[j][l] = s_rows[j][l];
    return mc;
}

} // namespace

const ModEqCoeffs &modeq_coeffs() {
    static const ModEqCoeffs mc = build();
    return mc;
}

const TPoly &m_multiplier(int j) { return modeq_coeffs().rw[j].poly; }

const TPoly &k_multiplier(int j) {
    static const TPoly u[3] = {tp_scal(modeq_coeffs().a[0], -1),
                               tp_scal(modeq_coeffs().a[1], -1),
                               tp_scal(modeq_coeffs().a[2], -1)};
    return u[j];
}

const PrintedForm &b1_rewrite_variant_display() {
    static const PrintedForm f{
        -1, 6, tp_from({{0, -3}, {1, 9}, {2, 81}, {3, -378}, {4, 243}, {5, 729}, {6, -729}})};
    return f;
}

const PrintedForm &b1_rewrite_variant_inline() {
    /* transcribed from its appearance as the multiplier -b_1; as a form of
     * b_1 it carries the same leading minus as the display variant */
    static const PrintedForm f{
        -1, 6, tp_from({{0, -3}, {1, 9}, {2, 81}, {4, -378}, {5, 729}, {6, -729}})};
    return f;
}

} // namespace cphi6
