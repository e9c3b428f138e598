#include "cphi6/tower.hpp"

#include <limits>
#include <vector>

#include "cphi6/appendix.hpp"
#include "cphi6/ints.hpp"
#include "cphi6/modeq.hpp"
#include "cphi6/peel.hpp"
#include "cphi6/tpoly.hpp"

namespace cphi6 {

namespace {

/* the same quotient with every eta argument tripled: an independent
 * expansion of f(q^3) that never touches substitute_q_power */
EtaQuotient triple(const EtaQuotient &eq) {
    EtaQuotient out;
    out.reserve(eq.size());
    for (const EtaFactor &f : eq) out.push_back({3 * f.n, f.e});
    return out;
}

std::string head_witness(const Series<ExactRing> &f) {
    if (f.is_zero()) return "residual vanishes on the window";
    return "first nonzero coefficient at q^" + std::to_string(f.ord()) + ": " +
           f.coeff(f.ord()).get_str();
}

/* residual of the cubic in t with prescribed coefficient polynomials */
Series<ExactRing> t_cubic_residual(const TPoly a[3], long prec) {
    const ExactRing ring;
    const long P = prec + 6;
    const Series<ExactRing> T = named_generator("t", ring, P);
    const Series<ExactRing> T3 = expand_eta(triple(named_eta("t")), ring, P);
    Series<ExactRing> res = pow(T, 3);
    for (int j = 0; j < 3; ++j)
        res = add(res, mul(tp_eval(a[j], T3), pow(T, j)));
    return res;
}

/* the test multiplicand in front of the power being recursed on */
Series<ExactRing> recurrence_weight(char weight, const ExactRing &ring, long P,
                                    bool with_y) {
    if (weight == '1') return make_one(ring, P);
    if (weight != 'a' && weight != 'b')
        throw series_error("recurrence weight must be 'a', 'b' or '1'");
    const bool a_side = weight == 'a';
    Series<ExactRing> w = mul(named_generator(a_side ? "A" : "B", ring, P),
                              named_generator(a_side ? "p1" : "p0", ring, P));
    if (with_y) w = mul(w, named_generator("y", ring, P));
    return w;
}

} // namespace

IdentityCheck verify_modeq_t(long prec) {
    const Series<ExactRing> res = t_cubic_residual(modeq_coeffs().a, prec);
    IdentityCheck out;
    out.window = res.prec();
    out.pass = res.is_zero() && res.prec() >= prec;
    out.witness = head_witness(res);
    return out;
}

IdentityCheck verify_modeq_t_mutated(long prec) {
    /* perturbing the middle coefficient must break the identity */
    TPoly a[3] = {modeq_coeffs().a[0], modeq_coeffs().a[1], modeq_coeffs().a[2]};
    a[1] = tp_add(a[1], tp_from({{1, 1}}));
    const Series<ExactRing> res = t_cubic_residual(a, prec);
    IdentityCheck out;
    out.window = res.prec();
    out.pass = !res.is_zero();
    out.witness = head_witness(res);
    return out;
}

IdentityCheck verify_modeq_y(long prec) {
    const ExactRing ring;
    const long P = prec + 6;
    const Series<ExactRing> Y = named_generator("y", ring, P);
    const Series<ExactRing> Y3 = expand_eta(triple(named_eta("y")), ring, P);
    const ModEqCoeffs &mc = modeq_coeffs();
    Series<ExactRing> res = pow(Y, 3);
    for (int j = 0; j < 3; ++j) {
        Series<ExactRing> bj(ring, P);
        for (const auto &[d, v] : mc.b[j]) bj = add(bj, scal(pow(Y3, d), v));
        res = add(res, mul(bj, pow(Y, j)));
    }
    IdentityCheck out;
    out.window = res.prec();
    out.pass = res.is_zero() && res.prec() >= prec;
    out.witness = head_witness(res);
    return out;
}

IdentityCheck verify_tripled_t(long prec) {
    const ExactRing ring;
    const Series<ExactRing> direct =
        expand_eta(triple(named_eta("t")), ring, prec);
    const Series<ExactRing> subst = substitute_q_power(
        named_generator("t", ring, ceil_div(prec, 3) + 2), 3);
    IdentityCheck out;
    long w = 0;
    out.pass = agree_on_overlap(direct, subst, &w) && w >= prec;
    out.window = w;
    out.witness = out.pass ? "substitution route matches the tripled quotient"
                           : "routes disagree at q^" + std::to_string(w);
    return out;
}

IdentityCheck verify_tripled_y(long prec) {
    const ExactRing ring;
    const Series<ExactRing> direct =
        expand_eta(triple(named_eta("y")), ring, prec);
    const Series<ExactRing> subst = substitute_q_power(
        named_generator("y", ring, ceil_div(prec, 3) + 2), 3);
    IdentityCheck out;
    long w = 0;
    out.pass = agree_on_overlap(direct, subst, &w) && w >= prec;
    out.window = w;
    out.witness = out.pass ? "substitution route matches the tripled quotient"
                           : "routes disagree at q^" + std::to_string(w);
    return out;
}

IdentityCheck verify_u3_t(long prec) {
    const ExactRing ring;
    const Series<ExactRing> lhs =
        u_operator(named_generator("t", ring, 3 * prec + 3), 3);
    const Series<ExactRing> T = named_generator("t", ring, prec + 4);
    const Series<ExactRing> rhs =
        sub(scal_long(pow(T, 3), 3), scal_long(T, 2));
    IdentityCheck out;
    long w = 0;
    out.pass = agree_on_overlap(lhs, rhs, &w) && w >= prec;
    out.window = w;
    out.witness = out.pass ? "U_3(t) == 3t^3 - 2t"
                           : "sides disagree at q^" + std::to_string(w);
    return out;
}

IdentityCheck verify_u3_t_inverse(long prec) {
    const ExactRing ring;
    const Series<ExactRing> lhs =
        u_operator(invert(named_generator("t", ring, 3 * prec + 3)), 3);
    const Series<ExactRing> rhs = named_generator("t", ring, prec + 4);
    IdentityCheck out;
    long w = 0;
    out.pass = agree_on_overlap(lhs, rhs, &w) && w >= prec;
    out.window = w;
    out.witness = out.pass ? "U_3(1/t) == t"
                           : "sides disagree at q^" + std::to_string(w);
    return out;
}

IdentityCheck verify_k_recurrence_qseries(char weight, long k, long prec) {
    const ExactRing ring;
    const long P = 3 * prec + 24;
    const Series<ExactRing> T = named_generator("t", ring, P);
    const Series<ExactRing> w = recurrence_weight(weight, ring, P, true);
    const Series<ExactRing> lhs = u_operator(mul(w, pow(T, k)), 3);

    const Series<ExactRing> Tout = named_generator("t", ring, prec + 8);
    Series<ExactRing> rhs(ring, lhs.prec());
    for (int j = 0; j < 3; ++j) {
        const Series<ExactRing> inner = u_operator(mul(w, pow(T, k - 3 + j)), 3);
        rhs = add(rhs, mul(tp_eval(k_multiplier(j), Tout), inner));
    }
    IdentityCheck out;
    long wit = 0;
    out.pass = agree_on_overlap(lhs, rhs, &wit) && wit >= prec;
    out.window = wit;
    out.witness = out.pass
                      ? "three-term step in k holds as a q-series identity"
                      : "sides disagree at q^" + std::to_string(wit);
    return out;
}

IdentityCheck verify_m_recurrence_qseries(char weight, long m, long prec) {
    if (m < 3) throw series_error("the m-step needs m >= 3");
    const ExactRing ring;
    const long P = 3 * prec + 24;
    const Series<ExactRing> Y = named_generator("y", ring, P);
    Series<ExactRing> w = recurrence_weight(weight, ring, P, false);
    if (weight != '1') w = mul(w, named_generator("t", ring, P));
    const Series<ExactRing> lhs = u_operator(mul(w, pow(Y, m)), 3);

    const Series<ExactRing> Tout = named_generator("t", ring, prec + 8);
    const Series<ExactRing> Yout = named_generator("y", ring, prec + 8);
    const ModEqCoeffs &mc = modeq_coeffs();
    Series<ExactRing> rhs(ring, lhs.prec());
    for (int j = 0; j < 3; ++j) {
        const Series<ExactRing> inner =
            u_operator(mul(w, pow(Y, m - 3 + j)), 3);
        const Series<ExactRing> mult =
            mul(pow(Yout, mc.rw[j].y_power), tp_eval(m_multiplier(j), Tout));
        rhs = add(rhs, mul(mult, inner));
    }
    IdentityCheck out;
    long wit = 0;
    out.pass = agree_on_overlap(lhs, rhs, &wit) && wit >= prec;
    out.window = wit;
    out.witness = out.pass
                      ? "three-term step in m holds as a q-series identity"
                      : "sides disagree at q^" + std::to_string(wit);
    return out;
}

long y_exponent(int beta) {
    if (beta < 1 || beta > 37)
        throw series_error("y-exponent supported for levels 1..37");
    long f = 8;
    for (int s = 2; s <= beta; ++s) f = 3 * f + ((s % 2 != 0) ? 8 : 0);
    long p = 1;
    for (int s = 0; s <= beta; ++s) p *= 3;
    const long closed = p - ((beta % 2 != 0) ? 1 : 3);
    if (f != closed)
        throw series_error("y-exponent recursion disagrees with closed form");
    return f;
}

namespace {

std::map<long, mpz_class> clip_poly(const TPoly &p, long n_max) {
    std::map<long, mpz_class> out;
    for (const auto &[n, v] : p.c)
        if (n <= n_max) out.emplace(n, v);
    return out;
}

} // namespace

long d_symbolic_cap(int level, long n_max) {
    if (level <= 1) return 13;
    std::vector<long> need(static_cast<std::size_t>(level) + 1);
    need[static_cast<std::size_t>(level)] = n_max;
    for (int l = level; l >= 2; --l)
        need[static_cast<std::size_t>(l - 1)] =
            3 * need[static_cast<std::size_t>(l)] + ((l % 2 == 0) ? 1 : 3);
    return std::max(need[2], 13L);
}

std::map<long, mpz_class> d_coeffs_symbolic(int level, long n_max,
                                            ArrayProvider &ap) {
    if (level < 0) throw series_error("level must be nonnegative");
    if (n_max < -1) return {};
    if (level == 0) return clip_poly(l0_poly(), n_max);
    if (level == 1) return clip_poly(l1_row(), n_max);

    std::vector<long> need(static_cast<std::size_t>(level) + 1);
    need[static_cast<std::size_t>(level)] = n_max;
    for (int l = level; l >= 2; --l)
        need[static_cast<std::size_t>(l - 1)] =
            3 * need[static_cast<std::size_t>(l)] + ((l % 2 == 0) ? 1 : 3);
    if (ap.cap() < need[2])
        throw series_error("provider cap " + std::to_string(ap.cap()) +
                           " too small for this row; it needs " +
                           std::to_string(need[2]));

    std::map<long, mpz_class> prev = clip_poly(l1_row(), need[1]);
    mpz_class s;
    for (int l = 2; l <= level; ++l) {
        const bool even = (l % 2 == 0);
        const char arr = even ? 'b' : 'a';
        const long m = y_exponent(l - 1);
        const long kmin = even ? -1 : 0;
        std::map<long, mpz_class> cur;
        for (long n = -1; n <= need[static_cast<std::size_t>(l)]; ++n) {
            const long kmax = 3 * n + (even ? 1 : 3);
            s = 0;
            for (const auto &[k, dv] : prev) {
                if (k < kmin) continue;
                if (k > kmax) break;
                s += dv * ap.value(arr, k, m, n);
            }
            if (s != 0) cur.emplace(n, s);
        }
        prev = std::move(cur);
    }
    return prev;
}

DRow d_coeffs_qseries(int level, long n_max) {
    const ExactRing ring;
    const long P = n_max + 8;
    const Series<ExactRing> L = L_series(level, ring, P);
    PeelResult pr;
    if (level == 0) {
        pr = peel_t(L, -1, n_max);
    } else {
        /* odd levels are A-side images and carry p0, even levels p1 */
        const std::string w = (level % 2 != 0) ? "p0" : "p1";
        pr = to_yt_form(L, w, y_exponent(level), -1, n_max);
    }
    DRow out;
    out.poly = std::move(pr.poly);
    out.complete = pr.complete || pr.residual_ord > n_max;
    return out;
}

LemmaOutcome check_main_lemma(int level_max, long n_max, ArrayProvider &ap) {
    LemmaOutcome out;
    for (int beta = 1; beta <= level_max; ++beta) {
        const long alpha = ceil_div(beta, 2);
        const bool even = (beta % 2 == 0);
        const auto row = d_coeffs_symbolic(beta, n_max, ap);
        static const mpz_class zero = 0;
        long min_bound = std::numeric_limits<long>::max();
        for (long n = -1; n <= n_max; ++n) {
            const auto it = row.find(n);
            const mpz_class &v = (it == row.end()) ? zero : it->second;
            if (even && n == -1) {
                if (v != 0) {
                    out.pass = false;
                    out.witness = "level " + std::to_string(beta) +
                                  " has a nonzero entry at n = -1";
                    return out;
                }
                continue;
            }
            const long bound = (even && n == 0)
                                   ? alpha + 2
                                   : floor_div(2 * n + 5, 3) + alpha;
            min_bound = std::min(min_bound, bound);
            if (!(val3(v) >= bound)) {
                out.pass = false;
                out.witness = "level " + std::to_string(beta) + ", n = " +
                              std::to_string(n) + ": val3 = " + val3(v).str() +
                              " < " + std::to_string(bound);
                return out;
            }
            ++out.rows_checked;
        }
        if (min_bound != floor_div(beta, 2) + 2) {
            out.pass = false;
            out.witness = "level " + std::to_string(beta) +
                          ": smallest bound " + std::to_string(min_bound) +
                          " != floor(level/2) + 2";
            return out;
        }
    }
    out.witness = "levels 1.." + std::to_string(level_max) + ", n <= " +
                  std::to_string(n_max) +
                  ": every entry meets its 3-adic bound and the smallest "
                  "bound per level is floor(level/2) + 2";
    return out;
}

LemmaOutcome check_divisibility_recurrences(long m_max) {
    LemmaOutcome out;
    ArrayProvider ap(16, "");

    struct Scalar {
        char arr;
        long k;
        long bases[3];
        long extra; /* constant fed by the a(0,m,-1) = 1 column */
        long anchor3;
    };
    const Scalar seqs[3] = {
        {'b', -1, {12, 36, 69}, 0, 111},
        {'a', 0, {285, 600, 1068}, -18 + 9 + 36, 1716},
        {'a', 1, {66, 108, 159}, 0, 219},
    };

    auto fail = [&](const std::string &w) {
        out.pass = false;
        out.witness = w;
        return out;
    };

    for (const Scalar &sq : seqs) {
        mpz_class x0 = sq.bases[0], x1 = sq.bases[1], x2 = sq.bases[2];
        for (long m = 0; m <= 2; ++m) {
            if (ap.value(sq.arr, sq.k, m, 0) != sq.bases[m])
                return fail("base value " + std::string(1, sq.arr) + "(" +
                            std::to_string(sq.k) + "," + std::to_string(m) +
                            ",0) differs from the stored constant");
            ++out.rows_checked;
        }
        for (long m = 3; m <= m_max; ++m) {
            const mpz_class x = x0 - 3 * x1 + 3 * x2 + sq.extra;
            if (m == 3 && x != sq.anchor3)
                return fail("anchor at m = 3 differs for " +
                            std::string(1, sq.arr) + " k=" +
                            std::to_string(sq.k));
            if (ap.value(sq.arr, sq.k, m, 0) != x)
                return fail("recurrence and provider disagree at m = " +
                            std::to_string(m));
            if (!(val3(x) >= 1))
                return fail("term at m = " + std::to_string(m) +
                            " is not divisible by 3");
            x0 = x1;
            x1 = x2;
            x2 = x;
            ++out.rows_checked;
        }
    }
    for (long m = 0; m <= m_max; ++m) {
        if (ap.value('a', 0, m, -1) != 1)
            return fail("a(0,m,-1) != 1 at m = " + std::to_string(m));
        ++out.rows_checked;
    }
    if (out.pass)
        out.witness = "three scalar recurrences match the provider for m <= " +
                      std::to_string(m_max) +
                      ", every term divisible by 3, a(0,m,-1) == 1 throughout";
    return out;
}

} // namespace cphi6
