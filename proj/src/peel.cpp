#include "cphi6/peel.hpp"

#include <algorithm>

#include "cphi6/appendix.hpp"
#include "cphi6/etaq.hpp"

namespace cphi6 {

PeelResult peel_t(const Series<ExactRing> &G, long min_exp, long max_deg) {
    const ExactRing &ring = G.ring();
    const long tprec = G.prec() - std::min(min_exp, 0L) + 2;
    const Series<ExactRing> t = named_generator("t", ring, tprec);

    PeelResult res;
    Series<ExactRing> cur = G;
    while (!cur.is_zero()) {
        const long l = cur.ord();
        if (l < min_exp)
            throw series_error("peel found a term at t^" + std::to_string(l) +
                               " below the allowed order " +
                               std::to_string(min_exp));
        if (l > max_deg) {
            res.residual_ord = l;
            res.complete = false;
            return res;
        }
        const mpz_class c = cur.coeff(l);
        res.poly.emplace(l, c);
        cur = sub(cur, scal(pow(t, l), c));
    }
    res.residual_ord = cur.prec();
    res.complete = true;
    return res;
}

Series<ExactRing> yt_quotient(const Series<ExactRing> &F,
                              const std::string &weight, long y_exp) {
    const ExactRing &ring = F.ring();
    const long L = F.length() + 16;
    const Series<ExactRing> W = named_generator(weight, ring, L);
    const Series<ExactRing> y = named_generator("y", ring, L);
    return divide(F, mul(W, pow(y, y_exp)));
}

PeelResult to_yt_form(const Series<ExactRing> &F, const std::string &weight,
                      long y_exp, long min_exp, long max_deg) {
    return peel_t(yt_quotient(F, weight, y_exp), min_exp, max_deg);
}

bool rediscover_appendix(long prec, std::string *witness) {
    const ExactRing ring;
    for (const AppendixRow &row : appendix_rows()) {
        const bool is_a = row.array == 'a';
        const Series<ExactRing> t = named_generator("t", ring, prec);
        const Series<ExactRing> y = named_generator("y", ring, prec);
        const Series<ExactRing> pin =
            named_generator(is_a ? "p1" : "p0", ring, prec);
        const Series<ExactRing> op =
            named_generator(is_a ? "A" : "B", ring, prec);

        Series<ExactRing> arg = mul(op, mul(pin, pow(t, row.k)));
        if (row.m > 0) arg = mul(arg, pow(y, row.m));
        const Series<ExactRing> img = u_operator(arg, 3);

        const long out_exp = is_a ? 3 * row.m + 8 : 3 * row.m;
        const Series<ExactRing> pout =
            named_generator(is_a ? "p0" : "p1", ring, img.prec() + 2);
        const Series<ExactRing> yden =
            named_generator("y", ring, img.prec() + 2);
        const Series<ExactRing> G = divide(img, mul(pout, pow(yden, out_exp)));

        const TPoly want = row_to_poly(row);
        PeelResult pr;
        try {
            pr = peel_t(G, want.min_exp(), want.max_exp() + 4);
        } catch (const series_error &) {
            pr.complete = false;
        }
        if (!pr.complete || pr.poly != want.c) {
            if (witness)
                *witness = std::string(1, row.array) + "(k=" +
                           std::to_string(row.k) + ",m=" + std::to_string(row.m) +
                           ") recomputed row differs from the stored one";
            return false;
        }
    }
    if (witness)
        *witness = "all 18 base rows recovered from scratch series expansion";
    return true;
}

} // namespace cphi6
