#ifndef CPHI6_PEEL_HPP
#define CPHI6_PEEL_HPP

/* Greedy change of coordinates from q-series to t-polynomials: since
 * t = q - 2q^3 + ... has a unit leading coefficient at q^1, a series lying in
 * the span of { t^n : n >= min_exp } is recovered by repeatedly reading off
 * its leading coefficient and subtracting that multiple of the matching
 * power of t.  Each subtraction strictly raises the order, so the loop
 * terminates within the precision window. */

#include <map>
#include <string>

#include "cphi6/ring.hpp"
#include "cphi6/series.hpp"

namespace cphi6 {

struct PeelResult {
    std::map<long, mpz_class> poly; /* t-exponent -> coefficient */
    long residual_ord = 0;          /* q-order where peeling stopped */
    bool complete = false;          /* residual vanished within the window */
};

/* write G as sum c_n t^n; throws if a leading term sits below min_exp,
 * stops without error at the first term above max_deg */
PeelResult peel_t(const Series<ExactRing> &G, long min_exp, long max_deg);

/* F divided by (named weight) * y^y_exp, on F's own window */
Series<ExactRing> yt_quotient(const Series<ExactRing> &F,
                              const std::string &weight, long y_exp);

PeelResult to_yt_form(const Series<ExactRing> &F, const std::string &weight,
                      long y_exp, long min_exp, long max_deg);

/* recompute all stored base rows from scratch q-series (operator image,
 * weight division, peel) and compare them entry by entry */
bool rediscover_appendix(long prec, std::string *witness = nullptr);

} // namespace cphi6

#endif
