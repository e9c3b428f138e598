#include "cphi6/series.hpp"

#include <ostream>

namespace cphi6 {

void set_parallel(bool enabled) { detail::parallel_enabled = enabled; }

bool parallel() { return detail::parallel_enabled; }

/* first `count` coefficients from ord upward, one "n: c" line each */
void print_head(std::ostream &os, const Series<ExactRing> &f, long count) {
    long n = f.ord();
    for (long printed = 0; printed < count && n < f.prec(); ++printed, ++n)
        os << n << ": " << f.coeff(n).get_str() << "\n";
}

} // namespace cphi6
