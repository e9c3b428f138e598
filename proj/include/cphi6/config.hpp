#ifndef CPHI6_CONFIG_HPP
#define CPHI6_CONFIG_HPP

/* Shared suite configuration.  The cli enforces N >= 32, K >= 4,
 * alpha_max >= 1 and that 3^K is coarse enough for the requested alpha scan
 * (K >= floor(alpha_max/2) + 2).  Library callers get the same defaults the
 * cli ships with. */

#include <string>

namespace cphi6 {

struct Config {
    long N = 200;          /* base q-precision of the identity suites */
    int K = 12;            /* congruence scans run mod 3^K */
    int alpha_max = 4;     /* highest alpha in the theorem scan */
    long n_max = 50;       /* residue classes scanned per alpha */
    long m_max = 30;       /* array rows scanned per k */
    std::string cache_dir; /* empty disables the on-disk row cache */
    bool json = false;     /* report format */
};

} // namespace cphi6

#endif
