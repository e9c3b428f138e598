#ifndef CPHI6_SUITES_HPP
#define CPHI6_SUITES_HPP

/* The named verification suites behind `verify <suite>`.  Each returns a
 * Report; a mathematical failure is a reported fact, not an exception.
 * `all` runs every suite, cheap structural checks first, and merges the
 * checks under prefixed ids. */

#include <string>
#include <vector>

#include "cphi6/config.hpp"
#include "cphi6/report.hpp"

namespace cphi6 {

Report run_group1(const Config &cfg);   /* generator identities */
Report run_modeq(const Config &cfg);    /* modular equations and U_3 action */
Report run_appendix(const Config &cfg); /* stored base rows, both directions */
Report run_arrays(const Config &cfg);   /* array bounds and scalar recurrences */
Report run_tower(const Config &cfg);    /* L-series rows and orientation */
Report run_lemma(const Config &cfg);    /* 3-adic lower bounds on the d rows */
Report run_theorem(const Config &cfg);  /* congruence scan plus oracles */
Report run_known(const Config &cfg);    /* previously published congruences */
Report run_all(const Config &cfg);

/* dispatch by cli suite name; throws std::invalid_argument on unknown names */
Report run_suite(const std::string &name, const Config &cfg);
const std::vector<std::string> &suite_names();

} // namespace cphi6

#endif
