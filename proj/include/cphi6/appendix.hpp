#ifndef CPHI6_APPENDIX_HPP
#define CPHI6_APPENDIX_HPP

/* The stored base relation tables: eighteen rows giving
 *   U_A(p1 y^m t^k) = y^{3m+8} p0 * sum_n a(k,m,n) t^n   ('a' rows)
 *   U_B(p0 y^m t^k) = y^{3m}   p1 * sum_n b(k,m,n) t^n   ('b' rows)
 * for k in {-1,0,1}, m in {0,1,2}, each entry kept in the transcribed
 * mantissa * 3^pow shape so the 3-adic structure stays visible; plus the
 * level-0 and level-1 tower rows and the two worked rows reachable by one
 * recurrence step.  Every table is verified against independent q-series
 * expansions by the test suites before anything downstream consumes it. */

#include <vector>

#include "cphi6/tpoly.hpp"

namespace cphi6 {

struct AppendixEntry {
    long n;
    long mantissa;
    long pow3;
};

struct AppendixRow {
    char array; /* 'a' or 'b' */
    long k;
    long m;
    std::vector<AppendixEntry> entries;
};

const std::vector<AppendixRow> &appendix_rows();
const AppendixRow &find_appendix_row(char array, long k, long m);
TPoly row_to_poly(const AppendixRow &row);

/* L0 = t^-1 + 27 + 3t + 9t^2 */
TPoly l0_poly();
/* the level-1 row: L1 = p0 y^8 * l1_row()(t) */
TPoly l1_row();

/* U_A(p1 t^2) = y^8 p0 * worked_a_row()(t); the verified row.  A transcribed
 * display variant of the same row circulates with a degree misalignment at
 * t^3..t^5; it is stored for the record and the deviation is asserted. */
TPoly worked_a_row();
TPoly worked_a_row_display();
/* U_B(p0 y^3 t^-1) = y^9 p1 * worked_b_row()(t) */
TPoly worked_b_row();

} // namespace cphi6

#endif
