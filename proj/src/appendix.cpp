#include "cphi6/appendix.hpp"

#include <stdexcept>

namespace cphi6 {

const std::vector<AppendixRow> &appendix_rows() {
    static const std::vector<AppendixRow> rows = {
    {'a', -1, 0, {{-1, 11, 0}, {0, 38, 3}, {1, 1085, 2}, {2, 212, 3}, {3, -961, 3}, {4, 98, 4}, {5, 1, 7}}},
    {'a', 0, 0, {{-1, 1, 0}, {0, 95, 1}, {1, 16, 5}, {2, 5, 3}, {3, -308, 3}, {4, 91, 4}, {5, -20, 5}, {6, 11, 5}, {7, -1, 6}}},
    {'a', 1, 0, {{0, 22, 1}, {1, 176, 2}, {2, -11, 4}, {3, -19, 4}, {4, 8, 4}, {5, 79, 4}, {6, -88, 5}, {7, 17, 7}, {8, -2, 9}, {9, 11, 7}, {10, -1, 8}}},
    {'a', -1, 1, {{-1, 14, 0}, {0, 101, 3}, {1, 7760, 2}, {2, 188, 7}, {3, 9572, 3}, {4, -16102, 4}, {5, -128, 7}, {6, 20, 10}, {7, -14, 9}, {8, -1, 10}}},
    {'a', 0, 1, {{-1, 1, 0}, {0, 200, 1}, {1, 284, 4}, {2, 5752, 3}, {3, 1234, 3}, {4, -5912, 4}, {5, 884, 5}, {6, 392, 5}, {7, -55, 6}}},
    {'a', 1, 1, {{0, 4, 3}, {1, 802, 2}, {2, 751, 4}, {3, -224, 4}, {4, -1892, 4}, {5, 2116, 4}, {6, -514, 5}, {7, 16, 8}, {8, -32, 7}, {9, 14, 7}, {10, -1, 8}}},
    {'a', -1, 2, {{-1, 17, 0}, {0, 215, 3}, {1, 31742, 2}, {2, 148039, 3}, {3, 657251, 3}, {4, 119546, 4}, {5, -29324, 7}, {6, -1930, 9}, {7, 4745, 9}, {8, 241, 10}, {9, -10, 14}, {10, 17, 12}, {11, 1, 13}}},
    {'a', 0, 2, {{-1, 1, 0}, {0, 356, 1}, {1, 2963, 3}, {2, 17042, 4}, {3, 239206, 3}, {4, 16864, 4}, {5, -32678, 6}, {6, 692, 5}, {7, 35045, 6}, {8, -52, 11}, {9, -17, 11}, {10, 2, 12}}},
    {'a', 1, 2, {{0, 53, 1}, {1, 770, 3}, {2, 5827, 4}, {3, 29704, 4}, {4, -1958, 5}, {5, -103100, 4}, {6, 21722, 5}, {7, 392, 8}, {8, -967, 7}, {9, 98, 7}, {10, -1, 8}}},
    {'b', -1, 0, {{0, 4, 1}, {1, -14, 1}, {2, 11, 2}, {3, -1, 4}, {4, -2, 4}, {5, 5, 4}, {6, -1, 5}}},
    {'b', 0, 0, {{0, 5, 0}, {1, -11, 1}, {2, 2, 4}, {3, -14, 3}, {4, -1, 3}, {5, 8, 5}, {6, -13, 5}, {8, 5, 6}, {9, -1, 7}}},
    {'b', 1, 0, {{0, 1, 0}, {1, -1, 2}, {2, 14, 2}, {3, -28, 3}, {4, 61, 3}, {5, 23, 4}, {6, -20, 6}, {7, 8, 7}, {8, 25, 6}, {9, -23, 7}, {10, 2, 8}, {11, 5, 8}, {12, -1, 9}}},
    {'b', -1, 1, {{0, 4, 2}, {1, 88, 1}, {2, -55, 2}, {3, 8, 4}, {4, -10, 4}, {5, 8, 4}, {6, -1, 5}}},
    {'b', 0, 1, {{0, 8, 0}, {1, 46, 1}, {2, -16, 3}, {3, 38, 3}, {4, -64, 3}, {5, 5, 5}, {6, 8, 5}, {7, -8, 6}, {8, 8, 6}, {9, -1, 7}}},
    {'b', 1, 1, {{0, 1, 0}, {1, 8, 2}, {2, -38, 2}, {3, 16, 4}, {4, -128, 3}, {5, 56, 4}, {6, 2, 7}, {7, -40, 6}, {8, 64, 6}, {9, -8, 7}, {10, -2, 9}, {11, 8, 8}, {12, -1, 9}}},
    {'b', -1, 2, {{0, 23, 1}, {1, 802, 1}, {2, 923, 2}, {3, -140, 4}, {4, -7, 5}, {5, 38, 4}, {6, -1, 5}}},
    {'b', 0, 2, {{0, 11, 0}, {1, 274, 1}, {2, 14, 5}, {3, -31, 5}, {4, 314, 3}, {5, -49, 5}, {6, 62, 5}, {7, -19, 6}, {8, 11, 6}, {9, -1, 7}}},
    {'b', 1, 2, {{0, 1, 0}, {1, 28, 2}, {2, 20, 4}, {3, -197, 3}, {4, 430, 3}, {5, -280, 4}, {6, 5, 8}, {7, -32, 6}, {8, -32, 6}, {9, 40, 7}, {10, -17, 8}, {11, 11, 8}, {12, -1, 9}}},
    };
    return rows;
}

const AppendixRow &find_appendix_row(char array, long k, long m) {
    for (const AppendixRow &r : appendix_rows())
        if (r.array == array && r.k == k && r.m == m) return r;
    throw std::out_of_range("no stored base row for this (array, k, m)");
}

TPoly row_to_poly(const AppendixRow &row) {
    TPoly p;
    for (const AppendixEntry &e : row.entries) p.set(e.n, mpz_class(e.mantissa) * pow3_mpz(e.pow3));
    return p;
}

namespace {

TPoly from_entries(const std::vector<AppendixEntry> &entries) {
    TPoly p;
    for (const AppendixEntry &e : entries) p.set(e.n, mpz_class(e.mantissa) * pow3_mpz(e.pow3));
    return p;
}

} // namespace

TPoly l0_poly() { return tp_from({{-1, 1}, {0, 27}, {1, 3}, {2, 9}}); }

TPoly l1_row() {
    return from_entries({{-1, 4, 2},
                         {0, 71, 4},
                         {1, 2351, 3},
                         {2, 89, 5},
                         {3, -1975, 4},
                         {4, 407, 5},
                         {5, -19, 7},
                         {6, 11, 7},
                         {7, -1, 8}});
}

TPoly worked_a_row() {
    return from_entries({{0, 11, 0},
                         {1, 209, 1},
                         {2, -22, 3},
                         {4, -106, 3},
                         {5, 259, 4},
                         {6, -11, 8},
                         {7, 68, 7},
                         {8, -238, 6},
                         {9, 7, 8},
                         {10, 29, 8},
                         {11, -16, 9},
                         {12, 11, 9},
                         {13, -1, 10}});
}

TPoly worked_a_row_display() {
    return from_entries({{0, 11, 0},
                         {1, 209, 1},
                         {2, -22, 3},
                         {3, -106, 3},
                         {4, 259, 4},
                         {5, 259, 4},
                         {6, -11, 8},
                         {7, 68, 7},
                         {8, -238, 6},
                         {9, 7, 8},
                         {10, 29, 8},
                         {11, -16, 9},
                         {12, 11, 9},
                         {13, -1, 10}});
}

TPoly worked_b_row() {
    return from_entries({{0, 37, 1},
                         {1, 2992, 1},
                         {2, 13628, 2},
                         {3, 3872, 4},
                         {4, -4814, 4},
                         {5, -7600, 4},
                         {6, 2564, 5},
                         {8, -1, 10}});
}

} // namespace cphi6
