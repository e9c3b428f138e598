#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

/* Eta quotients, Pochhammer products, the named generators, and the text
 * format used by the CLI. */

#include <vector>

#include "cphi6/etaq.hpp"
#include "cphi6/frob6.hpp"
#include "cphi6/series.hpp"
#include "cphi6/tpoly.hpp"
#include "test_util.hpp"

using namespace cphi6;
using namespace cphi6::testutil;

namespace {

const ExactRing Z;

/* sum_{n in Z} q^{n^2} = 1 + 2q + 2q^4 + 2q^9 + ... */
Series<ExactRing> phi_oracle(long L) {
    std::vector<mpz_class> v(static_cast<std::size_t>(L), 0);
    v[0] = 1;
    for (long n = 1; n * n < L; ++n) v[static_cast<std::size_t>(n * n)] = 2;
    return Series<ExactRing>(Z, 0, std::move(v));
}

/* sum_{n >= 0} q^{n(n+1)/2} = 1 + q + q^3 + q^6 + ... */
Series<ExactRing> psi_oracle(long L) {
    std::vector<mpz_class> v(static_cast<std::size_t>(L), 0);
    for (long n = 0; n * (n + 1) / 2 < L; ++n)
        v[static_cast<std::size_t>(n * (n + 1) / 2)] = 1;
    return Series<ExactRing>(Z, 0, std::move(v));
}

} // namespace

TEST_CASE("q_order: prefactor bookkeeping") {
    const Rational qt = q_order(named_eta("t"));
    CHECK(qt.is_integer());
    CHECK(qt.num == 1);

    const Rational qA = q_order(named_eta("A"));
    CHECK(qA.is_integer());
    CHECK(qA.num == -3);

    const Rational qy = q_order(named_eta("y"));
    CHECK(qy.is_integer());
    CHECK(qy.num == 0);

    const Rational qf = q_order({{1, 1}, {2, 1}});
    CHECK_FALSE(qf.is_integer());
    CHECK(qf.num == 1);
    CHECK(qf.den == 8);
}

TEST_CASE("expand_eta: heads and defining identities") {
    const long P = 200;
    const auto t = expand_eta(named_eta("t"), Z, P);
    CHECK(t.ord() == 1);
    CHECK(t.coeff(1) == 1);

    /* y (1 - 3t) = 1 */
    const auto y = expand_eta(named_eta("y"), Z, P);
    const auto res = sub(mul(y, sub(make_one(Z, P), scal_long(t, 3))),
                         make_one(Z, P));
    CHECK(res.is_zero());
    CHECK(res.prec() >= P - 1);

    /* p0 = (1+t)^4 and p1 = (1+t)^2 */
    const auto one_t = add(make_one(Z, P), t);
    CHECK(same_series(expand_eta(named_eta("p0"), Z, P), pow(one_t, 4)));
    CHECK(same_series(expand_eta(named_eta("p1"), Z, P), pow(one_t, 2)));

    CHECK_THROWS_AS(expand_eta({{1, 1}, {2, 1}}, Z, 10), series_error);
}

TEST_CASE("expand_poch: Euler product against the pentagonal oracle") {
    const long L = 400;
    const auto euler = expand_poch({{1, 1, 1, 1}}, Z, L);
    /* independent sparse oracle: exponents k(3k-1)/2, signs (-1)^k */
    std::vector<mpz_class> v(static_cast<std::size_t>(L), 0);
    v[0] = 1;
    for (long k = 1;; ++k) {
        const long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 >= L) break;
        const long s = (k % 2 != 0) ? -1 : 1;
        v[static_cast<std::size_t>(g1)] = s;
        if (g2 < L) v[static_cast<std::size_t>(g2)] = s;
    }
    CHECK(equal_series(euler, Series<ExactRing>(Z, 0, std::move(v))));
    CHECK(equal_series(euler, expand_mantissa({{1, 1}}, Z, L)));
}

TEST_CASE("expand_poch: theta products against lattice oracles") {
    const long L = 300;
    /* (-q;q^2)^2 (q^2;q^2) */
    const auto phi = expand_poch({{-1, 1, 2, 2}, {1, 2, 2, 1}}, Z, L);
    CHECK(same_series(phi, phi_oracle(L)));
    /* (-q;q^2) (q^4;q^4) */
    const auto psi = expand_poch({{-1, 1, 2, 1}, {1, 4, 4, 1}}, Z, L);
    CHECK(same_series(psi, psi_oracle(L)));
}

TEST_CASE("theta products equal their eta-quotient forms") {
    const long L = 300;
    CHECK(same_series(phi_theta(Z, 1, L),
                      expand_poch({{-1, 1, 2, 2}, {1, 2, 2, 1}}, Z, L)));
    CHECK(same_series(psi_theta(Z, 1, L),
                      expand_poch({{-1, 1, 2, 1}, {1, 4, 4, 1}}, Z, L)));
}

TEST_CASE("expand_poch: binomial route agrees with the sparse route") {
    const long L = 200;
    const PochProduct pp = {{-1, 1, 2, 2}, {1, 2, 2, 1}, {1, 3, 3, -1}};
    CHECK(same_series(expand_poch(pp, Z, L),
                      detail::expand_poch_binomial(pp, Z, L)));
}

TEST_CASE("expand_poch: zero factor annihilates, inverting it throws") {
    CHECK(expand_poch({{1, 0, 1, 2}}, Z, 10).is_zero());
    CHECK_THROWS_AS(expand_poch({{1, 0, 1, -1}}, Z, 10), series_error);
}

TEST_CASE("named generators: heads and the L0 polynomial") {
    const long P = 120;
    const auto t = named_generator("t", Z, P);
    const auto L0 = named_generator("L0", Z, P);
    const auto rhs = tp_eval(tp_from({{-1, 1}, {0, 27}, {1, 3}, {2, 9}}), t);
    CHECK(same_series(L0, rhs));

    const auto B = named_generator("B", Z, P);
    CHECK(B.ord() == -1);
    CHECK(B.coeff(-1) == 1);

    CHECK(same_series(named_generator("p1", Z, P),
                      pow(add(make_one(Z, P), t), 2)));

    CHECK_THROWS_AS(named_generator("nope", Z, 10), series_error);
}

TEST_CASE("named generators: leading coefficient 1 at the predicted order") {
    for (const char *name : {"t", "y", "p0", "p1", "A", "B"}) {
        const Rational qo = q_order(named_eta(name));
        REQUIRE(qo.is_integer());
        const auto f = named_generator(name, Z, qo.num + 20);
        CHECK(f.ord() == qo.num);
        CHECK(f.coeff(qo.num) == 1);
    }
    for (const char *name : {"weight_odd", "weight_even"}) {
        const auto f = named_generator(name, Z, 20);
        CHECK(f.ord() == 0);
        CHECK(f.coeff(0) == 1);
    }
}

TEST_CASE("expand_eta is multiplicative in the factor list") {
    const long P = 150;
    EtaQuotient cat = named_eta("t");
    for (const EtaFactor &f : named_eta("y")) cat.push_back(f);
    const auto joint = expand_eta(cat, Z, P);
    const auto split =
        mul(named_generator("t", Z, P), named_generator("y", Z, P));
    CHECK(same_series(joint, split));

    /* mantissas multiply without any prefactor condition */
    const EtaQuotient e1 = {{2, 3}, {3, -1}}, e2 = {{1, 1}, {6, 2}};
    EtaQuotient e12 = e1;
    for (const EtaFactor &f : e2) e12.push_back(f);
    CHECK(same_series(expand_mantissa(e12, Z, P),
                      mul(expand_mantissa(e1, Z, P), expand_mantissa(e2, Z, P))));
}

TEST_CASE("named generator cache reuses longer windows") {
    const auto a = named_generator("t", Z, 40);
    const auto b = named_generator("t", Z, 90);
    const auto c = named_generator("t", Z, 60);
    CHECK(a.prec() == 40);
    CHECK(b.prec() == 90);
    CHECK(c.prec() == 60);
    CHECK(same_series(b, expand_eta(named_eta("t"), Z, 90)));
    CHECK(same_series(a, c));
}

TEST_CASE("eta quotient text format round trips") {
    const EtaQuotient eq = parse_eta_quotient("12:4,2:2,6:-2,4:-4");
    REQUIRE(eq.size() == 4);
    CHECK(eq[0].n == 12);
    CHECK(eq[0].e == 4);
    CHECK(eq[3].n == 4);
    CHECK(eq[3].e == -4);
    CHECK(format_eta_quotient(eq) == "12:4,2:2,6:-2,4:-4");

    const EtaQuotient ws = parse_eta_quotient(" 12 : 4 , 2 : 2 , 6 : -2 , 4 : -4 ");
    CHECK(format_eta_quotient(ws) == "12:4,2:2,6:-2,4:-4");

    CHECK_THROWS_AS(parse_eta_quotient("12"), series_error);
    CHECK_THROWS_AS(parse_eta_quotient("a:1"), series_error);
    CHECK_THROWS_AS(parse_eta_quotient("0:1"), series_error);
    CHECK_THROWS_AS(parse_eta_quotient(""), series_error);
    CHECK_THROWS_AS(parse_eta_quotient("3:1x"), series_error);
}
