#ifndef CPHI6_SERIES_HPP
#define CPHI6_SERIES_HPP

/* Truncated Laurent series in q over a coefficient ring R.
 *
 * A series stores the dense coefficient window [ord, prec): ord is the lowest
 * retained exponent, prec the exclusive upper knowledge boundary.  Every
 * series in this library is built from true-order expansions (eta and
 * Pochhammer products, and ring operations on them), so coefficients below
 * ord are genuinely zero; prec is the only uncertainty.  The zero series is
 * represented by an empty window with ord == prec ("known zero below prec").
 *
 * Precision propagation is pessimistic and never claims unknowable
 * coefficients:
 *     add: prec = min(prec_f, prec_g)
 *     mul: ord = ord_f + ord_g, prec = min(ord_f + prec_g, ord_g + prec_f)
 *     invert/divide: relative window length is preserved
 *     f(q^m): prec = m*(prec-1)+1
 *     U_m: ord = ceil(ord/m), prec = ceil(prec/m)
 *
 * The convolution kernel gathers over the operand with fewer nonzero
 * coefficients and parallelizes over output exponents (each output is
 * written by exactly one thread).  A serial twin of the kernel is kept and
 * equality-tested against the parallel one. */

#include <omp.h>

#include <algorithm>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cphi6/ints.hpp"
#include "cphi6/ring.hpp"

namespace cphi6 {

struct series_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class R>
class Series {
public:
    using elem = typename R::elem;

    /* zero series known to be zero on (-inf, prec) */
    Series(R ring, long prec) : ring_(std::move(ring)), ord_(prec), prec_(prec) {}

    /* coefficients c[i] at exponent ord + i; prec = ord + c.size() */
    Series(R ring, long ord, std::vector<elem> c)
        : ring_(std::move(ring)), ord_(ord), prec_(ord + static_cast<long>(c.size())),
          c_(std::move(c)) {
        normalize();
    }

    const R &ring() const { return ring_; }
    bool is_zero() const { return c_.empty(); }
    /* lowest retained exponent; equals prec for the zero series */
    long ord() const { return ord_; }
    long prec() const { return prec_; }
    long length() const { return prec_ - ord_; }

    const elem &coeff(long n) const {
        if (n >= prec_)
            throw series_error("coefficient q^" + std::to_string(n) +
                               " beyond precision window (prec " + std::to_string(prec_) + ")");
        if (n < ord_) return zero_;
        return c_[static_cast<std::size_t>(n - ord_)];
    }

    const std::vector<elem> &data() const { return c_; }

    /* weaker-precision view of the same series */
    Series truncated(long new_prec) const {
        if (new_prec >= prec_) return *this;
        if (new_prec <= ord_) return Series(ring_, new_prec);
        std::vector<elem> c(c_.begin(), c_.begin() + (new_prec - ord_));
        return Series(ring_, ord_, std::move(c));
    }

private:
    void normalize() {
        std::size_t skip = 0;
        while (skip < c_.size() && ring_.is_zero(c_[skip])) ++skip;
        if (skip == c_.size()) {
            c_.clear();
            ord_ = prec_;
        } else if (skip > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(skip));
            ord_ += static_cast<long>(skip);
        }
    }

    R ring_;
    long ord_;
    long prec_;
    std::vector<elem> c_;
    inline static const elem zero_ = {};
};

namespace detail {

inline bool parallel_enabled = true;

template <class R>
std::vector<std::size_t> nonzero_positions(const R &ring,
                                           const std::vector<typename R::elem> &v) {
    std::vector<std::size_t> nz;
    nz.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!ring.is_zero(v[i])) nz.push_back(i);
    return nz;
}

/* out[k] = sum_{i+j=k} a[i]*b[j] for k in [0, L); gathers over the sparser
 * operand so theta-like series multiply in O(L*sqrt(L)) instead of O(L^2) */
template <class R>
std::vector<typename R::elem> convolve(const R &ring,
                                       const std::vector<typename R::elem> &a,
                                       const std::vector<typename R::elem> &b,
                                       long L, bool parallel) {
    using elem = typename R::elem;
    std::vector<std::size_t> nza = nonzero_positions(ring, a);
    std::vector<std::size_t> nzb = nonzero_positions(ring, b);
    const bool use_a = nza.size() <= nzb.size();
    const std::vector<elem> &s = use_a ? a : b;
    const std::vector<elem> &d = use_a ? b : a;
    const std::vector<std::size_t> &nz = use_a ? nza : nzb;

    std::vector<elem> out(static_cast<std::size_t>(std::max(L, 0L)), ring.zero());
    const long dlen = static_cast<long>(d.size());

#pragma omp parallel for schedule(static) if (parallel && L >= 512)
    for (long k = 0; k < L; ++k) {
        typename R::Acc acc(ring);
        for (std::size_t idx : nz) {
            const long i = static_cast<long>(idx);
            if (i > k) break;
            const long j = k - i;
            if (j < dlen) acc.addmul(s[idx], d[static_cast<std::size_t>(j)]);
        }
        out[static_cast<std::size_t>(k)] = acc.finish();
    }
    return out;
}

} // namespace detail

template <class R>
void require_compatible(const Series<R> &f, const Series<R> &g) {
    if (!f.ring().compatible(g.ring()))
        throw series_error("coefficient ring mismatch");
}

template <class R>
Series<R> add(const Series<R> &f, const Series<R> &g) {
    require_compatible(f, g);
    const long hi = std::min(f.prec(), g.prec());
    const long lo = std::min(std::min(f.ord(), g.ord()), hi);
    std::vector<typename R::elem> c;
    c.reserve(static_cast<std::size_t>(hi - lo));
    for (long n = lo; n < hi; ++n) c.push_back(f.ring().add(f.coeff(n), g.coeff(n)));
    return Series<R>(f.ring(), lo, std::move(c));
}

template <class R>
Series<R> neg(const Series<R> &f) {
    std::vector<typename R::elem> c;
    c.reserve(f.data().size());
    for (const auto &x : f.data()) c.push_back(f.ring().neg(x));
    return Series<R>(f.ring(), f.ord(), std::move(c));
}

template <class R>
Series<R> sub(const Series<R> &f, const Series<R> &g) {
    return add(f, neg(g));
}

template <class R>
Series<R> scal(const Series<R> &f, const typename R::elem &s) {
    std::vector<typename R::elem> c;
    c.reserve(f.data().size());
    for (const auto &x : f.data()) c.push_back(f.ring().mul(x, s));
    return Series<R>(f.ring(), f.ord(), std::move(c));
}

template <class R>
Series<R> scal_long(const Series<R> &f, long s) {
    return scal(f, f.ring().from_long(s));
}

/* multiplication by q^k */
template <class R>
Series<R> shift_q(const Series<R> &f, long k) {
    if (f.is_zero()) return Series<R>(f.ring(), f.prec() + k);
    std::vector<typename R::elem> c = f.data();
    return Series<R>(f.ring(), f.ord() + k, std::move(c));
}

namespace detail {

template <class R>
Series<R> mul_with(const Series<R> &f, const Series<R> &g, bool parallel) {
    require_compatible(f, g);
    const long prec = std::min(f.ord() + g.prec(), g.ord() + f.prec());
    if (f.is_zero() || g.is_zero()) return Series<R>(f.ring(), prec);
    const long ord = f.ord() + g.ord();
    const long L = prec - ord;
    auto out = detail::convolve(f.ring(), f.data(), g.data(), L, parallel);
    return Series<R>(f.ring(), ord, std::move(out));
}

} // namespace detail

template <class R>
Series<R> mul(const Series<R> &f, const Series<R> &g) {
    return detail::mul_with(f, g, detail::parallel_enabled);
}

/* h with h*f = g to the available precision; leading coefficient of f must
 * be a unit.  Back-substitution gathers over the nonzeros of f, so division
 * by a pentagonal-sparse Euler product costs O(L*sqrt(L)). */
template <class R>
Series<R> divide(const Series<R> &g, const Series<R> &f) {
    require_compatible(f, g);
    if (f.is_zero()) throw series_error("division by zero series");
    const R &ring = f.ring();
    if (!ring.is_unit(f.data().front()))
        throw series_error("division requires a unit leading coefficient");
    if (g.is_zero()) return Series<R>(ring, g.prec() - f.ord());

    const long L = std::min(f.length(), g.length());
    const long ord = g.ord() - f.ord();
    const typename R::elem inv0 = ring.inv_unit(f.data().front());
    const auto &F = f.data();
    auto nzf = detail::nonzero_positions(ring, F);

    std::vector<typename R::elem> h(static_cast<std::size_t>(L), ring.zero());
    for (long k = 0; k < L; ++k) {
        typename R::Acc acc(ring);
        for (std::size_t idx : nzf) {
            const long j = static_cast<long>(idx);
            if (j == 0) continue;
            if (j > k) break;
            acc.addmul(F[idx], h[static_cast<std::size_t>(k - j)]);
        }
        h[static_cast<std::size_t>(k)] =
            ring.mul(ring.sub(g.coeff(g.ord() + k), acc.finish()), inv0);
    }
    return Series<R>(ring, ord, std::move(h));
}

template <class R>
Series<R> invert(const Series<R> &f) {
    if (f.is_zero()) throw series_error("cannot invert the zero series");
    std::vector<typename R::elem> one(static_cast<std::size_t>(f.length()), f.ring().zero());
    one[0] = f.ring().one();
    return divide(Series<R>(f.ring(), 0, std::move(one)), f);
}

namespace detail {

/* g has unit constant term g0 = +-1 (exact integers); h = g^e via
 *   n*g0*h_n = sum_{j>=1} ((e+1)j - n) g_j h_{n-j},
 * the coefficient form of g*(q h') = e*(q g')*h.  Valid for any integer e. */
inline std::vector<mpz_class> pow_unit_recurrence(const std::vector<mpz_class> &g, long e) {
    const long L = static_cast<long>(g.size());
    const bool neg0 = g[0] == -1;
    std::vector<mpz_class> h(static_cast<std::size_t>(L));
    h[0] = (neg0 && (e % 2 != 0)) ? -1 : 1;
    std::vector<std::size_t> nz;
    for (std::size_t j = 1; j < g.size(); ++j)
        if (g[j] != 0) nz.push_back(j);
    mpz_class sum, term, q, r;
    for (long n = 1; n < L; ++n) {
        sum = 0;
        for (std::size_t j : nz) {
            if (static_cast<long>(j) > n) break;
            /* term = ((e+1)j - n) * g_j * h_{n-j} */
            mpz_mul_si(term.get_mpz_t(), g[j].get_mpz_t(), (e + 1) * static_cast<long>(j) - n);
            mpz_addmul(sum.get_mpz_t(), term.get_mpz_t(), h[static_cast<std::size_t>(n - j)].get_mpz_t());
        }
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n));
        if (r != 0) throw series_error("power recurrence produced a non-integer step");
        h[static_cast<std::size_t>(n)] = neg0 ? mpz_class(-q) : q;
    }
    return h;
}

} // namespace detail

template <class R>
Series<R> pow(const Series<R> &f, long e) {
    const R &ring = f.ring();
    if (e == 0) {
        std::vector<typename R::elem> one(static_cast<std::size_t>(std::max(f.length(), 1L)),
                                          ring.zero());
        one[0] = ring.one();
        return Series<R>(ring, 0, std::move(one));
    }
    if (f.is_zero()) {
        if (e < 0) throw series_error("cannot invert the zero series");
        return Series<R>(ring, e * f.prec());
    }
    if constexpr (R::is_exact) {
        if (ring.is_unit(f.data().front())) {
            auto h = detail::pow_unit_recurrence(f.data(), e);
            return Series<R>(ring, e * f.ord(), std::move(h));
        }
    }
    Series<R> sq = e < 0 ? invert(f) : f;
    long target = e < 0 ? -e : e;
    bool have = false;
    Series<R> out(ring, 0);
    while (target > 0) {
        if (target & 1) {
            out = have ? mul(out, sq) : sq;
            have = true;
        }
        target >>= 1;
        if (target > 0) sq = mul(sq, sq);
    }
    return out;
}

/* f(q^m): coefficient of q^{mn} is coefficient n of f */
template <class R>
Series<R> substitute_q_power(const Series<R> &f, long m) {
    if (m <= 0) throw series_error("substitute_q_power requires m >= 1");
    if (f.is_zero()) return Series<R>(f.ring(), m * (f.prec() - 1) + 1);
    const long L = f.length();
    std::vector<typename R::elem> c(static_cast<std::size_t>(m * (L - 1) + 1), f.ring().zero());
    for (long i = 0; i < L; ++i) c[static_cast<std::size_t>(m * i)] = f.data()[static_cast<std::size_t>(i)];
    return Series<R>(f.ring(), m * f.ord(), std::move(c));
}

/* U_m: picks every m-th coefficient, U_m(sum a_n q^n) = sum a_{mn} q^n */
template <class R>
Series<R> u_operator(const Series<R> &f, long m) {
    if (m <= 0) throw series_error("u_operator requires m >= 1");
    const long lo = ceil_div(f.ord(), m);
    const long hi = ceil_div(f.prec(), m);
    if (f.is_zero() || hi <= lo) return Series<R>(f.ring(), hi);
    std::vector<typename R::elem> c;
    c.reserve(static_cast<std::size_t>(hi - lo));
    for (long n = lo; n < hi; ++n) c.push_back(f.coeff(m * n));
    return Series<R>(f.ring(), lo, std::move(c));
}

/* coefficientwise reduction into a mod-3^K ring (ModRing or BigModRing) */
template <class MR>
Series<MR> reduce_to(const Series<ExactRing> &f, const MR &target) {
    std::vector<typename MR::elem> c;
    c.reserve(f.data().size());
    for (const auto &x : f.data()) c.push_back(target.from_mpz(x));
    return Series<MR>(target, f.is_zero() ? f.prec() : f.ord(), std::move(c));
}

inline Series<ModRing> reduce_mod(const Series<ExactRing> &f, int K) {
    return reduce_to(f, ModRing(K));
}

void set_parallel(bool enabled);
bool parallel();
void print_head(std::ostream &os, const Series<ExactRing> &f, long count);

/* first exponent in the overlap window where f and g disagree, or prec of
 * the overlap if they agree everywhere on it */
template <class R>
bool agree_on_overlap(const Series<R> &f, const Series<R> &g, long *witness = nullptr) {
    require_compatible(f, g);
    const long hi = std::min(f.prec(), g.prec());
    const long lo = std::min(std::min(f.ord(), g.ord()), hi);
    for (long n = lo; n < hi; ++n) {
        if (!f.ring().eq(f.coeff(n), g.coeff(n))) {
            if (witness) *witness = n;
            return false;
        }
    }
    if (witness) *witness = hi;
    return true;
}

} // namespace cphi6

#endif
