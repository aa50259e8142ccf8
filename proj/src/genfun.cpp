#include "eulersum/genfun.hpp"

#include <utility>

#include "eulersum/numbers.hpp"

namespace eulersum {

namespace {

const Poly& poly_one() {
    static const Poly p = Poly::constant(Rational(1));
    return p;
}

const Poly& one_minus_v() {
    static const Poly p{Rational(1), Rational(-1)};
    return p;
}

const Poly& one_plus_v() {
    static const Poly p{Rational(1), Rational(1)};
    return p;
}

Series2 kernel_ratio(KernelKind kind, const Poly& p_num, unsigned order) {
    const Rational q(1, 4);
    return kernel_series(kind, q, p_num, order).div(kernel_series(kind, q, poly_one(), order));
}

}  // namespace

Series2 phi_series(unsigned order) {
    return kernel_ratio(KernelKind::Sinc, one_minus_v(), order) *
           kernel_ratio(KernelKind::Cosh, one_minus_v(), order);
}

Series2 psi_tot_series(unsigned order) {
    return kernel_ratio(KernelKind::Sinc, one_minus_v(), order) *
           kernel_ratio(KernelKind::Cos, one_plus_v(), order);
}

Series2 psi1_series(unsigned order) {
    Series2 tail(order);
    for (unsigned j = 1; j <= order; ++j) {
        Rational c = Rational(parity_sign(j)) / Rational(factorial(2 * j + 1));
        tail.set(j, one_minus_v().pow(j - 1).scaled(c));
    }
    Series2 inv_sinc =
        Series2::one(order).div(kernel_series(KernelKind::Sinc, Rational(1), poly_one(), order));
    Series2 half_v = Series2::from_poly(Poly::monomial(1, Rational(1, 2)), order);
    return half_v * inv_sinc * tail;
}

XyzwPolys xyzw_polys_recursive(unsigned d) {
    XyzwPolys cur{Poly{}, Poly{}, Poly{}, poly_one()};
    for (unsigned k = 0; k < d; ++k) {
        const Rational next(1, static_cast<long>(k) + 1);
        const Rational kk(static_cast<long>(k));
        const Rational half(1, 2);
        const Rational k_half(2L * k + 1, 2);
        XyzwPolys nxt;
        nxt.x = (cur.x.scaled(kk) - cur.x.derivative().mul_x() - cur.z.scaled(half) -
                 cur.w.scaled(half))
                    .scaled(next);
        nxt.y = (cur.y.scaled(kk) - cur.y.derivative().mul_x() + cur.z.scaled(half) -
                 cur.w.scaled(half))
                    .scaled(next);
        nxt.z = (cur.z.scaled(k_half) - cur.z.derivative().mul_x() -
                 cur.x.mul_x().scaled(half) - cur.y.mul_x().scaled(half))
                    .scaled(next);
        nxt.w = (cur.w.scaled(k_half) - cur.w.derivative().mul_x() +
                 cur.x.mul_x().scaled(half) - cur.y.mul_x().scaled(half))
                    .scaled(next);
        cur = std::move(nxt);
    }
    return cur;
}

XyzwPolys xyzw_polys_closed(unsigned d) {
    const long dl = static_cast<long>(d);
    XyzwPolys r;
    // X and Y share everything but the sign pattern.
    for (long j = 0; j <= floor_div(dl - 1, 2); ++j) {
        Rational mag = Rational::pow2(3 * j - (2 * dl - 1)) *
                       Rational(binomial(2 * dl - 2 * j - 1, dl)) /
                       Rational(factorial(2 * j + 1));
        r.x += Poly::monomial(j, mag * Rational(parity_sign(floor_div(j, 2) - 1)));
        r.y += Poly::monomial(j, mag * Rational(parity_sign(floor_div(j - 1, 2))));
    }
    for (long j = 0; j <= floor_div(dl - 2, 4); ++j) {
        Rational c = Rational(parity_sign(j)) * Rational::pow2(3 * (2 * j + 1) - 2 * dl) *
                     Rational(binomial(2 * dl - 4 * j - 2, dl)) /
                     Rational(factorial(4 * j + 2));
        r.z += Poly::monomial(2 * j + 1, std::move(c));
    }
    for (long j = 0; j <= floor_div(dl, 4); ++j) {
        Rational c = Rational(parity_sign(j)) * Rational::pow2(6 * j - 2 * dl) *
                     Rational(binomial(2 * dl - 4 * j, dl)) / Rational(factorial(4 * j));
        r.w += Poly::monomial(2 * j, std::move(c));
    }
    return r;
}

PqPolys pq_polys_recursive(unsigned d) {
    PqPolys cur{Poly{}, poly_one()};
    for (unsigned k = 0; k < d; ++k) {
        const Rational half(1, 2);
        PqPolys nxt;
        nxt.p = cur.p.scaled(Rational(static_cast<long>(k) + 1)) - cur.p.derivative().mul_x() -
                cur.q.scaled(half);
        nxt.q = cur.q.scaled(Rational(2L * k + 3, 2)) - cur.q.derivative().mul_x() +
                cur.p.mul_x().scaled(half);
        cur = std::move(nxt);
    }
    return cur;
}

PqPolys pq_polys_closed(unsigned d) {
    const long dl = static_cast<long>(d);
    const Rational dfac = Rational(factorial(d));
    PqPolys r;
    for (long j = 0; j <= floor_div(dl - 1, 2); ++j) {
        Rational acc;
        for (long k = 0; k <= 2 * j + 1; ++k) {
            Rational term = Rational(binomial(2 * j + 1, k)) *
                            binomial(Rational(k - 3, 2), d) *
                            Rational(parity_sign(dl + j + k + 1));
            acc += term;
        }
        r.p += Poly::monomial(j, acc * dfac / Rational(factorial(2 * j + 1)));
    }
    for (long j = 0; j <= floor_div(dl, 2); ++j) {
        Rational acc;
        for (long k = 0; k <= 2 * j; ++k) {
            Rational term = Rational(binomial(2 * j, k)) * binomial(Rational(k - 3, 2), d) *
                            Rational(parity_sign(dl + j + k));
            acc += term;
        }
        r.q += Poly::monomial(j, acc * dfac / Rational(factorial(2 * j)));
    }
    return r;
}

}  // namespace eulersum
