#include "eulersum/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eulersum/numbers.hpp"

namespace eulersum {

namespace {

void require_depth_range(unsigned n, unsigned d) {
    if (d < 1 || d > n)
        throw std::domain_error("restricted sum: need 1 <= d <= n");
}

// zeta(m) when n is even, zeta(m bar) when n is odd.
PiPoly zeta_parity(unsigned n, unsigned m) {
    return (n % 2 == 0) ? zeta_even(m) : zeta_bar_even(m);
}

// sum_{r+s=m, r,s>=0} (-1)^r (4^r - 1) zeta(2r) zeta(2s)
PiPoly signed_quarter_conv(unsigned m) {
    PiPoly acc;
    for (unsigned r = 0; r <= m; ++r) {
        Rational c = Rational(parity_sign(r)) * (Rational::pow2(2L * r) - Rational(1));
        if (c.is_zero()) continue;  // r = 0 contributes nothing
        acc += (zeta_even(2 * r) * zeta_even(2 * (m - r))).scaled(c);
    }
    return acc;
}

}  // namespace

PiPoly xi_short_form(unsigned n, unsigned d) {
    require_depth_range(n, d);
    const long dl = static_cast<long>(d);
    PiPoly acc;
    for (long j = 0; j <= floor_div(dl - 1, 2); ++j) {
        Rational c = Rational(parity_sign(floor_div(j, 2))) *
                     Rational(binomial(2 * dl - 2 * j - 1, dl)) /
                     (Rational::pow2(2 * dl - j - 2) * Rational(factorial(2 * j + 1)));
        acc += (zeta_parity(n, 2 * n - 2 * j) * PiPoly::monomial(2 * j, c));
    }
    for (long j = 0; j <= floor_div(dl - 2, 4); ++j) {
        PiPoly conv = signed_quarter_conv(n - 2 * j).scaled(Rational::pow2(-2L * (n - 2 * j)));
        Rational c = Rational(parity_sign(j)) * Rational(binomial(2 * dl - 4 * j - 2, dl)) /
                     (Rational::pow2(2 * dl - 2 * j - 5) * Rational(factorial(4 * j + 2)));
        acc += conv * PiPoly::monomial(4 * j, c);
    }
    return acc;
}

PiPoly xi_long_form(unsigned n, unsigned d) {
    require_depth_range(n, d);
    const long nl = static_cast<long>(n);
    const long dl = static_cast<long>(d);
    PiPoly acc;
    for (long ell = 0; ell <= nl - dl; ++ell) {
        Rational outer = Rational(2) * Rational(parity_sign(dl + floor_div(ell - nl - 1, 2))) *
                         Rational(binomial(nl - ell, dl)) /
                         (Rational::pow2(nl + ell) * Rational(factorial(2 * n - 2 * ell + 1)));
        PiPoly inner;
        for (long j = 0; j <= ell; ++j) {
            Rational ej = Rational(euler_number(2 * j)) / Rational(factorial(2 * j));
            inner += zeta_bar_even(2 * (ell - j)) *
                     PiPoly::monomial(2 * (n - ell + j), ej);
        }
        acc += inner.scaled(outer);
    }
    return acc;
}

PiPoly xi_row_sum(unsigned n) {
    if (n < 1) throw std::domain_error("xi_row_sum: need n >= 1");
    PiPoly acc;
    for (unsigned j = 0; j <= n; ++j) {
        Rational ej = Rational(euler_number(2 * j)) / Rational(factorial(2 * j));
        acc += zeta_bar_even(2 * (n - j)) * PiPoly::monomial(2 * j, ej);
    }
    return acc.scaled(Rational(-2) * Rational::pow2(-2L * n));
}

PiPoly zeta_bar2_power(unsigned n) {
    if (n < 1) throw std::domain_error("zeta_bar2_power: need n >= 1");
    Rational c = Rational(parity_sign(floor_div(n + 1, 2))) /
                 (Rational::pow2(n) * Rational(factorial(2 * n + 1)));
    return PiPoly::monomial(2 * n, c);
}

PiPoly a0(unsigned n, unsigned d) {
    require_depth_range(n, d);
    const long dl = static_cast<long>(d);
    PiPoly acc = zeta_even(2 * n).scaled(Rational(binomial(2 * dl - 1, dl)) *
                                         Rational::pow2(-2 * (dl - 1)));
    for (long j = 1; j <= floor_div(dl - 1, 2); ++j) {
        Rational c = Rational(binomial(2 * dl - 2 * j - 1, dl)) /
                     (Rational::pow2(2 * dl - 3) * Rational(2 * j + 1) * bernoulli(2 * j));
        acc -= (zeta_even(2 * j) * zeta_even(2 * (n - j))).scaled(c);
    }
    return acc;
}

PiPoly a_total(unsigned n, unsigned d) {
    require_depth_range(n, d);
    const long dl = static_cast<long>(d);
    const long nl = static_cast<long>(n);
    PiPoly acc = zeta_even(2 * n).scaled(Rational(binomial(2 * dl - 1, dl)) *
                                         Rational::pow2(-(2 * nl + dl - 2)));
    for (long j = 1; j <= floor_div(dl - 1, 2); ++j) {
        Rational c = Rational(binomial(2 * dl - 2 * j - 1, dl)) /
                     (Rational::pow2(2 * nl + dl - 3) * Rational(2 * j + 1) * bernoulli(2 * j));
        acc -= (zeta_even(2 * j) * zeta_even(2 * (n - j))).scaled(c);
    }
    return acc;
}

PiPoly a1(unsigned n, unsigned d) {
    require_depth_range(n, d);
    const long dl = static_cast<long>(d);
    PiPoly acc = zeta_bar_even(2 * n);
    for (long j = 0; j <= floor_div(dl - 2, 2); ++j) {
        Rational inner;
        for (long k = 0; k <= 2 * j + 1; ++k) {
            inner += Rational(parity_sign(dl + j + k)) * Rational(binomial(2 * j + 1, k)) *
                     binomial(Rational(k - 3, 2), d - 1);
        }
        inner /= Rational(factorial(2 * j + 1));
        acc -= zeta_even(2 * n - 2 * j) * PiPoly::monomial(2 * j, inner);
    }
    return acc;
}

PiPoly a_all_alt(unsigned n, unsigned d) {
    require_depth_range(n, d);
    const long dl = static_cast<long>(d);
    const long nl = static_cast<long>(n);
    PiPoly acc;
    for (long j = 0; j <= floor_div(dl - 1, 2); ++j) {
        Rational c = Rational(parity_sign(j)) * Rational::pow2(2 * (j - nl - dl + 1)) *
                     Rational(binomial(2 * dl - 2 * j - 1, dl)) / Rational(factorial(2 * j + 1));
        acc += zeta_even(2 * n - 2 * j) * PiPoly::monomial(2 * j, c);
    }
    for (long c = 1; c <= dl; ++c) {
        for (long j = 0; j <= floor_div(c - 1, 2); ++j) {
            for (long k = 0; k <= floor_div(dl - c, 2); ++k) {
                Rational coef = Rational(parity_sign(c + j + k)) *
                                (Rational(1) - Rational::pow2(2 * (j + k - nl))) *
                                Rational(binomial(2 * c - 2 * j - 2, c - 1)) *
                                Rational(binomial(2 * dl - 2 * c - 2 * k, dl - c)) /
                                (Rational(c) * Rational(factorial(2 * j)) *
                                 Rational(factorial(2 * k)) * Rational::pow2(2 * (dl - 1)));
                acc += zeta_even(2 * (n - j - k)) * PiPoly::monomial(2 * (j + k), coef);
            }
        }
        for (long j = 1; j <= floor_div(c, 2); ++j) {
            for (long k = 0; k <= floor_div(dl - c - 1, 2); ++k) {
                Rational coef = Rational(parity_sign(c + j + k)) *
                                Rational::pow2(2 * (j + k - nl - dl + 1)) *
                                Rational(binomial(2 * c - 2 * j - 1, c - 1)) *
                                Rational(binomial(2 * dl - 2 * c - 2 * k - 1, dl - c)) /
                                (Rational(c) * Rational(factorial(2 * j - 1)) *
                                 Rational(factorial(2 * k + 1)));
                acc += zeta_even(2 * (n - j - k)) * PiPoly::monomial(2 * (j + k), coef);
            }
        }
    }
    return acc;
}

PiPoly a_alpha(unsigned n, unsigned d, unsigned alpha) {
    require_depth_range(n, d);
    if (alpha > d)
        throw std::domain_error("a_alpha: need 0 <= alpha <= d");
    if (alpha == 0) return a0(n, d);
    if (alpha == d) return a_all_alt(n, d);
    if (alpha == 1) return a1(n, d);
    if (d == 3 && alpha == 2) {
        // Coincides with the alpha = 1 value at depth 3.
        return zeta_even(2 * n).scaled(Rational(7, 8)) + zeta_bar_even(2 * n);
    }
    if (d == 4 && alpha == 2) {
        return zeta_even(2 * n).scaled(Rational(57, 32)) +
               zeta_bar_even(2 * n).scaled(Rational(3, 2)) -
               (zeta_even(2) * zeta_even(2 * n - 2)).scaled(Rational(3, 16));
    }
    if (d == 4 && alpha == 3) {
        return zeta_even(2 * n).scaled(Rational(11, 16)) +
               zeta_bar_even(2 * n).scaled(Rational(3, 2)) -
               (zeta_even(2) * zeta_bar_even(2 * n - 2)).scaled(Rational(1, 2));
    }
    throw UnsupportedFormula(
        "a_alpha: no closed form available for depth >= 5 with 1 < alpha < d");
}

PiPoly a1_from_a0(unsigned n, unsigned d) {
    require_depth_range(n, d);
    const long nl = static_cast<long>(n);
    const long dl = static_cast<long>(d);
    PiPoly acc = zeta_bar_even(2 * n).scaled(Rational(parity_sign(dl - 1)) *
                                             Rational(binomial(nl - 1, dl - 1)));
    for (long k = 1; k <= dl - 1; ++k) {
        for (long ell = k; ell <= nl + k - dl; ++ell) {
            PiPoly tail = (dl - k == 1) ? zeta_even(2 * (n - ell))
                                        : a0(n - ell, d - k);
            Rational c = Rational(parity_sign(k - 1)) * Rational(binomial(ell - 1, k - 1));
            acc += (zeta_bar_even(2 * ell) * tail).scaled(c);
        }
    }
    return acc;
}

PiPoly a1_moment(unsigned r, unsigned n) {
    if (n < 1) throw std::domain_error("a1_moment: need n >= 1");
    const long nl = static_cast<long>(n);
    switch (r) {
        case 0:
            return zeta_even(2 * n).scaled(Rational(1, 2)) +
                   zeta_bar_even(2 * n).scaled(Rational(nl));
        case 1:
            return zeta_even(2 * n).scaled(Rational(nl, 2)) +
                   zeta_bar_even(2 * n).scaled(Rational(nl * (2 * nl - 1), 4)) -
                   (zeta_bar_even(2) * zeta_bar_even(2 * n - 2)).scaled(Rational(3, 2));
        case 2:
            return zeta_even(2 * n).scaled(Rational(nl * nl, 2)) +
                   zeta_bar_even(2 * n).scaled(
                       Rational(nl * (2 * nl - 1) * (4 * nl - 1), 24)) -
                   (zeta_bar_even(2) * zeta_bar_even(2 * n - 2))
                       .scaled(Rational(4 * nl + 3, 4));
        default:
            throw UnsupportedFormula("a1_moment: r must be 0, 1 or 2");
    }
}

PiPoly a0_moment(unsigned r, unsigned n) {
    if (n < 1) throw std::domain_error("a0_moment: need n >= 1");
    const long nl = static_cast<long>(n);
    switch (r) {
        case 0:
            return zeta_even(2 * n).scaled(Rational(2 * nl + 1, 2));
        case 1:
            return zeta_even(2 * n).scaled(Rational(nl * (2 * nl + 1), 4));
        case 2:
            return zeta_even(2 * n).scaled(
                       Rational(nl * (8 * nl * nl + 6 * nl + 1), 24)) -
                   (zeta_even(2) * zeta_even(2 * n - 2)).scaled(Rational(2 * nl - 3, 2));
        default:
            throw UnsupportedFormula("a0_moment: r must be 0, 1 or 2");
    }
}

PiPoly l2_conv(unsigned n) {
    if (n < 2) throw std::domain_error("l2_conv: need n >= 2");
    const long nl = static_cast<long>(n);
    return zeta_even(2 * n).scaled(Rational(nl * (2 * nl - 1) * (4 * nl - 1), 24)) +
           (zeta_even(2) * zeta_even(2 * n - 2)).scaled(Rational(2 * nl - 3, 4)) +
           zeta_bar_even(2 * n).scaled(Rational(nl * nl, 2));
}

PiPoly zeta_bar_conv(unsigned n) {
    if (n < 2) throw std::domain_error("zeta_bar_conv: need n >= 2");
    return zeta_even(2 * n).scaled(Rational(2L * n - 1, 2)) + zeta_bar_even(2 * n);
}

PiPoly ramanujan_r_exact(unsigned n) {
    if (n < 1) throw std::domain_error("ramanujan_r_exact: need n >= 1");
    PiPoly acc;
    for (unsigned r = 0; r <= n; ++r)
        acc += (zeta_even(2 * r) * zeta_even(2 * (n - r))).scaled(Rational(parity_sign(r)));
    return acc;
}

double ramanujan_r1_numeric(unsigned n, unsigned terms) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("ramanujan_r1_numeric: need even n >= 2");
    if (terms < 1)
        throw std::invalid_argument("ramanujan_r1_numeric: need terms >= 1");
    const double pi = std::numbers::pi;
    const double expo = 2.0 * static_cast<double>(n) - 1.0;

    // zeta(2n-1) by direct summation until the terms drop below 1e-16.
    double zeta_odd = 0.0, comp = 0.0;
    for (std::uint64_t k = 1;; ++k) {
        double term = std::pow(static_cast<double>(k), -expo);
        double t = zeta_odd + term;
        comp += (std::abs(zeta_odd) >= term) ? (zeta_odd - t) + term : (term - t) + zeta_odd;
        zeta_odd = t;
        if (term < 1e-16) break;
    }
    zeta_odd += comp;

    double expsum = 0.0;
    for (unsigned k = terms; k >= 1; --k)
        expsum += std::pow(static_cast<double>(k), 1.0 - 2.0 * n) /
                  (std::exp(2.0 * pi * k) - 1.0);

    return -pi * (zeta_odd + 2.0 * expsum);
}

}  // namespace eulersum
