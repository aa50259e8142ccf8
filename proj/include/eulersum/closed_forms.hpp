#pragma once

#include "eulersum/pipoly.hpp"

#include <stdexcept>

namespace eulersum {

/// Thrown when a requested restricted sum has no closed form in this
/// library (depth >= 5 with 1 < alpha < d). Distinct from domain errors so
/// callers can tell "bad input" from "formula does not exist".
struct UnsupportedFormula : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Xi(2n, d): the sum of all xi(2j_1,...,2j_d), j_1+...+j_d = n, evaluated
/// via the two-sum formula built from zeta products. Fast when d is small.
PiPoly xi_short_form(unsigned n, unsigned d);

/// Same value via the Euler-number expansion; preferable when d is close to n.
PiPoly xi_long_form(unsigned n, unsigned d);

/// Row sum over depth: sum_{d=1}^{n} Xi(2n, d).
PiPoly xi_row_sum(unsigned n);

/// zeta(2 bar repeated n times) = (-1)^{floor((n+1)/2)} pi^{2n}/(2^n (2n+1)!).
PiPoly zeta_bar2_power(unsigned n);

/// Restricted sum of plain multiple zeta values of weight 2n and depth d.
PiPoly a0(unsigned n, unsigned d);

/// Restricted sum of all alternating Euler sums of weight 2n and depth d
/// (all sign patterns together).
PiPoly a_total(unsigned n, unsigned d);

/// Restricted sum over words with exactly one alternating component.
PiPoly a1(unsigned n, unsigned d);

/// Restricted sum over totally alternating words (all d components barred).
PiPoly a_all_alt(unsigned n, unsigned d);

/// A_alpha(2n, d) dispatch: alpha = 0, 1, d for any depth, everything for
/// d <= 4. Throws UnsupportedFormula otherwise.
PiPoly a_alpha(unsigned n, unsigned d, unsigned alpha);

/// A_1(2n, d) by depth reduction through a0; independent route used to
/// cross-check a1. Uses the depth-1 convention A_0(2m, 1) = zeta(2m).
PiPoly a1_from_a0(unsigned n, unsigned d);

/// Moments of the mixed double convolution:
/// A_1^{(r)}(2n,2) = sum_{j=1}^{n-1} j^r zeta(2j) zeta(2n-2j bar), r in {0,1,2}.
PiPoly a1_moment(unsigned r, unsigned n);

/// Moments of the plain double convolution:
/// A_0^{(r)}(2n,2) = sum_{j=1}^{n-1} j^r zeta(2j) zeta(2n-2j), r in {0,1,2}.
PiPoly a0_moment(unsigned r, unsigned n);

/// L_2(n) = sum_{j=1}^{n-1} j^2 zeta(2j bar) zeta(2n-2j bar), n >= 2.
PiPoly l2_conv(unsigned n);

/// sum_{a+b=n, a,b>0} zeta(2a bar) zeta(2b bar) = (2n-1)/2 zeta(2n) + zeta(2n bar).
PiPoly zeta_bar_conv(unsigned n);

/// R_n(1) = sum_{r+s=n, r,s>=0} (-1)^r zeta(2r) zeta(2s), with zeta(0) = -1/2.
/// Zero for odd n.
PiPoly ramanujan_r_exact(unsigned n);

/// R_n(1) for even n from the fast exponential series
/// -pi (zeta(2n-1) + 2 sum_k k^{1-2n}/(e^{2 k pi} - 1)).
double ramanujan_r1_numeric(unsigned n, unsigned terms = 20);

}  // namespace eulersum
