#pragma once

#include "eulersum/poly.hpp"
#include "eulersum/series2.hpp"

namespace eulersum {

/// Generating function of the xi-type restricted sums: the coefficient of
/// u^n v^d times pi^{2n} is the sum of all xi(2j_1,...,2j_d) with
/// j_1+...+j_d = n. Built as the sinc/cosh double ratio at z = (1-v)u/4
/// over z = u/4.
Series2 phi_series(unsigned order);

/// Generating function of the totally alternating restricted sums: the
/// coefficient of u^n v^d times pi^{2n} is the depth-d sum of
/// zeta(2j_1 bar, ..., 2j_d bar). Sinc ratio times cos((1+v)u/4)/cos(u/4).
Series2 psi_tot_series(unsigned order);

/// Generating function of the one-alternating-component restricted sums.
/// Uses the rearranged form v/(2 sinc(u)) * sum_j (-1)^j u^j/(2j+1)! (1-v)^{j-1}
/// whose v-coefficients are polynomials, so the whole computation stays in
/// the Series2 ring.
Series2 psi1_series(unsigned order);

// Solution polynomials of the coupled first-order system with initial data
// X_0 = Y_0 = Z_0 = 0, W_0 = 1; they decompose the d-th derivative of
// sin(sqrt x) cosh(sqrt x)/sqrt x over the basis {sqrt(x)cot, sqrt(x)tanh,
// cot*tanh, 1}.
struct XyzwPolys {
    Poly x, y, z, w;
    bool operator==(const XyzwPolys&) const = default;
};

XyzwPolys xyzw_polys_recursive(unsigned d);
XyzwPolys xyzw_polys_closed(unsigned d);

// Same idea for sin(sqrt x)/(x sqrt x): P_d, Q_d with P_0 = 0, Q_0 = 1.
struct PqPolys {
    Poly p, q;
    bool operator==(const PqPolys&) const = default;
};

PqPolys pq_polys_recursive(unsigned d);
PqPolys pq_polys_closed(unsigned d);

}  // namespace eulersum
