#pragma once

#include "eulersum/poly.hpp"
#include "eulersum/rational.hpp"

#include <vector>

namespace eulersum {

// The four even-part kernels: sin(x)/x, cos(x), sinh(x)/x, cosh(x) as series
// in z = x^2, i.e. sum (-1)^k z^k/(2k+1)!, sum (-1)^k z^k/(2k)!, and the two
// sign-free variants.
enum class KernelKind { Sinc, Cos, Sinhc, Cosh };

// Truncated power series in u with polynomial-in-v coefficients, exact over
// the rationals. Pi never appears: by convention the coefficient of u^n is
// read as a rational multiple of pi^{2n}, which keeps all generating
// functions in scope inside this ring.
class Series2 {
public:
    explicit Series2(unsigned order);  // zero series truncated at u^order
    static Series2 one(unsigned order);
    static Series2 from_poly(Poly p, unsigned order);  // p attached to u^0

    unsigned order() const { return order_; }
    const Poly& at(unsigned n) const;  // throws std::out_of_range past order
    void set(unsigned n, Poly p);

    /// Stored rational at u^n v^d; the represented value is result * pi^{2n}.
    Rational coeff(unsigned n, unsigned d) const;

    Series2& operator+=(const Series2& o);
    Series2& operator-=(const Series2& o);
    friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
    friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
    friend Series2 operator*(const Series2& a, const Series2& b);

    Series2 scaled(const Rational& c) const;

    /// this * b^{-1} truncated at the common order; b must have constant
    /// term equal to the unit polynomial 1.
    Series2 div(const Series2& b) const;

    bool operator==(const Series2& o) const { return order_ == o.order_ && c_ == o.c_; }

private:
    unsigned order_;
    std::vector<Poly> c_;  // index = power of u, size order_+1
};

/// Kernel evaluated at z = q * p(v) * u under the pi-grading: the
/// coefficient of u^k is kernel_k * q^k * p(v)^k.
Series2 kernel_series(KernelKind kind, const Rational& q, const Poly& p, unsigned order);

}  // namespace eulersum
