#pragma once

#include "eulersum/rational.hpp"

#include <initializer_list>
#include <vector>

namespace eulersum {

// Dense univariate polynomial over Rational; trailing zeros trimmed.
// Degrees stay small here (<= series order), so dense storage is fine.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs);  // index = power

    static Poly constant(Rational c);
    static Poly monomial(unsigned k, Rational c);

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(unsigned k) const;
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const Rational& c) const;
    Poly derivative() const;
    Poly mul_x() const;  // multiply by the variable
    Poly pow(unsigned k) const;
    Rational eval(const Rational& at) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

// The same representation carries both roles: coefficients in the depth
// marker v inside a Series2, and the x-polynomials of the recursive systems.
using PolyV = Poly;
using PolyX = Poly;

}  // namespace eulersum
