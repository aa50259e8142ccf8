#pragma once

#include "eulersum/rational.hpp"

#include <map>
#include <string>

namespace eulersum {

// Exact value of the form sum_k c_k * pi^{2k}, c_k rational. Only even
// powers of pi are representable; every closed form in this library lives
// in this space, so the restriction catches grading mistakes at the source.
class PiPoly {
public:
    PiPoly() = default;

    static PiPoly constant(Rational c) { return monomial(0, std::move(c)); }
    static PiPoly monomial(unsigned pi_exp, Rational c);  // pi_exp must be even

    bool is_zero() const { return t_.empty(); }
    const std::map<unsigned, Rational>& terms() const { return t_; }
    Rational coeff(unsigned pi_exp) const;

    PiPoly& operator+=(const PiPoly& o);
    PiPoly& operator-=(const PiPoly& o);
    PiPoly operator-() const;
    friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
    friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
    friend PiPoly operator*(const PiPoly& a, const PiPoly& b);

    PiPoly scaled(const Rational& c) const;

    bool operator==(const PiPoly& o) const { return t_ == o.t_; }

    /// Evaluate in double precision, terms summed in increasing exponent order.
    double to_double() const;

    /// Canonical JSON: {"terms":[{"den":"...","num":"...","pi_exp":k},...]},
    /// terms ascending by pi_exp, integers as exact decimal strings.
    std::string to_json() const;

private:
    void set(unsigned pi_exp, Rational c);
    std::map<unsigned, Rational> t_;
};

/// zeta(2m) as an exact multiple of pi^{2m}; zeta(0) = -1/2. Argument is the
/// even integer itself.
PiPoly zeta_even(unsigned two_m);

/// zeta(2m with alternating sign) = (2^{1-2m} - 1) zeta(2m); value at 0 is -1/2.
PiPoly zeta_bar_even(unsigned two_m);

}  // namespace eulersum
