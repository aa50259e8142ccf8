#include "eulersum/rational.hpp"

#include <stdexcept>
#include <utility>

namespace eulersum {

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(mpz_class n, mpz_class d) {
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(std::move(n), std::move(d));
    v_.canonicalize();  // lowest terms, denominator > 0
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(std::move(p));
    return Rational(mpz_class(1), std::move(p));
}

}  // namespace eulersum
