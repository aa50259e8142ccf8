#include "eulersum/poly.hpp"

#include <algorithm>
#include <utility>

namespace eulersum {

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) {
    trim();
}

Poly Poly::constant(Rational c) {
    return monomial(0, std::move(c));
}

Poly Poly::monomial(unsigned k, Rational c) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.resize(k + 1);
    p.c_[k] = std::move(c);
    return p;
}

Rational Poly::coeff(unsigned k) const {
    return k < c_.size() ? c_[k] : Rational();
}

bool Poly::is_one() const {
    return c_.size() == 1 && c_[0] == Rational(1);
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& v : c_) r.c_.push_back(v * c);
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() < 2) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
    r.trim();
    return r;
}

Poly Poly::mul_x() const {
    Poly r;
    if (is_zero()) return r;
    r.c_.reserve(c_.size() + 1);
    r.c_.push_back(Rational());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = Poly::constant(Rational(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Rational Poly::eval(const Rational& at) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

}  // namespace eulersum
