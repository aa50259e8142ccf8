#include "eulersum/series2.hpp"

#include <stdexcept>
#include <utility>

#include "eulersum/numbers.hpp"

namespace eulersum {

Series2::Series2(unsigned order) : order_(order), c_(order + 1) {}

Series2 Series2::one(unsigned order) {
    return from_poly(Poly::constant(Rational(1)), order);
}

Series2 Series2::from_poly(Poly p, unsigned order) {
    Series2 s(order);
    s.c_[0] = std::move(p);
    return s;
}

const Poly& Series2::at(unsigned n) const {
    if (n > order_) throw std::out_of_range("Series2: truncation overflow");
    return c_[n];
}

void Series2::set(unsigned n, Poly p) {
    if (n > order_) throw std::out_of_range("Series2: truncation overflow");
    c_[n] = std::move(p);
}

Rational Series2::coeff(unsigned n, unsigned d) const {
    return at(n).coeff(d);
}

namespace {
void require_same_order(const Series2& a, const Series2& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("Series2: truncation order mismatch");
}
}  // namespace

Series2& Series2::operator+=(const Series2& o) {
    require_same_order(*this, o);
    for (unsigned n = 0; n <= order_; ++n) c_[n] += o.c_[n];
    return *this;
}

Series2& Series2::operator-=(const Series2& o) {
    require_same_order(*this, o);
    for (unsigned n = 0; n <= order_; ++n) c_[n] -= o.c_[n];
    return *this;
}

Series2 operator*(const Series2& a, const Series2& b) {
    require_same_order(a, b);
    Series2 r(a.order());
    for (unsigned n = 0; n <= a.order(); ++n) {
        Poly acc;
        for (unsigned i = 0; i <= n; ++i) {
            if (a.at(i).is_zero() || b.at(n - i).is_zero()) continue;
            acc += a.at(i) * b.at(n - i);
        }
        r.set(n, std::move(acc));
    }
    return r;
}

Series2 Series2::scaled(const Rational& c) const {
    Series2 r(order_);
    for (unsigned n = 0; n <= order_; ++n) r.c_[n] = c_[n].scaled(c);
    return r;
}

Series2 Series2::div(const Series2& b) const {
    require_same_order(*this, b);
    if (!b.at(0).is_one())
        throw std::domain_error("Series2: non-invertible series (constant term is not 1)");
    // b[0] == 1, so r[n] = a[n] - sum_{k=1}^{n} b[k] r[n-k].
    Series2 r(order_);
    for (unsigned n = 0; n <= order_; ++n) {
        Poly acc = c_[n];
        for (unsigned k = 1; k <= n; ++k) {
            if (b.at(k).is_zero() || r.c_[n - k].is_zero()) continue;
            acc -= b.at(k) * r.c_[n - k];
        }
        r.c_[n] = std::move(acc);
    }
    return r;
}

Series2 kernel_series(KernelKind kind, const Rational& q, const Poly& p, unsigned order) {
    Series2 s(order);
    Rational qk(1);
    Poly pk = Poly::constant(Rational(1));
    for (unsigned k = 0; k <= order; ++k) {
        unsigned fac_arg = (kind == KernelKind::Sinc || kind == KernelKind::Sinhc) ? 2 * k + 1 : 2 * k;
        Rational ck = Rational(1) / Rational(factorial(fac_arg));
        if ((kind == KernelKind::Sinc || kind == KernelKind::Cos) && k % 2 == 1) ck = -ck;
        s.set(k, pk.scaled(ck * qk));
        if (k < order) {
            qk *= q;
            pk = pk * p;
        }
    }
    return s;
}

}  // namespace eulersum
