#include "eulersum/pipoly.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "eulersum/numbers.hpp"

namespace eulersum {

PiPoly PiPoly::monomial(unsigned pi_exp, Rational c) {
    PiPoly p;
    p.set(pi_exp, std::move(c));
    return p;
}

void PiPoly::set(unsigned pi_exp, Rational c) {
    if (pi_exp % 2 != 0)
        throw std::logic_error("PiPoly: odd pi exponent");
    if (c.is_zero())
        t_.erase(pi_exp);
    else
        t_[pi_exp] = std::move(c);
}

Rational PiPoly::coeff(unsigned pi_exp) const {
    auto it = t_.find(pi_exp);
    return it == t_.end() ? Rational() : it->second;
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
    for (const auto& [e, c] : o.t_)
        set(e, coeff(e) + c);
    return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
    for (const auto& [e, c] : o.t_)
        set(e, coeff(e) - c);
    return *this;
}

PiPoly PiPoly::operator-() const {
    PiPoly r;
    for (const auto& [e, c] : t_)
        r.t_.emplace(e, -c);
    return r;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
    PiPoly r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_)
            r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
}

PiPoly PiPoly::scaled(const Rational& c) const {
    PiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : t_)
        r.t_.emplace(e, v * c);
    return r;
}

double PiPoly::to_double() const {
    double acc = 0.0;
    for (const auto& [e, c] : t_)  // std::map iterates in increasing exponent order
        acc += c.to_double() * std::pow(std::numbers::pi, static_cast<double>(e));
    return acc;
}

std::string PiPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : t_) {
        terms.push_back({{"pi_exp", e}, {"num", c.num_str()}, {"den", c.den_str()}});
    }
    nlohmann::json j;
    j["terms"] = std::move(terms);
    return j.dump();
}

PiPoly zeta_even(unsigned two_m) {
    if (two_m % 2 != 0) throw std::invalid_argument("zeta_even: argument must be even");
    if (two_m == 0) return PiPoly::constant(Rational(-1, 2));
    const unsigned m = two_m / 2;
    // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
    Rational c = bernoulli(two_m) * Rational::pow2(2L * m) / (Rational(2) * Rational(factorial(two_m)));
    if (m % 2 == 0) c = -c;
    return PiPoly::monomial(two_m, c);
}

PiPoly zeta_bar_even(unsigned two_m) {
    if (two_m % 2 != 0) throw std::invalid_argument("zeta_bar_even: argument must be even");
    if (two_m == 0) return PiPoly::constant(Rational(-1, 2));
    return zeta_even(two_m).scaled(Rational::pow2(1 - 2L * (two_m / 2)) - Rational(1));
}

}  // namespace eulersum
