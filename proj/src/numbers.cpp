#include "eulersum/numbers.hpp"

#include <stdexcept>
#include <vector>

namespace eulersum {

namespace {

constexpr unsigned kCacheLimit = 64;

std::vector<Rational> extend_bernoulli(std::vector<Rational> b, unsigned up_to) {
    // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1, k) B_k, B_0 = 1.
    if (b.empty()) b.push_back(Rational(1));
    for (unsigned m = static_cast<unsigned>(b.size()); m <= up_to; ++m) {
        Rational acc;
        for (unsigned k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * b[k];
        b.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
    return b;
}

std::vector<mpz_class> extend_euler(std::vector<mpz_class> e, unsigned up_to_half) {
    // E_{2n} = -sum_{k=0}^{n-1} C(2n, 2k) E_{2k}, E_0 = 1. Index i holds E_{2i}.
    if (e.empty()) e.push_back(1);
    for (unsigned n = static_cast<unsigned>(e.size()); n <= up_to_half; ++n) {
        mpz_class acc = 0;
        for (unsigned k = 0; k < n; ++k)
            acc += binomial(2L * n, 2L * k) * e[k];
        e.push_back(-acc);
    }
    return e;
}

const std::vector<Rational>& bernoulli_cache() {
    static const std::vector<Rational> table = extend_bernoulli({}, kCacheLimit);
    return table;
}

const std::vector<mpz_class>& euler_cache() {
    static const std::vector<mpz_class> table = extend_euler({}, kCacheLimit / 2);
    return table;
}

}  // namespace

Rational bernoulli(unsigned m) {
    const auto& table = bernoulli_cache();
    if (m < table.size()) return table[m];
    return extend_bernoulli(table, m)[m];
}

mpz_class euler_number(unsigned m) {
    if (m % 2 != 0)
        throw std::domain_error("euler_number: odd Euler numbers are zero by convention; index even ones");
    const unsigned half = m / 2;
    const auto& table = euler_cache();
    if (half < table.size()) return table[half];
    return extend_euler(table, half)[half];
}

mpz_class binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational binomial(const Rational& a, unsigned k) {
    Rational num(1);
    for (unsigned i = 0; i < k; ++i)
        num *= a - Rational(static_cast<long>(i));
    return num / Rational(factorial(k));
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class double_factorial(unsigned n) {
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), n);
    return r;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace eulersum
