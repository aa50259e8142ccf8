#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eulersum/numbers.hpp"
#include "eulersum/pipoly.hpp"
#include "eulersum/rational.hpp"

using namespace eulersum;

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).denominator() == 2);  // sign lives in the numerator
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK((Rational(1) / Rational(3)).str() == "1/3");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational::pow2(5) == Rational(32));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    // the defining recurrence: sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1
    for (unsigned m = 1; m <= 40; ++m) {
        Rational acc;
        for (unsigned k = 0; k <= m; ++k)
            acc += Rational(binomial(m + 1, k)) * bernoulli(k);
        CHECK(acc == Rational(0));
    }
    // past the eager cache; denominator by the prime pattern 2*3*7*23*67
    CHECK(bernoulli(66).denominator() == 64722);
}

TEST_CASE("euler numbers") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(6) == -61);
    CHECK(euler_number(8) == 1385);
    CHECK_THROWS_AS(euler_number(3), std::domain_error);
    CHECK_THROWS_AS(euler_number(1), std::domain_error);
    for (unsigned m = 2; m <= 40; m += 2) {
        mpz_class acc = 0;
        for (unsigned k = 0; k <= m / 2; ++k)
            acc += binomial(m, 2 * k) * euler_number(2 * k);
        CHECK(acc == 0);
    }
}

TEST_CASE("binomials and factorials") {
    CHECK(binomial(9, 3) == 84);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1L) == 0);
    CHECK(binomial(Rational(-3, 2), 0) == Rational(1));
    CHECK(binomial(Rational(-3, 2), 1) == Rational(-3, 2));
    CHECK(binomial(Rational(-3, 2), 2) == Rational(15, 8));
    CHECK(binomial(Rational(-1), 3) == Rational(-1));
    CHECK(binomial(Rational(0), 3) == Rational(0));
    CHECK(factorial(7) == 5040);
    CHECK(double_factorial(9) == 945);
    CHECK(floor_div(-1, 2) == -1);
    CHECK(floor_div(-4, 2) == -2);
    CHECK(floor_div(3, 2) == 1);
    CHECK(parity_sign(-1) == -1);
    CHECK(parity_sign(-2) == 1);
}

TEST_CASE("zeta at even arguments") {
    CHECK(zeta_even(0) == PiPoly::constant(Rational(-1, 2)));
    CHECK(zeta_even(2) == PiPoly::monomial(2, Rational(1, 6)));
    CHECK(zeta_even(4) == PiPoly::monomial(4, Rational(1, 90)));
    CHECK(zeta_even(6) == PiPoly::monomial(6, Rational(1, 945)));
    CHECK(zeta_bar_even(0) == PiPoly::constant(Rational(-1, 2)));
    CHECK(zeta_bar_even(2) == PiPoly::monomial(2, Rational(-1, 12)));
    CHECK(zeta_bar_even(4) == PiPoly::monomial(4, Rational(-7, 720)));
    for (unsigned m = 1; m <= 20; ++m) {
        Rational factor = Rational::pow2(1 - 2L * m) - Rational(1);
        CHECK(zeta_bar_even(2 * m) == zeta_even(2 * m).scaled(factor));
    }
    CHECK_THROWS_AS(zeta_even(3), std::invalid_argument);
}

TEST_CASE("pipoly arithmetic") {
    PiPoly a = PiPoly::monomial(2, Rational(1, 6));
    PiPoly b = PiPoly::monomial(2, Rational(-1, 12));
    CHECK(a + b == PiPoly::monomial(2, Rational(1, 12)));
    CHECK(a * PiPoly::monomial(4, Rational(1, 90)) == PiPoly::monomial(6, Rational(1, 540)));
    CHECK(a.scaled(Rational(0)).is_zero());
    CHECK((a - a).is_zero());
    CHECK((-a) + a == PiPoly());
    CHECK_THROWS_AS(PiPoly::monomial(3, Rational(1)), std::logic_error);
}

TEST_CASE("pipoly ring laws on random operands") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<unsigned> expo(0, 3);
    auto random_pipoly = [&] {
        PiPoly p;
        for (int t = 0; t < 3; ++t)
            p += PiPoly::monomial(2 * expo(rng), Rational(num(rng), den(rng)));
        return p;
    };
    for (int rep = 0; rep < 50; ++rep) {
        PiPoly a = random_pipoly(), b = random_pipoly(), c = random_pipoly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("pipoly float evaluation") {
    const double pi = std::numbers::pi;
    CHECK(PiPoly().to_double() == 0.0);
    CHECK(zeta_bar_even(2).to_double() == doctest::Approx(-0.822467033424).epsilon(1e-9));
    CHECK(PiPoly::monomial(6, Rational(1, 10080)).to_double() ==
          doctest::Approx(std::pow(pi, 6) / 10080).epsilon(1e-12));
}

TEST_CASE("pipoly json encoding") {
    CHECK(PiPoly().to_json() == R"({"terms":[]})");
    CHECK(zeta_bar_even(4).to_json() == R"({"terms":[{"den":"720","num":"-7","pi_exp":4}]})");
    PiPoly two_terms = PiPoly::constant(Rational(-1, 2)) + PiPoly::monomial(4, Rational(3));
    CHECK(two_terms.to_json() ==
          R"({"terms":[{"den":"2","num":"-1","pi_exp":0},{"den":"1","num":"3","pi_exp":4}]})");
    // big integers stay exact decimal strings
    PiPoly big = PiPoly::monomial(2, bernoulli(50));
    CHECK(big.to_json() ==
          R"({"terms":[{"den":"66","num":"495057205241079648212477525","pi_exp":2}]})");
}
