#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logprim/harmonic.hpp"
#include "logprim/iterated.hpp"

using namespace logprim;

namespace {

Polynomial poly(std::initializer_list<long> nums, long den = 1) {
    std::vector<Rational> cs;
    for (long v : nums) cs.push_back(make_rational(v, den));
    return Polynomial(std::move(cs));
}

// the four closed forms displayed in the introduction, A-parts as -x A_n(x)
LogPolyExpr golden_f(int n) {
    switch (n) {
        case 1:
            return LogPolyExpr{{{0, poly({0, -1})},
                                {1, Polynomial::one_plus_x_pow(1)}}};
        case 2:
            return LogPolyExpr{{{0, poly({0, -2, -3}, 4)},
                                {1, Polynomial::one_plus_x_pow(2).scaled(
                                        make_rational(1, 2))}}};
        case 3:
            return LogPolyExpr{{{0, poly({0, -6, -15, -11}, 36)},
                                {1, Polynomial::one_plus_x_pow(3).scaled(
                                        make_rational(1, 6))}}};
        default:
            return LogPolyExpr{{{0, poly({0, -12, -42, -52, -25}, 288)},
                                {1, Polynomial::one_plus_x_pow(4).scaled(
                                        make_rational(1, 24))}}};
    }
}

}  // namespace

TEST_CASE("f_oracle base and budget") {
    CHECK(f_oracle(0, 1) == LogPolyExpr::log_power(1));
    CHECK_THROWS_AS(f_oracle(61, 1), BudgetExceeded);
    CHECK_THROWS_AS(f_oracle(1, 9), BudgetExceeded);
}

TEST_CASE("f_oracle reproduces the golden displays") {
    for (int n = 1; n <= 4; ++n) CHECK(f_oracle(n, 1) == golden_f(n));
    // f_{2,2} = x(7x+6)/4 - (3/2)(x+1)^2 u + (1/2)(x+1)^2 u^2
    LogPolyExpr f22 = f_oracle(2, 2);
    CHECK(f22.part(0) == poly({0, 6, 7}, 4));
    CHECK(f22.part(1) == Polynomial::one_plus_x_pow(2).scaled(make_rational(-3, 2)));
    CHECK(f22.part(2) == Polynomial::one_plus_x_pow(2).scaled(make_rational(1, 2)));
    CHECK(f_oracle(3, 1).part(0) == poly({0, -6, -15, -11}, 36));
}

TEST_CASE("a_poly golden values") {
    CHECK(a_poly(1) == poly({1}));
    CHECK(a_poly(2) == poly({2, 3}, 4));
    CHECK(a_poly(4) == poly({12, 42, 52, 25}, 288));
}

TEST_CASE("a_poly_alt golden values") {
    CHECK(a_poly_alt(1) == poly({1}));
    CHECK(a_poly_alt(2) == poly({2, 3}, 4));
}

TEST_CASE("a_rec golden values") {
    CHECK(a_rec(1) == poly({1}));
    CHECK(a_rec(2) == poly({2, 3}, 4));
    CHECK(a_rec(3) == poly({6, 15, 11}, 36));
}

TEST_CASE("triple route agreement up to n=40") {
    for (int n = 1; n <= 40; ++n) {
        Polynomial a = a_poly(n);
        CHECK(a == a_poly_alt(n));
        CHECK(a == a_rec(n));
    }
}

TEST_CASE("a_poly coefficients strictly positive") {
    for (int n = 1; n <= 100; ++n) {
        Polynomial a = a_poly(n);
        CHECK(a.degree() == n - 1);
        for (const auto& c : a.coeffs()) CHECK(c > 0);
    }
}

TEST_CASE("b_poly") {
    CHECK(b_poly(0) == poly({1}));
    CHECK(b_poly(2) == Polynomial::one_plus_x_pow(2).scaled(make_rational(1, 2)));
    for (int n = 1; n <= 20; ++n)
        CHECK(b_poly(n).derivative() == b_poly(n - 1));
}

TEST_CASE("b_coeff") {
    for (int j = 1; j <= 6; ++j)
        for (int n = 0; n <= 8; ++n) {
            Rational inv_fact(1, factorial(n));
            inv_fact.canonicalize();
            CHECK(b_coeff(n, j, j) == inv_fact);
        }
    CHECK(b_coeff(2, 1, 2) == make_rational(-3, 2));
    // b_{2,k,j} geometric formula
    for (int j = 1; j <= 8; ++j)
        for (int k = 1; k <= j; ++k) {
            Rational expected(factorial(j) * (int_pow(Integer(2), j - k + 1) - 1),
                              factorial(k) * int_pow(Integer(2), j - k + 1));
            expected.canonicalize();
            if ((j - k) % 2 == 1) expected = -expected;
            CHECK(b_coeff(2, k, j) == expected);
        }
}

TEST_CASE("b_coeff_rec") {
    for (int j = 1; j <= 4; ++j) CHECK(b_coeff_rec(0, j, j) == 1);
    CHECK(b_coeff_rec(1, 1, 2) == -2);
    CHECK(b_coeff_rec(3, 1, 2) == make_rational(-11, 18));
}

TEST_CASE("b_coeff equals b_coeff_rec") {
    for (int n = 0; n <= 15; ++n)
        for (int j = 1; j <= 8; ++j)
            for (int k = 1; k <= j; ++k)
                CHECK(b_coeff(n, k, j) == b_coeff_rec(n, k, j));
}

TEST_CASE("a_poly_general") {
    CHECK(a_poly_general(1, 2) == poly({0, 2}));
    CHECK(a_poly_general(3, 2) == poly({0, 66, 147, 85}, 108));
    // j = 1 reduces to -x A_n(x)
    for (int n = 1; n <= 15; ++n)
        CHECK(a_poly_general(n, 1) ==
              a_poly(n) * poly({0, -1}));
}

TEST_CASE("c_rec route") {
    CHECK(c_rec(1, 2) == poly({0, 2}));
    CHECK(c_rec(2, 2) == poly({0, 6, 7}, 4));
    for (int n = 1; n <= 12; ++n)
        for (int j = 1; j <= 6; ++j)
            CHECK(c_rec(n, j) == a_poly_general(n, j));
}

TEST_CASE("f_closed") {
    CHECK(f_closed(0, 3).expr == LogPolyExpr::log_power(3));
    CHECK(f_closed(2, 2).expr == f_oracle(2, 2));
    CHECK(f_closed(4, 1).expr == golden_f(4));
}

TEST_CASE("f_closed equals f_oracle on a grid") {
    for (int n = 0; n <= 12; ++n)
        for (int j = 1; j <= 4; ++j)
            CHECK(f_closed(n, j).expr == f_oracle(n, j));
}

TEST_CASE("derivative recurrence f_{n}' = f_{n-1}") {
    for (int n = 1; n <= 10; ++n)
        for (int j = 1; j <= 4; ++j)
            CHECK(derivative_logpoly(f_closed(n, j).expr) ==
                  f_closed(n - 1, j).expr);
}

TEST_CASE("B parts of the oracle are multiples of (1+x)^n") {
    for (int n = 1; n <= 10; ++n)
        for (int j = 1; j <= 4; ++j) {
            LogPolyExpr f = f_oracle(n, j);
            Polynomial opx_n = Polynomial::one_plus_x_pow(n);
            for (int k = 1; k <= j; ++k) {
                Polynomial q = f.part(k).divide_exact(opx_n);
                CHECK(q.degree() <= 0);
                CHECK(q.coeff(0) == b_coeff(n, k, j));
            }
        }
}

TEST_CASE("A-part derivative relation") {
    for (int n = 1; n <= 20; ++n)
        for (int j = 1; j <= 6; ++j) {
            Polynomial lhs = a_poly_general(n, j).derivative();
            Rational c(factorial(j), factorial(n));
            c.canonicalize();
            c *= gen_harmonic(n, j - 1);
            if (j % 2 == 1) c = -c;
            Polynomial rhs = (n >= 2 ? a_poly_general(n - 1, j) : Polynomial()) +
                             Polynomial::one_plus_x_pow(n - 1).scaled(c);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("series_partial") {
    // j=1 term of -x0 sum (-x0)^j/(j(j+1)) at x0 = 1/2 is (1/4)/2 = 1/8;
    // first omitted term is (1/8)/(2*3) = 1/48
    auto [p1, b1] = series_partial(1, make_rational(1, 2), 1);
    CHECK(p1 == make_rational(1, 8));
    CHECK(b1 == make_rational(1, 48));
    auto [p0, b0] = series_partial(3, make_rational(1, 2), 0);
    CHECK(p0 == 0);
    CHECK(b0 > 0);
    CHECK_THROWS_AS(series_partial(2, make_rational(3, 2), 5), std::domain_error);
}

TEST_CASE("identity_check") {
    CHECK(identity_check(1));
    CHECK(identity_check(2));
    for (int n = 1; n <= 50; ++n) CHECK(identity_check(n));
}
