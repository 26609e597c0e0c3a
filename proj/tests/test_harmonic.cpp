#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logprim/harmonic.hpp"

using namespace logprim;

TEST_CASE("harmonic") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(2) == make_rational(3, 2));
    // exact summation oracle
    Rational s = 0;
    for (int i = 1; i <= 4; ++i) s += make_rational(1, i);
    CHECK(harmonic(4) == s);
    CHECK(harmonic(4) == make_rational(25, 12));
}

TEST_CASE("gen_harmonic base cases and small values") {
    CHECK(gen_harmonic(0, 3) == 0);
    CHECK(gen_harmonic(5, 0) == 1);
    // enumerate nondecreasing pairs from {1,2,3}:
    // (1,1),(1,2),(1,3),(2,2),(2,3),(3,3)
    Rational s = make_rational(1, 1) + make_rational(1, 2) +
                 make_rational(1, 3) + make_rational(1, 4) +
                 make_rational(1, 6) + make_rational(1, 9);
    CHECK(gen_harmonic(3, 2) == s);
    CHECK(gen_harmonic(3, 2) == make_rational(85, 36));
}

TEST_CASE("H_{2,m} geometric closed form") {
    for (int m = 0; m <= 40; ++m) {
        Rational expected(int_pow(Integer(2), m + 1) - 1,
                          int_pow(Integer(2), m));
        expected.canonicalize();
        CHECK(gen_harmonic(2, m) == expected);
    }
}

TEST_CASE("gen_harmonic_alt") {
    for (int m = 0; m <= 5; ++m) CHECK(gen_harmonic_alt(1, m) == 1);
    CHECK(gen_harmonic_alt(3, 2) ==
          make_rational(3) - make_rational(3, 4) + make_rational(1, 9));
    CHECK(gen_harmonic_alt(3, 2) == make_rational(85, 36));
    CHECK(gen_harmonic_alt(3, 0) == 1);
    CHECK_THROWS_AS(gen_harmonic_alt(0, 2), std::invalid_argument);
}

TEST_CASE("recurrence route equals alternating-sum route") {
    for (int n = 1; n <= 30; ++n)
        for (int m = 0; m <= 30; ++m)
            CHECK(gen_harmonic(n, m) == gen_harmonic_alt(n, m));
}

TEST_CASE("gen_harmonic_enum") {
    CHECK(gen_harmonic_enum(2, 2) == make_rational(7, 4));
    CHECK(gen_harmonic_enum(1, 5) == 1);
    CHECK(gen_harmonic_enum(3, 1) == harmonic(3));
    CHECK_THROWS_AS(gen_harmonic_enum(100, 50), std::length_error);
}

TEST_CASE("recurrence route equals definitional enumeration") {
    for (int n = 1; n <= 9; ++n)
        for (int m = 0; m <= 6; ++m)
            CHECK(gen_harmonic(n, m) == gen_harmonic_enum(n, m));
}

TEST_CASE("gen_harmonic(n,1) is harmonic(n)") {
    for (int n = 0; n <= 500; ++n) CHECK(gen_harmonic(n, 1) == harmonic(n));
}
