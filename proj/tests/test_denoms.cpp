#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "logprim/denoms.hpp"
#include "logprim/iterated.hpp"
#include "logprim/numtheory.hpp"

using namespace logprim;

TEST_CASE("poly_denominator") {
    CHECK(poly_denominator(a_poly(2)) == 4);
    CHECK(poly_denominator(Polynomial({Rational(3), Rational(7)})) == 1);
    CHECK(poly_denominator(Polynomial()) == 1);
    CHECK(poly_denominator(a_poly(6)) == 43200);
}

TEST_CASE("alpha_closed matches the introduction's list") {
    std::vector<long> alphas{1, 1, 4, 36, 288, 7200, 43200, 2116800, 33868800};
    // alpha_0 = 1 by convention; closed form from n = 1 on
    for (int n = 1; n <= 8; ++n) CHECK(alpha_closed(n) == alphas[n]);
}

TEST_CASE("beta values") {
    CHECK(beta(2) == 2);
    CHECK(beta(6) == 1);
    CHECK(beta(9) == 3);
    std::vector<long> betas{1, 2, 3, 2, 5, 1, 7, 2, 3, 1, 11, 1, 13};
    for (int n = 2; n <= 13; ++n) CHECK(beta(n) == betas[n - 1]);
}

TEST_CASE("denominator theorem at desk scale") {
    for (int n = 1; n <= 60; ++n) {
        DenominatorReport r = denominator_report(n);
        CHECK(r.match);
        CHECK(r.alpha_measured == alpha_closed(n));
        if (n >= 2) CHECK(r.beta == r.mangoldt);
    }
}

TEST_CASE("scaled denominator is exactly lcm(1..n)") {
    // two-sided claim: denominator of n! A_n is lcm(1..n), no more, no less
    for (int n = 1; n <= 60; ++n) {
        Polynomial scaled = a_poly(n).scaled(Rational(factorial(n)));
        CHECK(poly_denominator(scaled) == lcm_range(n));
    }
}

TEST_CASE("lemma32_check") {
    // C(4,4)(H_4 - H_0) = 25/12, nu_2 = -2
    CHECK(lemma32_check(4, 2, 2));
    CHECK(lemma32_check(8, 2, 3));   // n = p^k boundary case
    CHECK(lemma32_check(27, 3, 3));
    CHECK_THROWS_AS(lemma32_check(3, 2, 2), std::invalid_argument);
    for (int n = 1; n <= 100; ++n)
        for (const auto& pp : prime_powers_up_to(n))
            CHECK(lemma32_check(n, pp.p, (int)pp.k));
}

TEST_CASE("cor58_check") {
    CHECK(cor58_check(5, 5, 5));   // denominator 5!
    CHECK(cor58_check(2, 1, 2));   // b = -3/2
    for (int n = 0; n <= 20; ++n)
        for (int j = 1; j <= 20; ++j)
            for (int k = 1; k <= j; ++k)
                CHECK(cor58_check(n, k, j));
}

TEST_CASE("report serialization") {
    DenominatorReport r = denominator_report(4);
    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["n"] == 4);
    CHECK(j["alpha_measured"] == "288");
    CHECK(j["beta"] == "2");
    CHECK(j["match"] == true);
    CHECK(r.to_csv_row() == "4,288,288,2,2,true");
    CHECK(DenominatorReport::csv_header() ==
          "n,alpha_measured,alpha_closed,beta,mangoldt,match");
}
