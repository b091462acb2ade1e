#include <catch2/catch_amalgamated.hpp>

#include "mop/scalar.hpp"

using namespace mop;

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(parse_rat("5/2"), 0) == 1);     // empty product
    CHECK(pochhammer(Rat(-2), 3) == 0);              // (-m)_n = 0 for m < n
    CHECK(pochhammer(parse_rat("1/2"), 3) == parse_rat("15/8"));
    CHECK(pochhammer(Rat(-3), 3) == Rat(-6));        // (-3)(-2)(-1)
    CHECK_THROWS_AS(pochhammer(Rat(1), -1), usage_error);
}

TEST_CASE("pochhammer splitting property (exhaustive small sweep)") {
    const std::vector<Rat> xs{Rat(0), Rat(1), Rat(-3), parse_rat("1/2"), parse_rat("-7/3"), parse_rat("22/5")};
    for (const auto& x : xs)
        for (long m = 0; m <= 20; ++m)
            for (long n = 0; n <= 20; n += (n < 4 ? 1 : 5)) {
                CAPTURE(x, m, n);
                REQUIRE(pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(Rat(x + m), n));
            }
}

TEST_CASE("gamma_ratio") {
    CHECK(gamma_ratio(parse_rat("7/3"), 0) == 1);
    CHECK(gamma_ratio(Rat(2), 3) == 24);
    CHECK(gamma_ratio(parse_rat("5/2"), -2) == parse_rat("4/3"));
    CHECK_THROWS_AS(gamma_ratio(Rat(2), -3), pole_error);  // hits Gamma pole at 0

    // gamma_ratio(x, n) * gamma_ratio(x+n, -n) = 1 whenever both are defined
    for (const auto& x : {parse_rat("1/2"), parse_rat("9/4"), parse_rat("-5/3")})
        for (long n = -6; n <= 6; ++n) {
            CAPTURE(x, n);
            REQUIRE(gamma_ratio(x, n) * gamma_ratio(Rat(x + n), -n) == 1);
        }
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK_THROWS_AS(factorial(-1), usage_error);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 4) == 1);
    CHECK_THROWS_AS(binomial(3, 4), usage_error);
}

TEST_CASE("rational literals") {
    CHECK(parse_rat("3/9") == parse_rat("1/3"));  // canonical form
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("1/3").str() == "1/3");
    CHECK(parse_rat("-2/4").str() == "-1/2");
    CHECK_THROWS_AS(parse_rat(""), usage_error);
    CHECK_THROWS_AS(parse_rat("1/0"), usage_error);
    CHECK_THROWS_AS(parse_rat("a/b"), usage_error);
    CHECK_THROWS_AS(parse_rat("1.5"), usage_error);
    CHECK(denominator(parse_rat("-6/8")) == 4);  // positive denominator invariant
}

TEST_CASE("precision context") {
    CHECK_THROWS_AS(set_precision_bits(32), usage_error);
    precision_guard guard(128);
    CHECK(precision_bits() == 128);
    const Real x = to_real(parse_rat("1/3"));
    CHECK(mpfr_get_prec(x.backend().data()) >= 128);
    {
        precision_guard inner(256);
        CHECK(precision_bits() == 256);
    }
    CHECK(precision_bits() == 128);
}

TEST_CASE("ipow") {
    CHECK(ipow(parse_rat("2/3"), 3) == parse_rat("8/27"));
    CHECK(ipow(parse_rat("2/3"), -2) == parse_rat("9/4"));
    CHECK(ipow(Rat(5), 0) == 1);
    CHECK_THROWS_AS(ipow(Rat(0), -1), pole_error);
}
