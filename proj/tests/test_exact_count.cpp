#include "pinnacle/exact_count.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace pinnacle;

TEST_CASE("powers of two") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(10) == 1024);
    CHECK(to_decimal(pow2(100)) == "1267650600228229401496703205376");
}

TEST_CASE("scale_pow2 shifts both ways and refuses inexact halving") {
    CHECK(scale_pow2(3, 4) == 48);
    CHECK(scale_pow2(48, -4) == 3);
    CHECK(scale_pow2(0, -7) == 0);
    CHECK_THROWS_AS(scale_pow2(6, -2), std::logic_error);
}

TEST_CASE("exact division and factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(exact_divide(factorial(10), factorial(7)) == 720);
    CHECK_THROWS(exact_divide(7, 2));
}

TEST_CASE("decimal round trip") {
    const std::string big = "2056053437771952757776669166927111145600807102338938271866967172893700954435942350990874234585088000";
    CHECK(to_decimal(from_decimal(big)) == big);
    CHECK(from_decimal("-12") == -12);
    CHECK_THROWS_AS(from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(from_decimal("12a"), std::invalid_argument);
}
