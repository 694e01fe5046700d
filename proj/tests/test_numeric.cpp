#include "donsw/numeric.hpp"

#include "donsw/errors.hpp"

#include <doctest.h>

using namespace donsw;

TEST_SUITE("numeric") {

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(multinomial({1, 1, 1}) == 6);
    CHECK(multinomial({2, 1}) == 3);
    CHECK(multinomial({}) == 1);
}

TEST_CASE("powers of two with negative exponents") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(5) == 32);
    CHECK(pow2(-3) == Rat(1, 8));
    CHECK(rat_pow(Rat(-2, 3), 3) == Rat(-8, 27));
    CHECK(rat_pow(Rat(7), 0) == 1);
}

TEST_CASE("parity and halving") {
    CHECK(parity(Int(-3)) == 1);
    CHECK(parity(Int(-4)) == 0);
    CHECK(parity(Int(0)) == 0);
    CHECK(half(Int(-6)) == -3);
    CHECK_THROWS_AS(half(Int(5)), precondition_error);
}

TEST_CASE("rational strings") {
    CHECK(rat_string(Rat(3, 2)) == "3/2");
    CHECK(rat_string(Rat(-4, 8)) == "-1/2");
    CHECK(rat_string(Rat(5)) == "5/1");
    CHECK(parse_rat("3/2") == Rat(3, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("4/-6") == Rat(-2, 3));
    CHECK_THROWS_AS(parse_rat("1/0"), input_error);
    CHECK_THROWS_AS(parse_rat("abc"), input_error);
}

TEST_CASE("make_rat canonicalizes") {
    CHECK(make_rat(Int(-4), Int(-8)) == Rat(1, 2));
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), invariant_error);
}

TEST_CASE("mix64 is deterministic") {
    CHECK(mix64(42) == mix64(42));
    CHECK(mix64(42) != mix64(43));
}

}  // TEST_SUITE
