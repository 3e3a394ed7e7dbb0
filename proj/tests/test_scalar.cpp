#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dodgson/scalar.hpp"

using namespace dodgson;

TEST_CASE("integer parsing accepts decimal strings with optional sign") {
    CHECK(parse_int("0") == 0);
    CHECK(parse_int("-17") == -17);
    CHECK(parse_int("+4") == 4);
    CHECK(parse_int("123456789012345678901234567890") ==
          Int("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_int(""), ParseError);
    CHECK_THROWS_AS(parse_int("1.5"), ParseError);
    CHECK_THROWS_AS(parse_int("12a"), ParseError);
    CHECK_THROWS_AS(parse_int(" 12"), ParseError);
    CHECK_THROWS_AS(parse_int("-"), ParseError);
}

TEST_CASE("exact_div divides exactly or reports the failure") {
    CHECK(exact_div(Int(12), Int(-3)) == -4);
    CHECK(exact_div(Int(0), Int(5)) == 0);
    CHECK_THROWS_AS(exact_div(Int(7), Int(0)), ZeroDivisorError);
    CHECK_THROWS_AS(exact_div(Int(7), Int(2)), InternalError);
}

TEST_CASE("scalars canonicalize sign and lowest terms") {
    Scalar a(Int(4), Int(-6));
    CHECK(a.numerator() == -2);
    CHECK(a.denominator() == 3);
    CHECK(a.str() == "-2/3");
    CHECK(Scalar(Int(0), Int(7)).str() == "0");
    CHECK(Scalar(Int(10), Int(5)).str() == "2");
    CHECK_THROWS_AS(Scalar(Int(1), Int(0)), ZeroDivisorError);
}

TEST_CASE("scalar parsing mirrors str") {
    CHECK(Scalar::parse("-2/3").str() == "-2/3");
    CHECK(Scalar::parse("7").str() == "7");
    CHECK(Scalar::parse("4/-6").str() == "-2/3");
    CHECK_THROWS_AS(Scalar::parse("1/0"), ZeroDivisorError);
    CHECK_THROWS_AS(Scalar::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("a/2"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(""), ParseError);
}

TEST_CASE("scalar arithmetic is exact") {
    Scalar half(Int(1), Int(2));
    Scalar third(Int(1), Int(3));
    CHECK((half + third).str() == "5/6");
    CHECK((half - third).str() == "1/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half / third).str() == "3/2");
    CHECK((-half).str() == "-1/2");
    CHECK_THROWS_AS(half / Scalar(0), ZeroDivisorError);

    // 1/3 has no finite binary expansion; 3 * (1/3) must still be exactly 1.
    Scalar sum(0);
    for (int i = 0; i < 3; ++i) sum += third;
    CHECK(sum == Scalar(1));
}

TEST_CASE("scalar predicates") {
    CHECK(Scalar(0).is_zero());
    CHECK(Scalar(5).is_integer());
    CHECK_FALSE(Scalar(Int(1), Int(2)).is_integer());
    CHECK(Scalar(-3).sign() == -1);
    CHECK(Scalar(0).sign() == 0);
    CHECK(Scalar(2).sign() == 1);
    CHECK(Scalar(Int(1), Int(2)) < Scalar(Int(2), Int(3)));
}

TEST_CASE("int_str round trips through parse_int") {
    Int big("-9999999999999999999999999999999999999999");
    CHECK(parse_int(int_str(big)) == big);
}
