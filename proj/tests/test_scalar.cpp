#include "doctest.h"

#include "pforge/scalar.hpp"

using namespace pforge;

TEST_CASE("rational arithmetic is exact and reduced") {
    FieldSpec q{0};
    Scalar half = Scalar::parse("1/2", q);
    Scalar third = Scalar::parse("1/3", q);
    CHECK((half + third).to_string() == "5/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half - half).is_zero());
    CHECK((-half).to_string() == "-1/2");
    CHECK(half.inv().to_string() == "2");
}

TEST_CASE("scalar parsing is canonical") {
    FieldSpec q{0};
    CHECK(Scalar::parse("-7/3", q).to_string() == "-7/3");
    CHECK(Scalar::parse("0", q).is_zero());
    CHECK_THROWS_AS(Scalar::parse("2/4", q), error);   // not reduced
    CHECK_THROWS_AS(Scalar::parse("3/1", q), error);   // denominator 1 spelled
    CHECK_THROWS_AS(Scalar::parse("1.5", q), error);   // decimals rejected
    CHECK_THROWS_AS(Scalar::parse("", q), error);

    FieldSpec f5{5};
    CHECK(Scalar::parse("4", f5).residue_value() == 4);
    CHECK_THROWS_AS(Scalar::parse("5", f5), error);    // out of range
    CHECK_THROWS_AS(Scalar::parse("-1", f5), error);
    CHECK_THROWS_AS(Scalar::parse("1/2", f5), error);
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f7{7};
    Scalar a = Scalar::residue(7, 3);
    Scalar b = Scalar::residue(7, 5);
    CHECK((a + b).residue_value() == 1);
    CHECK((a * b).residue_value() == 1);
    CHECK((a - b).residue_value() == 5);
    CHECK((a.inv() * a) == Scalar::one(f7));
    CHECK(Scalar::from_int(-1, f7).residue_value() == 6);
}

TEST_CASE("only the supported enumeration primes are accepted") {
    for (long p : {2L, 3L, 5L, 7L}) CHECK(require_supported_prime(p) == p);
    CHECK_THROWS_AS(require_supported_prime(4), error);
    CHECK_THROWS_AS(require_supported_prime(11), error);
}

TEST_CASE("mixed-field operations are rejected") {
    Scalar q = Scalar::one(FieldSpec{0});
    Scalar f = Scalar::one(FieldSpec{3});
    CHECK_THROWS_AS((void)(q + f), error);
}
