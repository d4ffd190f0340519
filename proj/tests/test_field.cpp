#include <doctest.h>

#include "cohoc/field.hpp"

using namespace cohoc;

TEST_CASE("prime detection") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK(is_prime(4294967291u)); // largest prime below 2^32
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91)); // 7 * 13
}

TEST_CASE("construction rejects non-prime characteristics") {
    CHECK_NOTHROW(Field(2));
    CHECK_NOTHROW(Field(13));
    CHECK_THROWS_AS(Field(0), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field(1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field(6), NonPrimeCharacteristic);
}

TEST_CASE("arithmetic mod 2") {
    Field F(2);
    CHECK(F.add(1, 1) == 0);
    CHECK(F.sub(0, 1) == 1);
    CHECK(F.mul(1, 1) == 1);
    CHECK(F.neg(1) == 1);
    CHECK(F.inv(1) == 1);
}

TEST_CASE("arithmetic mod 13") {
    Field F(13);
    CHECK(F.add(7, 8) == 2);
    CHECK(F.sub(3, 5) == 11);
    CHECK(F.neg(0) == 0);
    CHECK(F.neg(4) == 9);
    CHECK(F.mul(6, 11) == 66 % 13);
    for (uint32_t a = 1; a < 13; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS_AS(F.inv(0), Error);
}

TEST_CASE("reduce maps arbitrary signed integers into the field") {
    Field F(7);
    CHECK(F.reduce(0) == 0);
    CHECK(F.reduce(7) == 0);
    CHECK(F.reduce(15) == 1);
    CHECK(F.reduce(-1) == 6);
    CHECK(F.reduce(-14) == 0);
}

TEST_CASE("products near the modulus do not overflow") {
    Field F(4294967291u);
    uint32_t a = 4294967290u; // -1 mod p
    CHECK(F.mul(a, a) == 1);
    CHECK(F.mul(a, F.inv(a)) == 1);
}
