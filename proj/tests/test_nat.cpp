#include <doctest.h>
#include "rfkn/error.hpp"
#include "rfkn/nat.hpp"

using namespace rfkn;

TEST_CASE("primality classification") {
    CHECK(classify_prime(2) == primality::prime);
    CHECK(classify_prime(3) == primality::prime);
    CHECK(classify_prime(97) == primality::prime);
    CHECK(classify_prime(0) == primality::composite);
    CHECK(classify_prime(1) == primality::composite);
    CHECK(classify_prime(561) == primality::composite);  // Carmichael
    CHECK(classify_prime(25326001) == primality::composite);
    Nat m61 = (Nat(1) << 61) - 1;
    CHECK(classify_prime(m61) == primality::prime);
    Nat m127 = (Nat(1) << 127) - 1; // above the deterministic range
    CHECK(classify_prime(m127) == primality::probable_prime);
    CHECK(is_prime(m127));
    CHECK(classify_prime(m127 - 2) == primality::composite);
}

TEST_CASE("perfect powers") {
    auto [b1, k1] = perfect_power(1024);
    CHECK(b1 == 2);
    CHECK(k1 == 10);
    auto [b2, k2] = perfect_power(36);
    CHECK(b2 == 6);
    CHECK(k2 == 2);
    auto [b3, k3] = perfect_power(216);
    CHECK(b3 == 6);
    CHECK(k3 == 3);
    auto [b4, k4] = perfect_power(37);
    CHECK(b4 == 37);
    CHECK(k4 == 1);
}

TEST_CASE("prime power splitting") {
    Nat p;
    unsigned s = 0;
    split_prime_power(121, p, s);
    CHECK(p == 11);
    CHECK(s == 2);
    split_prime_power(128, p, s);
    CHECK(p == 2);
    CHECK(s == 7);
    split_prime_power(13, p, s);
    CHECK(p == 13);
    CHECK(s == 1);
    CHECK_THROWS_AS(split_prime_power(12, p, s), error);
    CHECK_THROWS_AS(split_prime_power(1, p, s), error);

    CHECK(prime_power_exponent(243, 3) == 5);
    CHECK(prime_power_exponent(8, 2) == 3);
    CHECK(prime_power_exponent(10, 2) == 0);
    CHECK(prime_power_exponent(7, 7) == 1);
}

TEST_CASE("nat helpers") {
    CHECK(nat_pow(3, 5) == 243);
    CHECK(nat_pow(2, 0) == 1);
    CHECK(nat_powmod(2, 10, 1000) == 24);
    CHECK(nat_gcd(12, 18) == 6);
    CHECK(nat_bits(Nat(255)) == 8);
    CHECK(nat_bits(Nat(256)) == 9);
}
