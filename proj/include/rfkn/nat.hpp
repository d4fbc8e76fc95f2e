#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace rfkn {

// arbitrary-precision non-negative integer; thresholds reach 10^3157
using Nat = mpz_class;

inline Nat nat_pow(const Nat& base, unsigned long e) {
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Nat nat_powmod(const Nat& base, const Nat& e, const Nat& mod) {
    Nat r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

inline Nat nat_gcd(const Nat& a, const Nat& b) {
    Nat r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline unsigned long nat_to_ulong(const Nat& a) { return mpz_get_ui(a.get_mpz_t()); }

inline size_t nat_bits(const Nat& a) { return mpz_sizeinbase(a.get_mpz_t(), 2); }

enum class primality {
    composite,
    prime,          // proven for this size (fixed-base strong tests + Lucas, < 3.3e24)
    probable_prime, // above the deterministic range; >= 64 rounds, flagged
};

// fixed-base Miller-Rabin (first 13 primes, deterministic below ~3.3e24) plus a
// strong Lucas check; larger inputs get 64 extra pseudo-random bases and come
// back as probable_prime rather than prime.
primality classify_prime(const Nat& n);

inline bool is_prime(const Nat& n) { return classify_prime(n) != primality::composite; }

// if n = b^k for some k >= 2 returns (b, k) with k maximal, else (n, 1)
std::pair<Nat, unsigned> perfect_power(const Nat& n);

// smallest s with p^s = q, or 0 if q is not a power of the prime p
unsigned prime_power_exponent(const Nat& q, const Nat& p);

// writes q = p^s, p prime; fails with not_prime if q is not a prime power
void split_prime_power(const Nat& q, Nat& p, unsigned& s);

} // namespace rfkn
