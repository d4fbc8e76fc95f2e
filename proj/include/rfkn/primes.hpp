#pragma once

#include <cstdint>
#include <vector>
#include "rfkn/bigreal.hpp"
#include "rfkn/nat.hpp"

namespace rfkn {

// ordinary sieve of Eratosthenes; bound is capped (window_too_large beyond it)
inline constexpr uint64_t sieve_capacity = uint64_t(1) << 26;

std::vector<uint64_t> primes_below(uint64_t bound);

struct prime_window {
    std::vector<uint64_t> primes; // strictly inside (2^t, 2^{t+u})
    uint64_t v = 0;               // count
};

// t, u as exact rationals so the open-interval endpoints are unambiguous
prime_window primes_in_window(const mpq_class& t, const mpq_class& u);

// sum of 1/p at the given precision
BigReal inv_sum(const std::vector<uint64_t>& primes, mpfr_prec_t prec = BigReal::default_precision());

// prod over primes P < 2^t of 2 / P^(1/(t+u)), evaluated as
// 2^count / (prod P)^(1/(t+u)) with the product taken exactly first
BigReal a_constant(const mpq_class& t, const mpq_class& u, mpfr_prec_t prec = BigReal::default_precision());

struct residue7_primes {
    std::vector<uint64_t> primes;     // ascending, p = 1 (mod 7)
    std::vector<mpq_class> inv_sums;  // inv_sums[i] = sum of 1/p over first i+1
    std::vector<Nat> products;        // products[i] = product of first i+1
};

residue7_primes primes_1_mod_7(size_t count);

// largest v with product of the first v primes (1 mod 7) <= bound
size_t largest_v_below(const residue7_primes& ps, const Nat& bound);
size_t largest_v_below(const residue7_primes& ps, const BigReal& bound);

} // namespace rfkn
