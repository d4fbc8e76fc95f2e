#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include "rfkn/elemprops.hpp"

namespace rfkn {

enum class search_strategy {
    exhaustive,    // walk the whole field in index order (small fields)
    random_direct, // gamma^{r j} for primitive gamma, gcd(j, (q^n-1)/r) = 1; test k
    random_pair,   // f(sigma)(beta) for normal beta (k-normal by construction); test order
};

const char* strategy_name(search_strategy s);

// everything needed to re-check the element without trusting the producer:
// the field model (both moduli), the element, and an order/normality certificate
struct witness_record {
    Nat p;
    unsigned s = 1, n = 1;
    Nat r;
    unsigned k = 0;
    std::vector<fp_t> base_modulus;
    polyq ext_modulus;
    gfe element;
    Nat order;                    // claimed: (q^n - 1) / r
    std::vector<Nat> order_primes; // primes p | order with element^{order/p} != 1
    unsigned gcd_degree = 0;      // claimed deg gcd(x^n-1, g_alpha) = k
    std::string strategy;
    uint64_t seed = 0;
    uint64_t candidate_index = 0; // which candidate in the seeded stream hit
};

struct search_budget {
    uint64_t max_candidates = 10000000;
};

// deterministic for (seed, strategy): candidate i is a pure function of the
// seed and i, and the smallest hitting index is returned
std::optional<witness_record> search_witness(const Nat& p, unsigned s, unsigned n,
                                             const Nat& r, unsigned k,
                                             search_strategy strategy, uint64_t seed,
                                             const search_budget& budget = {},
                                             const factor_table* table = factor_table::bundled());

// re-runs every certificate check from the record alone
bool verify_witness(const witness_record& w, std::string* why = nullptr,
                    const factor_table* table = factor_table::bundled());

std::string witness_to_json(const witness_record& w);
witness_record witness_from_json(const std::string& text);

} // namespace rfkn
