#pragma once

#include <cstdint>
#include <optional>
#include "rfkn/cyclopoly.hpp"
#include "rfkn/factorization.hpp"
#include "rfkn/gfield.hpp"

namespace rfkn {

using gfe = Tower::gfe;
using polye = std::vector<gfe>; // polynomial over F_{q^n}

// exact multiplicative order, dividing out primes of q^n - 1
Nat mult_order(const Tower& T, const gfe& a, const int_factorization& factQ);

// r with ord(a) = (q^n - 1) / r
Nat r_index(const Tower& T, const gfe& a, const int_factorization& factQ);

// g_a(x) = sum_{i=0}^{n-1} a^{q^i} x^{n-1-i}, a polynomial over F_{q^n}
polye g_alpha(const Tower& T, const gfe& a);

// k = deg gcd(x^n - 1, g_a); 0 is "normal". a = 0 gives n by convention.
unsigned normality_k(const Tower& T, const gfe& a);

// module action f(sigma)(a) = sum f_i a^{q^i}
gfe apply_poly(const Tower& T, const polyq& f, const gfe& a);

// minimal monic h | x^n - 1 with h(sigma)(a) = 0, by stripping irreducible
// factors off x^n - 1 while annihilation persists
polyq fq_order(const Tower& T, const xn1_factorization& fx, const gfe& a);

// fast form: gcd(m, (q^n-1)/ord(a)) = 1
bool is_m_free(const Tower& T, const gfe& a, const Nat& m, const int_factorization& factQ);
// definitional oracle: no beta and 1 != d | m with a = beta^d (enumerates the field)
bool is_m_free_oracle(const Tower& T, const gfe& a, const Nat& m, const int_factorization& factQ);

// fast form: gcd(g, (x^n-1)/Ord(a)) = 1
bool is_g_free(const Tower& T, const xn1_factorization& fx, const gfe& a, const polyq& g);
// definitional oracle: no beta and monic 1 != h | g with a = h(sigma)(beta)
bool is_g_free_oracle(const Tower& T, const xn1_factorization& fx, const gfe& a, const polyq& g);

// seeded random search; accepts when a^{(q^n-1)/p} != 1 for every prime p | q^n-1
gfe find_primitive(const Tower& T, const int_factorization& factQ, uint64_t seed);

// seeded random search; accepts when normality_k = 0
gfe find_normal(const Tower& T, uint64_t seed);

// f(sigma)(beta) for normal beta is (deg f)-normal
gfe construct_k_normal(const Tower& T, const gfe& beta, const polyq& f);

// beta^r for primitive beta is r-primitive
gfe construct_r_primitive(const Tower& T, const gfe& beta, const Nat& r, const int_factorization& factQ);

inline constexpr uint64_t exhaustive_field_bound = 100000;

// N_{r,f}(m, g): pairs (alpha, beta), alpha m-free, beta g-free, alpha^r = f(sigma)(beta).
// brute force over the whole field; refuses when q^n exceeds the bound.
Nat count_pairs(const Tower& T, const xn1_factorization& fx, const int_factorization& factQ,
                const Nat& r, const polyq& f, const Nat& m, const polyq& g,
                uint64_t bound = exhaustive_field_bound);

} // namespace rfkn
