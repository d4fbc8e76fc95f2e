#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "rfkn/nat.hpp"

namespace rfkn {

struct factor_entry {
    Nat prime;
    unsigned exp = 1;
    bool probable = false; // primality only probabilistic (flagged, huge inputs)
};

struct int_factorization {
    Nat value = 1;
    std::vector<factor_entry> factors; // primes strictly increasing
    Nat cofactor = 1;                  // 1 means complete
    Nat cofactor_floor = 1;            // cofactor has no prime below this bound

    bool complete() const { return cofactor == 1; }
    size_t omega() const { return factors.size(); }
    // how many distinct primes the cofactor can still hide
    unsigned hidden_prime_cap() const;
    void check() const; // product and ordering sanity
};

struct factor_budget {
    uint64_t trial_bound = 1000000;  // trial division limit
    uint64_t rho_iterations = 1 << 22; // Brent cycle budget per composite
};

// complete whenever trial division + Brent rho within budget suffice;
// otherwise the unsplit part stays in cofactor (never throws)
int_factorization factorize(const Nat& n, const factor_budget& budget = {});

// bundled table of pre-factored integers (one per line, `N = p1^e1 * p2 * ...`,
// residual cofactors marked `C?`); verified entry-by-entry at load time
class factor_table {
  public:
    static factor_table load(const std::string& path);
    static const factor_table* bundled(); // RFKN_FACTOR_TABLE or the data/ default

    const int_factorization* lookup(const Nat& value) const;
    size_t size() const { return entries_.size(); }
    Nat residual_floor() const { return residual_floor_; }

  private:
    std::map<Nat, int_factorization> entries_;
    Nat residual_floor_ = 1;
};

// q^n - 1 split as prod over d | n of the cyclotomic values Phi_d(q); when q is
// a prime power p^s the split is refined to Phi_e(p) over e | sn. each piece is
// factored (table lookup first), results merged. incompleteness stays encoded.
int_factorization factorize_qn_minus_1(const Nat& q, unsigned n,
                                       const factor_table* table = factor_table::bundled(),
                                       const factor_budget& budget = {});

// integer value of the d-th cyclotomic polynomial at q
Nat cyclotomic_value(unsigned d, const Nat& q);

Nat euler_phi(const int_factorization& f); // throws incomplete_factorization

Nat w_int(const int_factorization& f); // 2^omega; throws incomplete_factorization

// [lower, upper] bounds on W(value) that stay valid when the cofactor hides
// up to hidden_prime_cap() extra primes
std::pair<Nat, Nat> w_int_bounds(const int_factorization& f);

std::string format_factorization(const int_factorization& f);

// process-wide cache: factorizations of values above the remember threshold are
// kept in memory and mirrored to $RFKN_CACHE/factorizations.txt when set
void cache_store(const int_factorization& f);
std::optional<int_factorization> cache_lookup(const Nat& value);

} // namespace rfkn
