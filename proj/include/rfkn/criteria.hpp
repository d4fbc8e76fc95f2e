#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>
#include "rfkn/bigreal.hpp"
#include "rfkn/cyclopoly.hpp"
#include "rfkn/factorization.hpp"

namespace rfkn {

enum class criterion { direct, sieve, caseall, tu, cota, n7 };
enum class verdict {
    exists,                      // sufficient condition met (existence proven)
    inconclusive,                // condition not met; says nothing
    not_applicable,              // a precondition of this criterion fails
    indeterminate_factorization, // verdict depends on unfactored cofactor
    boundary,                    // comparison unstable at maximum precision
};

const char* criterion_name(criterion c);
const char* verdict_name(verdict v);

struct problem_instance {
    Nat q;      // p^s
    Nat p;
    unsigned s = 1;
    unsigned n = 1;
    Nat r;
    unsigned k = 0;
    int_factorization factQ; // q^n - 1
    xn1_profile xprof;
    fprofile f;              // chosen degree-k divisor (degree-level)
};

// validates r | q^n-1, 0 <= k <= n-1, and that a degree-k divisor exists
problem_instance make_instance(const Nat& p, unsigned s, unsigned n, const Nat& r, unsigned k,
                               const factor_table* table = factor_table::bundled());

struct criterion_report {
    criterion which = criterion::direct;
    verdict verd = verdict::inconclusive;
    std::string lhs, rhs; // decimal renderings of the compared quantities
    mpfr_prec_t precision_bits = 0;
    bool factorization_complete = true;
    std::string note;
    std::map<std::string, std::string> details; // W values, delta, Delta, thresholds...
};

// q^{n/2-k} >= r W(q^n-1) W((x^n-1)/f); evaluated exactly (squared integers)
criterion_report check_direct(const problem_instance& inst);

// explicit sieve parameters: which primes of q^n-1 are sieved out of ell and
// which irreducible factors of x^n-1 make up g (flag per profile entry)
struct sieve_spec {
    std::vector<size_t> sieved_prime_idx; // indices into factQ.factors
    std::vector<bool> g_contains;         // per xprof.degrees entry
};

// q^{n/2-k} >= r W(ell) W(gcd(g,(x^n-1)/f)) Delta with
// delta = 1 - sum 1/p_i - sum 1/q^{deg P_i} > 0,
// delta' = 1 - sum_{i>s'} 1/q^{deg P_i}, Delta = 2 + (v+s'-delta')/delta.
// the parameter-free overload searches: g = all irreducibles fully inside f,
// then moves the largest primes out of ell one by one while delta > 0,
// keeping the best margin.
criterion_report check_sieve(const problem_instance& inst, const sieve_spec& spec);
criterion_report check_sieve(const problem_instance& inst);

// q^{n/2-k} >= r (n-k+2) W(q^n-1), needing k < n/2 and (n-k)^2 <= q
criterion_report check_caseall(const problem_instance& inst);

struct tu_values {
    uint64_t v = 0;        // primes strictly between 2^t and 2^{t+u}
    BigReal S;             // sum of their inverses
    BigReal A;             // a_constant(t, u)
    BigReal delta, Delta;
    BigReal threshold;     // (r Delta A)^{2(t+u)/((t+u)(n-2k)-2n)}
};

// threshold machinery shared by check_tu and the survey code; throws
// precondition_failed when t+u <= 2n/(n-2k) or delta <= 0
tu_values threshold_tu(unsigned n, unsigned k, const Nat& r, const mpq_class& t, const mpq_class& u,
                       mpfr_prec_t prec = BigReal::default_precision());

struct cota_values {
    BigReal U, V;      // thresholds from the 2^{n-k} bound and the (n-k+2) bound
    BigReal threshold; // min(U, max((n-k)^2, V))
};

cota_values threshold_cota(unsigned n, unsigned k, const Nat& r, const mpq_class& t,
                           mpfr_prec_t prec = BigReal::default_precision());

// q >= threshold_tu(...); pre: k < n/2, (n-k)^2 <= q, degree-k divisor exists
criterion_report check_tu(const problem_instance& inst, const mpq_class& t, const mpq_class& u);

// q >= min(U_t, max((n-k)^2, V_t)); pre: k < n/2, t > 2n/(n-2k)
criterion_report check_cota(const problem_instance& inst, const mpq_class& t);

// the n=7, r=3, k=3 refinement: exists for threshold(t=5.4) <= q < the
// (8.5, 9.5) window threshold, with every intermediate constant recomputed
// and gated (v <= 299, S_v < 0.19113, delta > 0.80883, Delta below the
// committed cap 1310.0623 that also defines the lower threshold)
criterion_report check_n7(const Nat& q, const factor_table* table = factor_table::bundled());

struct auto_config {
    std::vector<mpq_class> t_grid;
    std::vector<mpq_class> u_grid;
    bool stop_at_first = true;
    auto_config();
};

// direct, caseall, sieve(auto), then the tu/cota grid; stops at the first
// exists verdict and returns every report tried
std::vector<criterion_report> check_auto(const problem_instance& inst, const auto_config& cfg = {});

} // namespace rfkn
