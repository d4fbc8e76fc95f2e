#pragma once

#include <vector>
#include "rfkn/gfield.hpp"
#include "rfkn/nat.hpp"

namespace rfkn {

// ---- degree-level view ------------------------------------------------
// x^n - 1 over F_q, q = p^s: write n = n' p^e with p coprime to n'. the
// irreducible factors correspond to the q-cyclotomic cosets mod n' (degree =
// coset size), every factor appearing with multiplicity p^e. this view needs
// no field arithmetic and works for arbitrarily large q.

struct xn1_profile {
    unsigned n = 1;
    unsigned multiplicity = 1;      // p^e, shared by all irreducible factors
    std::vector<unsigned> degrees;  // one entry per distinct irreducible, ascending

    size_t distinct() const { return degrees.size(); }
    Nat w() const { return Nat(1) << degrees.size(); } // W(x^n - 1)
};

xn1_profile profile_xn1(const Nat& q, const Nat& p, unsigned n);

// degree-k divisor at the degree level: how much of each irreducible is used
struct fprofile {
    std::vector<unsigned> take;           // exponent per irreducible, <= multiplicity
    unsigned k = 0;
    std::vector<unsigned> comp_degrees;   // degrees of complement irreducibles, sorted
    size_t wc_exp() const { return comp_degrees.size(); }
    Nat w_complement() const { return Nat(1) << comp_degrees.size(); }
};

// all ways to pick a degree-k divisor, as distinct (take-vector) selections
std::vector<fprofile> degree_k_profiles(const xn1_profile& xp, unsigned k);

// the selection minimizing (number of complement irreducibles, then the sorted
// complement degree list); no_degree_k_divisor when none exists
fprofile best_fprofile(const xn1_profile& xp, unsigned k);

bool has_degree_k_divisor(const xn1_profile& xp, unsigned k);

// ---- concrete view ----------------------------------------------------

struct poly_factor {
    polyq f;           // monic irreducible
    unsigned mult = 1;
};

struct xn1_factorization {
    unsigned n = 1;
    std::vector<poly_factor> factors; // sorted by (degree, coefficient order)

    size_t distinct() const { return factors.size(); }
};

// distinct-degree + equal-degree splitting of the squarefree part x^{n'} - 1,
// multiplicities raised to p^e afterwards. deterministic: the randomized
// splitting is seeded from (q, n) and factors are sorted canonically.
xn1_factorization factor_xn1(const Fq& K, unsigned n);

// order of the unit group of F_q[x]/(h) for monic h dividing x^n - 1;
// multiplicative: irreducible P of degree d at multiplicity e contributes
// (q^d - 1) q^{d(e-1)}
Nat phi_q(const Fq& K, const xn1_factorization& fx, const polyq& h);

// number of monic squarefree divisors of h: 2^{distinct irreducibles}
Nat w_poly(const Fq& K, const xn1_factorization& fx, const polyq& h);

// 0 if h has a square factor, else (-1)^{number of irreducible factors}
int mobius_q(const Fq& K, const xn1_factorization& fx, const polyq& h);

struct degree_k_choice {
    polyq f;            // monic, degree k
    polyq complement;   // (x^n - 1) / f
    Nat w_complement;
    std::vector<unsigned> take; // exponents against fx.factors
};

inline constexpr size_t divisor_enumeration_cap = size_t(1) << 20;

// all monic degree-k divisors of x^n - 1, ascending W(complement), ties in
// lexicographic coefficient order of f
std::vector<degree_k_choice> degree_k_divisors(const Fq& K, const xn1_factorization& fx, unsigned k);

degree_k_choice best_f(const Fq& K, const xn1_factorization& fx, unsigned k);

// multiplicity vector of h against the factor list (h must divide x^n - 1)
std::vector<unsigned> multiplicities_of(const Fq& K, const xn1_factorization& fx, const polyq& h);

polyq xn_minus_1(const Fq& K, unsigned n);

} // namespace rfkn
