#pragma once

#include <cstdint>
#include <memory>
#include <vector>
#include "rfkn/nat.hpp"
#include "rfkn/polyring.hpp"

namespace rfkn {

using fp_t = uint64_t;            // element of F_p; p is kept below 2^31
using fq_t = std::vector<fp_t>;   // element of F_q = F_p[y]/(u), s coefficients

// base field F_q, q = p^s, as F_p[y] modulo a monic irreducible of degree s
class Fq {
  public:
    using elem = fq_t;

    uint64_t p = 2;
    unsigned s = 1;
    std::vector<fp_t> modulus; // length s+1, monic
    Nat q;                     // p^s

    const Nat& card() const { return q; }

    fq_t zero() const { return fq_t(s, 0); }
    fq_t one() const;
    fq_t from_ui(uint64_t x) const; // embeds x mod p
    bool is_zero(const fq_t& a) const;
    bool eq(const fq_t& a, const fq_t& b) const { return a == b; }

    fq_t add(const fq_t& a, const fq_t& b) const;
    fq_t sub(const fq_t& a, const fq_t& b) const;
    fq_t neg(const fq_t& a) const;
    fq_t mul(const fq_t& a, const fq_t& b) const;
    fq_t inv(const fq_t& a) const; // division_by_zero on 0
    fq_t pow(const fq_t& a, const Nat& e) const;

    // enumeration order: index written in base p, digit i = coefficient of y^i
    fq_t element_at(const Nat& index) const;
    Nat index_of(const fq_t& a) const;
};

// scalar context for the internal F_p[y] arithmetic
struct FpCtx {
    using elem = fp_t;
    uint64_t p;
    Nat card() const { return Nat(static_cast<unsigned long>(p)); }
    fp_t zero() const { return 0; }
    fp_t one() const { return p > 1 ? 1 : 0; }
    bool is_zero(fp_t a) const { return a == 0; }
    bool eq(fp_t a, fp_t b) const { return a == b; }
    fp_t add(fp_t a, fp_t b) const { return (a + b) % p; }
    fp_t sub(fp_t a, fp_t b) const { return (a + p - b) % p; }
    fp_t neg(fp_t a) const { return a ? p - a : 0; }
    fp_t mul(fp_t a, fp_t b) const { return (a * b) % p; }
    fp_t inv(fp_t a) const;
};

using polyq = std::vector<fq_t>; // polynomial over F_q, little-endian

// the tower F_p c F_q c F_{q^n}; the top field is F_q[z]/(v), deg v = n.
// immutable after construction and shareable.
class Tower {
  public:
    using elem = std::vector<fq_t>; // n coefficients over F_q
    using gfe = elem;

    Fq base;
    unsigned n = 1;
    polyq ext_modulus; // length n+1, monic, irreducible over F_q
    Nat Q;             // q^n

    const Nat& card() const { return Q; }

    gfe zero() const;
    gfe one() const;
    gfe from_base(const fq_t& a) const;
    gfe from_ui(uint64_t x) const { return from_base(base.from_ui(x)); }
    bool is_zero(const gfe& a) const;
    bool eq(const gfe& a, const gfe& b) const { return a == b; }

    gfe add(const gfe& a, const gfe& b) const;
    gfe sub(const gfe& a, const gfe& b) const;
    gfe neg(const gfe& a) const;
    gfe mul(const gfe& a, const gfe& b) const;
    gfe inv(const gfe& a) const;
    gfe pow(const gfe& a, const Nat& e) const;
    gfe scale(const fq_t& c, const gfe& a) const; // F_q-scalar multiple

    // a^{q^i}; one application is a precomputed linear map over F_q
    gfe frobenius(const gfe& a, unsigned i = 1) const;

    gfe element_at(const Nat& index) const;
    Nat index_of(const gfe& a) const;

    void init_frobenius(); // called by make_tower

  private:
    std::vector<gfe> frob_cols_; // image of each basis power under x -> x^q
};

// contexts bridging Fq / Tower into the generic polynomial routines
struct FqCtx {
    const Fq* F;
    using elem = fq_t;
    Nat card() const { return F->q; }
    elem zero() const { return F->zero(); }
    elem one() const { return F->one(); }
    bool is_zero(const elem& a) const { return F->is_zero(a); }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    elem add(const elem& a, const elem& b) const { return F->add(a, b); }
    elem sub(const elem& a, const elem& b) const { return F->sub(a, b); }
    elem neg(const elem& a) const { return F->neg(a); }
    elem mul(const elem& a, const elem& b) const { return F->mul(a, b); }
    elem inv(const elem& a) const { return F->inv(a); }
};

struct TowerCtx {
    const Tower* T;
    using elem = Tower::gfe;
    const Nat& card() const { return T->Q; }
    elem zero() const { return T->zero(); }
    elem one() const { return T->one(); }
    bool is_zero(const elem& a) const { return T->is_zero(a); }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    elem add(const elem& a, const elem& b) const { return T->add(a, b); }
    elem sub(const elem& a, const elem& b) const { return T->sub(a, b); }
    elem neg(const elem& a) const { return T->neg(a); }
    elem mul(const elem& a, const elem& b) const { return T->mul(a, b); }
    elem inv(const elem& a) const { return T->inv(a); }
};

// deterministic for a fixed seed: moduli by seeded random search over monic
// polynomials plus the irreducibility test
Fq make_base_field(const Nat& p, unsigned s, uint64_t seed = 1);
Tower make_tower(const Nat& p, unsigned s, unsigned n, uint64_t seed = 1);

} // namespace rfkn
