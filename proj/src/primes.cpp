#include "rfkn/primes.hpp"

#include <cmath>
#include "rfkn/error.hpp"

namespace rfkn {

std::vector<uint64_t> primes_below(uint64_t bound) {
    if (bound > sieve_capacity)
        fail(errc::window_too_large, "sieve bound " + std::to_string(bound) + " exceeds capacity");
    std::vector<uint64_t> out;
    if (bound <= 2) return out;
    std::vector<bool> comp(bound, false);
    for (uint64_t i = 2; i * i < bound; i++)
        if (!comp[i])
            for (uint64_t j = i * i; j < bound; j += i) comp[j] = true;
    for (uint64_t i = 2; i < bound; i++)
        if (!comp[i]) out.push_back(i);
    return out;
}

namespace {

// p <=> 2^(a/b) as exact integers: p^b <=> 2^a
int cmp_pow2(uint64_t p, const mpq_class& e) {
    Nat lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), p, mpz_get_ui(e.get_den().get_mpz_t()));
    Nat rhs = 1;
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), mpz_get_ui(e.get_num().get_mpz_t()));
    return cmp(lhs, rhs);
}

uint64_t floor_pow2(const mpq_class& e) {
    Nat base = 1;
    mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), mpz_get_ui(e.get_num().get_mpz_t()));
    Nat root;
    mpz_root(root.get_mpz_t(), base.get_mpz_t(), mpz_get_ui(e.get_den().get_mpz_t()));
    if (!root.fits_ulong_p())
        fail(errc::window_too_large, "2^(" + e.get_str() + ") out of sieve range");
    return nat_to_ulong(root);
}

} // namespace

prime_window primes_in_window(const mpq_class& t, const mpq_class& u) {
    mpq_class lo = t, hi = t + u;
    lo.canonicalize();
    hi.canonicalize();
    if (sgn(lo) <= 0 || sgn(u) <= 0)
        fail(errc::bad_input, "window exponents must satisfy 0 < t, 0 < u");
    prime_window w;
    uint64_t bound = floor_pow2(hi) + 1;
    for (uint64_t p : primes_below(bound))
        if (cmp_pow2(p, lo) > 0 && cmp_pow2(p, hi) < 0) w.primes.push_back(p);
    w.v = w.primes.size();
    return w;
}

BigReal inv_sum(const std::vector<uint64_t>& primes, mpfr_prec_t prec) {
    BigReal s(prec + 64);
    mpfr_set_ui(s.raw(), 0, MPFR_RNDN);
    BigReal term(prec + 64);
    for (uint64_t p : primes) {
        mpfr_ui_div(term.raw(), 1, BigReal::from_ui(p, prec + 64).raw(), MPFR_RNDN);
        mpfr_add(s.raw(), s.raw(), term.raw(), MPFR_RNDN);
    }
    BigReal out(prec);
    mpfr_set(out.raw(), s.raw(), MPFR_RNDN);
    return out;
}

BigReal a_constant(const mpq_class& t, const mpq_class& u, mpfr_prec_t prec) {
    mpq_class lim = t, tu = t + u;
    lim.canonicalize();
    tu.canonicalize();
    if (sgn(lim) <= 0 || sgn(tu) <= 0)
        fail(errc::bad_input, "a_constant needs t > 0 and t + u > 0");
    Nat prod = 1;
    unsigned long count = 0;
    uint64_t bound = floor_pow2(lim) + 1;
    for (uint64_t p : primes_below(bound)) {
        if (cmp_pow2(p, lim) >= 0) continue;
        prod *= p;
        count++;
    }
    // 2^count / prod^(1/(t+u)), the product exact before the single root
    BigReal two_c(prec + 64);
    mpfr_set_ui_2exp(two_c.raw(), 1, long(count), MPFR_RNDN);
    BigReal root = BigReal::from_nat(prod, prec + 64).pow(BigReal::from_ratio(1 / tu, prec + 64));
    BigReal out(prec);
    mpfr_div(out.raw(), two_c.raw(), root.raw(), MPFR_RNDN);
    return out;
}

residue7_primes primes_1_mod_7(size_t count) {
    residue7_primes r;
    uint64_t bound = 1 << 16;
    while (true) {
        r.primes.clear();
        for (uint64_t p : primes_below(bound)) {
            if (p % 7 != 1) continue;
            r.primes.push_back(p);
            if (r.primes.size() == count) break;
        }
        if (r.primes.size() == count) break;
        bound *= 2; // primes_below faults at the cap rather than looping forever
    }
    mpq_class s = 0;
    Nat prod = 1;
    for (uint64_t p : r.primes) {
        s += mpq_class(1, static_cast<unsigned long>(p));
        s.canonicalize();
        prod *= p;
        r.inv_sums.push_back(s);
        r.products.push_back(prod);
    }
    return r;
}

size_t largest_v_below(const residue7_primes& ps, const Nat& bound) {
    size_t v = 0;
    while (v < ps.products.size() && ps.products[v] <= bound) v++;
    return v;
}

size_t largest_v_below(const residue7_primes& ps, const BigReal& bound) {
    size_t v = 0;
    while (v < ps.products.size() && bound.cmp_nat(ps.products[v]) >= 0) v++;
    return v;
}

} // namespace rfkn
