#include "rfkn/nat.hpp"

#include <array>
#include "rfkn/error.hpp"

namespace rfkn {

namespace {

// one strong-pseudoprime round: n-1 = d 2^s with d odd
bool strong_probable_prime(const Nat& n, const Nat& base) {
    Nat b = base % n;
    if (b == 0) return true;
    Nat d = n - 1;
    unsigned long twos = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), twos);
    Nat x = nat_powmod(b, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < twos; i++) {
        x = x * x % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

int jacobi(const Nat& a, const Nat& n) {
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

// strong Lucas test with Selfridge's parameters (D = 5, -7, 9, ...)
bool strong_lucas(const Nat& n) {
    if (n % 2 == 0) return n == 2;
    if (mpz_perfect_square_p(n.get_mpz_t())) return false; // no D would work
    // pick D with jacobi(D/n) = -1
    long d = 5;
    while (true) {
        Nat D(d);
        int j = jacobi(D, n);
        if (j == 0) return Nat(std::abs(d)) == n; // shares a factor with n
        if (j == -1) break;
        d = d > 0 ? -(d + 2) : -(d - 2);
    }
    Nat D(d);
    // P = 1, Q = (1 - D) / 4
    Nat Q = (Nat(1) - D) / 4;
    Nat delta = n + 1;
    unsigned long twos = mpz_scan1(delta.get_mpz_t(), 0);
    Nat m = delta;
    mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), twos);

    // Lucas chain for U_m, V_m by binary ladder, top bit gives (U_1, V_1)
    size_t bits = nat_bits(m);
    Nat Uh = 1, Vh = 1, Qk = Q % n;
    if (Qk < 0) Qk += n;
    for (size_t i = bits - 1; i-- > 0;) {
        // double
        Uh = Uh * Vh % n;
        Vh = (Vh * Vh - 2 * Qk) % n;
        if (Vh < 0) Vh += n;
        Qk = Qk * Qk % n;
        if (mpz_tstbit(m.get_mpz_t(), i)) {
            // advance by one (P = 1): U' = (U + V)/2, V' = (D U + V)/2
            Nat U2 = Uh + Vh;
            if (mpz_odd_p(U2.get_mpz_t())) U2 += n;
            U2 = U2 / 2 % n;
            Nat V2 = D * Uh + Vh;
            V2 %= n;
            if (V2 < 0) V2 += n;
            if (mpz_odd_p(V2.get_mpz_t())) V2 += n;
            V2 = V2 / 2 % n;
            Uh = U2; Vh = V2;
            Qk = Qk * (Q % n) % n;
            if (Qk < 0) Qk += n;
        }
    }
    if (Uh == 0 || Vh == 0) return true;
    for (unsigned long i = 1; i < twos; i++) {
        Vh = (Vh * Vh - 2 * Qk) % n;
        if (Vh < 0) Vh += n;
        if (Vh == 0) return true;
        Qk = Qk * Qk % n;
    }
    return false;
}

const std::array<unsigned long, 13> mr_bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// first 13 prime bases are conclusive below 3.317e24
const char* deterministic_limit = "3317044064679887385961981";

} // namespace

primality classify_prime(const Nat& n) {
    if (n < 2) return primality::composite;
    for (unsigned long b : mr_bases) {
        if (n == b) return primality::prime;
        if (n % b == 0) return primality::composite;
    }
    for (unsigned long b : mr_bases)
        if (!strong_probable_prime(n, Nat(b))) return primality::composite;
    if (!strong_lucas(n)) return primality::composite;
    Nat limit(deterministic_limit);
    if (n < limit) return primality::prime;
    // beyond the proven range: extra pseudo-random bases, flagged result
    gmp_randstate_t st;
    gmp_randinit_mt(st);
    gmp_randseed_ui(st, 0x5eed1234abcdef01ULL);
    Nat span = n - 3;
    for (int i = 0; i < 64; i++) {
        Nat b;
        mpz_urandomm(b.get_mpz_t(), st, span.get_mpz_t());
        b += 2;
        if (!strong_probable_prime(n, b)) {
            gmp_randclear(st);
            return primality::composite;
        }
    }
    gmp_randclear(st);
    return primality::probable_prime;
}

std::pair<Nat, unsigned> perfect_power(const Nat& n) {
    if (n < 4) return {n, 1};
    for (unsigned k = unsigned(nat_bits(n)); k >= 2; k--) {
        Nat root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return {root, k};
    }
    return {n, 1};
}

unsigned prime_power_exponent(const Nat& q, const Nat& p) {
    if (p < 2 || q < 2) return 0;
    Nat m = q;
    unsigned s = 0;
    while (m % p == 0) {
        m /= p;
        s++;
    }
    return m == 1 ? s : 0;
}

void split_prime_power(const Nat& q, Nat& p, unsigned& s) {
    auto [base, k] = perfect_power(q);
    // base may itself be a power when k is not maximal over all exponents
    auto [b2, k2] = perfect_power(base);
    while (k2 > 1) {
        base = b2;
        k *= k2;
        std::tie(b2, k2) = perfect_power(base);
    }
    if (classify_prime(base) == primality::composite)
        fail(errc::not_prime, q.get_str() + " is not a prime power");
    p = base;
    s = k;
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NOT_PRIME";
        case errc::division_by_zero: return "DIVISION_BY_ZERO";
        case errc::undefined_gcd: return "UNDEFINED_GCD";
        case errc::incomplete_factorization: return "INCOMPLETE_FACTORIZATION";
        case errc::invalid_m: return "INVALID_M";
        case errc::invalid_g: return "INVALID_G";
        case errc::invalid_r: return "INVALID_R";
        case errc::zero_element: return "ZERO_ELEMENT";
        case errc::field_too_large: return "FIELD_TOO_LARGE";
        case errc::not_monic: return "NOT_MONIC";
        case errc::no_degree_k_divisor: return "NO_DEGREE_K_DIVISOR";
        case errc::not_normal: return "NOT_NORMAL";
        case errc::not_primitive: return "NOT_PRIMITIVE";
        case errc::window_too_large: return "WINDOW_TOO_LARGE";
        case errc::precondition_failed: return "PRECONDITION_FAILED";
        case errc::divisor_cap_exceeded: return "DIVISOR_CAP_EXCEEDED";
        case errc::bad_input: return "BAD_INPUT";
    }
    return "UNKNOWN";
}

} // namespace rfkn
