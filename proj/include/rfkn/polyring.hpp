#pragma once

// generic dense polynomial arithmetic over a field context Ctx, which provides:
//   typename Ctx::elem, card(), zero(), one(), add, sub, neg, mul, inv,
//   eq, is_zero. polynomials are little-endian coefficient vectors; the zero
// polynomial is the empty vector (degree -1).

#include <vector>
#include "rfkn/error.hpp"
#include "rfkn/nat.hpp"

namespace rfkn {

template <class Ctx> using pvec = std::vector<typename Ctx::elem>;

template <class Ctx> void p_trim(const Ctx& F, pvec<Ctx>& a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

template <class T> int p_deg(const std::vector<T>& a) { return int(a.size()) - 1; }

template <class Ctx> int p_deg(const Ctx&, const pvec<Ctx>& a) { return int(a.size()) - 1; }

template <class T> bool p_is_zero(const std::vector<T>& a) { return a.empty(); }

template <class Ctx> bool p_is_zero(const Ctx&, const pvec<Ctx>& a) { return a.empty(); }

template <class Ctx> bool p_eq(const Ctx& F, const pvec<Ctx>& a, const pvec<Ctx>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); i++)
        if (!F.eq(a[i], b[i])) return false;
    return true;
}

template <class Ctx> pvec<Ctx> p_one(const Ctx& F) { return {F.one()}; }

// x^e
template <class Ctx> pvec<Ctx> p_monomial(const Ctx& F, size_t e) {
    pvec<Ctx> r(e + 1, F.zero());
    r[e] = F.one();
    return r;
}

template <class Ctx> pvec<Ctx> p_add(const Ctx& F, const pvec<Ctx>& a, const pvec<Ctx>& b) {
    pvec<Ctx> r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] = F.add(r[i], b[i]);
    p_trim(F, r);
    return r;
}

template <class Ctx> pvec<Ctx> p_sub(const Ctx& F, const pvec<Ctx>& a, const pvec<Ctx>& b) {
    pvec<Ctx> r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] = F.sub(r[i], b[i]);
    p_trim(F, r);
    return r;
}

template <class Ctx> pvec<Ctx> p_scale(const Ctx& F, const typename Ctx::elem& c, const pvec<Ctx>& a) {
    if (F.is_zero(c)) return {};
    pvec<Ctx> r(a.size(), F.zero());
    for (size_t i = 0; i < a.size(); i++) r[i] = F.mul(c, a[i]);
    p_trim(F, r);
    return r;
}

template <class Ctx> pvec<Ctx> p_mul(const Ctx& F, const pvec<Ctx>& a, const pvec<Ctx>& b) {
    if (a.empty() || b.empty()) return {};
    pvec<Ctx> r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); i++) {
        if (F.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    p_trim(F, r);
    return r;
}

template <class Ctx>
void p_divmod(const Ctx& F, pvec<Ctx> a, pvec<Ctx> b, pvec<Ctx>& quo, pvec<Ctx>& rem) {
    // operands may carry trailing zeros (fixed-width field reps feed in here)
    p_trim(F, a);
    p_trim(F, b);
    if (b.empty()) fail(errc::division_by_zero, "polynomial division by zero");
    quo.clear();
    if (a.size() < b.size()) { rem = std::move(a); return; }
    auto lead_inv = F.inv(b.back());
    quo.assign(a.size() - b.size() + 1, F.zero());
    for (size_t i = a.size(); i-- >= b.size();) {
        if (F.is_zero(a[i])) { if (i + 1 == b.size()) break; continue; }
        auto c = F.mul(a[i], lead_inv);
        quo[i - (b.size() - 1)] = c;
        for (size_t j = 0; j < b.size(); j++)
            a[i - (b.size() - 1) + j] = F.sub(a[i - (b.size() - 1) + j], F.mul(c, b[j]));
        if (i + 1 == b.size()) break;
    }
    p_trim(F, a);
    p_trim(F, quo);
    rem = std::move(a);
}

template <class Ctx> pvec<Ctx> p_mod(const Ctx& F, const pvec<Ctx>& a, const pvec<Ctx>& b) {
    pvec<Ctx> q, r;
    p_divmod(F, a, b, q, r);
    return r;
}

template <class Ctx> pvec<Ctx> p_div(const Ctx& F, const pvec<Ctx>& a, const pvec<Ctx>& b) {
    pvec<Ctx> q, r;
    p_divmod(F, a, b, q, r);
    return q;
}

template <class Ctx> bool p_divides(const Ctx& F, const pvec<Ctx>& d, const pvec<Ctx>& a) {
    return p_is_zero(p_mod(F, a, d));
}

template <class Ctx> pvec<Ctx> p_make_monic(const Ctx& F, pvec<Ctx> a) {
    p_trim(F, a);
    if (a.empty()) return a;
    return p_scale(F, F.inv(a.back()), a);
}

template <class Ctx> bool p_is_monic(const Ctx& F, const pvec<Ctx>& a) {
    return !a.empty() && F.eq(a.back(), F.one());
}

template <class Ctx> pvec<Ctx> p_gcd(const Ctx& F, pvec<Ctx> a, pvec<Ctx> b) {
    p_trim(F, a);
    p_trim(F, b);
    if (a.empty() && b.empty()) fail(errc::undefined_gcd, "gcd(0, 0)");
    while (!b.empty()) {
        auto r = p_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return p_make_monic(F, a);
}

// inverse of a modulo m (extended Euclid); a must be coprime to m
template <class Ctx> pvec<Ctx> p_invmod(const Ctx& F, const pvec<Ctx>& a, const pvec<Ctx>& m) {
    pvec<Ctx> r0 = m, r1 = p_mod(F, a, m);
    pvec<Ctx> t0, t1 = p_one(F);
    while (!r1.empty()) {
        pvec<Ctx> q, r2;
        p_divmod(F, r0, r1, q, r2);
        auto t2 = p_sub(F, t0, p_mul(F, q, t1));
        r0 = std::move(r1); r1 = std::move(r2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (p_deg(r0) != 0) fail(errc::division_by_zero, "p_invmod: not coprime to modulus");
    return p_scale(F, F.inv(r0[0]), t0);
}

template <class Ctx> pvec<Ctx> p_mulmod(const Ctx& F, const pvec<Ctx>& a, const pvec<Ctx>& b, const pvec<Ctx>& m) {
    return p_mod(F, p_mul(F, a, b), m);
}

template <class Ctx> pvec<Ctx> p_powmod(const Ctx& F, const pvec<Ctx>& base, const Nat& e, const pvec<Ctx>& m) {
    pvec<Ctx> r = p_mod(F, p_one(F), m);
    if (e == 0) return r;
    pvec<Ctx> b = p_mod(F, base, m);
    size_t nb = nat_bits(e);
    for (size_t i = nb; i-- > 0;) {
        r = p_mulmod(F, r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = p_mulmod(F, r, b, m);
    }
    return r;
}

// deg-d f is irreducible iff x^{q^d} = x (mod f) and gcd(x^{q^{d/l}} - x, f) = 1
// for every prime l | d
template <class Ctx> bool p_is_irreducible(const Ctx& F, const pvec<Ctx>& f) {
    int d = p_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    Nat q = F.card();
    pvec<Ctx> x = p_monomial(F, 1);
    std::vector<int> prime_divs;
    int dd = d;
    for (int l = 2; l * l <= dd; l++)
        if (dd % l == 0) {
            prime_divs.push_back(l);
            while (dd % l == 0) dd /= l;
        }
    if (dd > 1) prime_divs.push_back(dd);
    for (int l : prime_divs) {
        Nat e;
        mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d / l);
        auto xe = p_powmod(F, x, e, f);
        auto g = p_gcd(F, p_sub(F, xe, x), f);
        if (p_deg(g) != 0) return false;
    }
    Nat e;
    mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d);
    auto xq = p_powmod(F, x, e, f);
    return p_eq(F, xq, p_mod(F, x, f));
}

} // namespace rfkn
