#include "rfkn/gfield.hpp"

#include <random>
#include "rfkn/error.hpp"

namespace rfkn {

fp_t FpCtx::inv(fp_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of 0 in F_p");
    // extended euclid on signed words; p < 2^31 keeps everything in range
    int64_t t = 0, nt = 1, r = int64_t(p), nr = int64_t(a);
    while (nr != 0) {
        int64_t qq = r / nr;
        t -= qq * nt;
        std::swap(t, nt);
        r -= qq * nr;
        std::swap(r, nr);
    }
    return fp_t(t < 0 ? t + int64_t(p) : t);
}

namespace {

fq_t fit(fq_t v, unsigned len) {
    v.resize(len, 0);
    return v;
}

} // namespace

fq_t Fq::one() const {
    fq_t r(s, 0);
    r[0] = 1 % p;
    return r;
}

fq_t Fq::from_ui(uint64_t x) const {
    fq_t r(s, 0);
    r[0] = x % p;
    return r;
}

bool Fq::is_zero(const fq_t& a) const {
    for (fp_t c : a)
        if (c) return false;
    return true;
}

fq_t Fq::add(const fq_t& a, const fq_t& b) const {
    fq_t r(s);
    for (unsigned i = 0; i < s; i++) r[i] = (a[i] + b[i]) % p;
    return r;
}

fq_t Fq::sub(const fq_t& a, const fq_t& b) const {
    fq_t r(s);
    for (unsigned i = 0; i < s; i++) r[i] = (a[i] + p - b[i]) % p;
    return r;
}

fq_t Fq::neg(const fq_t& a) const {
    fq_t r(s);
    for (unsigned i = 0; i < s; i++) r[i] = a[i] ? p - a[i] : 0;
    return r;
}

fq_t Fq::mul(const fq_t& a, const fq_t& b) const {
    FpCtx ctx{p};
    return fit(p_mod(ctx, p_mul(ctx, a, b), modulus), s);
}

fq_t Fq::inv(const fq_t& a) const {
    if (is_zero(a)) fail(errc::division_by_zero, "inverse of 0 in F_q");
    FpCtx ctx{p};
    return fit(p_invmod(ctx, a, modulus), s);
}

fq_t Fq::pow(const fq_t& a, const Nat& e) const {
    FpCtx ctx{p};
    return fit(p_powmod(ctx, a, e, modulus), s);
}

fq_t Fq::element_at(const Nat& index) const {
    if (index < 0 || index >= q) fail(errc::bad_input, "F_q element index out of range");
    fq_t r(s, 0);
    Nat rem = index;
    for (unsigned i = 0; i < s; i++) {
        r[i] = mpz_tdiv_ui(rem.get_mpz_t(), p);
        rem /= static_cast<unsigned long>(p);
    }
    return r;
}

Nat Fq::index_of(const fq_t& a) const {
    Nat idx = 0;
    for (unsigned i = s; i-- > 0;) idx = idx * static_cast<unsigned long>(p) + a[i];
    return idx;
}

Tower::gfe Tower::zero() const { return gfe(n, base.zero()); }

Tower::gfe Tower::one() const {
    gfe r(n, base.zero());
    r[0] = base.one();
    return r;
}

Tower::gfe Tower::from_base(const fq_t& a) const {
    gfe r(n, base.zero());
    r[0] = a;
    return r;
}

bool Tower::is_zero(const gfe& a) const {
    for (const auto& c : a)
        if (!base.is_zero(c)) return false;
    return true;
}

namespace {

Tower::gfe fitq(Tower::gfe v, unsigned len, const Fq& base) {
    v.resize(len, base.zero());
    return v;
}

} // namespace

Tower::gfe Tower::add(const gfe& a, const gfe& b) const {
    gfe r(n);
    for (unsigned i = 0; i < n; i++) r[i] = base.add(a[i], b[i]);
    return r;
}

Tower::gfe Tower::sub(const gfe& a, const gfe& b) const {
    gfe r(n);
    for (unsigned i = 0; i < n; i++) r[i] = base.sub(a[i], b[i]);
    return r;
}

Tower::gfe Tower::neg(const gfe& a) const {
    gfe r(n);
    for (unsigned i = 0; i < n; i++) r[i] = base.neg(a[i]);
    return r;
}

Tower::gfe Tower::mul(const gfe& a, const gfe& b) const {
    FqCtx ctx{&base};
    return fitq(p_mod(ctx, p_mul(ctx, a, b), ext_modulus), n, base);
}

Tower::gfe Tower::inv(const gfe& a) const {
    if (is_zero(a)) fail(errc::division_by_zero, "inverse of 0 in the extension");
    FqCtx ctx{&base};
    return fitq(p_invmod(ctx, a, ext_modulus), n, base);
}

Tower::gfe Tower::pow(const gfe& a, const Nat& e) const {
    FqCtx ctx{&base};
    return fitq(p_powmod(ctx, a, e, ext_modulus), n, base);
}

Tower::gfe Tower::scale(const fq_t& c, const gfe& a) const {
    gfe r(n);
    for (unsigned i = 0; i < n; i++) r[i] = base.mul(c, a[i]);
    return r;
}

Tower::gfe Tower::frobenius(const gfe& a, unsigned i) const {
    gfe r = a;
    for (unsigned rep = 0; rep < i; rep++) {
        // coefficients are fixed by x -> x^q, so the map is the F_q-linear
        // combination of the precomputed basis images
        gfe next = zero();
        for (unsigned j = 0; j < n; j++) {
            if (base.is_zero(r[j])) continue;
            next = add(next, scale(r[j], frob_cols_[j]));
        }
        r = next;
    }
    return r;
}

void Tower::init_frobenius() {
    FqCtx ctx{&base};
    gfe z{base.zero(), base.one()}; // the generator z itself
    gfe zq = fitq(p_powmod(ctx, z, base.q, ext_modulus), n, base);
    frob_cols_.assign(n, zero());
    frob_cols_[0] = one();
    for (unsigned j = 1; j < n; j++) frob_cols_[j] = mul(frob_cols_[j - 1], zq);
}

Tower::gfe Tower::element_at(const Nat& index) const {
    if (index < 0 || index >= Q) fail(errc::bad_input, "extension element index out of range");
    gfe r(n);
    Nat rem = index, digit;
    for (unsigned i = 0; i < n; i++) {
        mpz_tdiv_qr(rem.get_mpz_t(), digit.get_mpz_t(), rem.get_mpz_t(), base.q.get_mpz_t());
        r[i] = base.element_at(digit);
    }
    return r;
}

Nat Tower::index_of(const gfe& a) const {
    Nat idx = 0;
    for (unsigned i = n; i-- > 0;) idx = idx * base.q + base.index_of(a[i]);
    return idx;
}

Fq make_base_field(const Nat& p, unsigned s, uint64_t seed) {
    if (classify_prime(p) == primality::composite)
        fail(errc::not_prime, "characteristic " + p.get_str() + " is not prime");
    if (p >= Nat(1) << 31) fail(errc::field_too_large, "characteristic must stay below 2^31");
    if (s == 0) fail(errc::bad_input, "extension degree must be positive");
    Fq F;
    F.p = nat_to_ulong(p);
    F.s = s;
    mpz_ui_pow_ui(F.q.get_mpz_t(), F.p, s);
    if (s == 1) {
        F.modulus = {0, 1};
        return F;
    }
    FpCtx ctx{F.p};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> dist(0, F.p - 1);
    while (true) {
        std::vector<fp_t> f(s + 1, 0);
        for (unsigned i = 0; i < s; i++) f[i] = dist(rng);
        f[s] = 1;
        if (p_is_irreducible(ctx, f)) {
            F.modulus = f;
            return F;
        }
    }
}

Tower make_tower(const Nat& p, unsigned s, unsigned n, uint64_t seed) {
    if (n == 0) fail(errc::bad_input, "tower degree must be positive");
    Tower T;
    T.base = make_base_field(p, s, seed);
    T.n = n;
    mpz_pow_ui(T.Q.get_mpz_t(), T.base.q.get_mpz_t(), n);
    if (n == 1) {
        T.ext_modulus = {T.base.zero(), T.base.one()};
    } else {
        FqCtx ctx{&T.base};
        std::mt19937_64 rng(seed ^ 0x517cc1b727220a95ull);
        while (true) {
            polyq f(n + 1, T.base.zero());
            for (unsigned i = 0; i < n; i++) {
                Nat idx;
                // draw base-field elements uniformly by index
                uint64_t raw = rng();
                idx = Nat(static_cast<unsigned long>(raw >> 32)) << 32 | (raw & 0xffffffffu);
                idx %= T.base.q;
                f[i] = T.base.element_at(idx);
            }
            f[n] = T.base.one();
            if (p_is_irreducible(ctx, f)) {
                T.ext_modulus = f;
                break;
            }
        }
    }
    T.init_frobenius();
    return T;
}

} // namespace rfkn
