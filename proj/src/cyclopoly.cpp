#include "rfkn/cyclopoly.hpp"

#include <algorithm>
#include <random>
#include "rfkn/error.hpp"

namespace rfkn {

xn1_profile profile_xn1(const Nat& q, const Nat& p, unsigned n) {
    if (n == 0) fail(errc::bad_input, "x^n - 1 needs n >= 1");
    xn1_profile xp;
    xp.n = n;
    unsigned nprime = n;
    if (p.fits_ulong_p()) {
        unsigned long pu = nat_to_ulong(p);
        while (pu > 1 && nprime % pu == 0) {
            nprime /= pu;
            xp.multiplicity *= pu;
        }
    }
    // orbits of multiplication by q on Z_{n'}
    unsigned long qm = mpz_tdiv_ui(q.get_mpz_t(), nprime);
    std::vector<bool> seen(nprime, false);
    for (unsigned c = 0; c < nprime; c++) {
        if (seen[c]) continue;
        unsigned size = 0;
        unsigned long cur = c;
        while (!seen[cur]) {
            seen[cur] = true;
            size++;
            cur = (cur * qm) % nprime;
        }
        xp.degrees.push_back(size);
    }
    std::sort(xp.degrees.begin(), xp.degrees.end());
    return xp;
}

namespace {

// all take-vectors with sum take_i * deg_i == k, 0 <= take_i <= mult_i
template <class Fn>
void enum_takes(const std::vector<unsigned>& degs, const std::vector<unsigned>& mults, unsigned k,
                Fn&& emit) {
    size_t m = degs.size();
    std::vector<unsigned long> suffix(m + 1, 0);
    for (size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] + (unsigned long)degs[i] * mults[i];
    std::vector<unsigned> take(m, 0);
    auto rec = [&](auto&& self, size_t i, unsigned rem) -> void {
        if (rem > suffix[i]) return;
        if (i == m) {
            if (rem == 0) emit(take);
            return;
        }
        unsigned cap = std::min(mults[i], degs[i] ? rem / degs[i] : 0u);
        for (unsigned t = 0; t <= cap; t++) {
            take[i] = t;
            self(self, i + 1, rem - t * degs[i]);
        }
        take[i] = 0;
    };
    rec(rec, 0, k);
}

} // namespace

std::vector<fprofile> degree_k_profiles(const xn1_profile& xp, unsigned k) {
    std::vector<unsigned> mults(xp.degrees.size(), xp.multiplicity);
    std::vector<fprofile> out;
    enum_takes(xp.degrees, mults, k, [&](const std::vector<unsigned>& take) {
        if (out.size() >= divisor_enumeration_cap)
            fail(errc::divisor_cap_exceeded, "too many degree-k selections to enumerate");
        fprofile fp;
        fp.take = take;
        fp.k = k;
        for (size_t i = 0; i < take.size(); i++)
            if (take[i] < xp.multiplicity) fp.comp_degrees.push_back(xp.degrees[i]);
        std::sort(fp.comp_degrees.begin(), fp.comp_degrees.end());
        out.push_back(std::move(fp));
    });
    return out;
}

fprofile best_fprofile(const xn1_profile& xp, unsigned k) {
    std::vector<fprofile> all = degree_k_profiles(xp, k);
    if (all.empty())
        fail(errc::no_degree_k_divisor,
             "x^" + std::to_string(xp.n) + " - 1 has no divisor of degree " + std::to_string(k));
    const fprofile* best = &all[0];
    for (const fprofile& fp : all)
        if (fp.comp_degrees.size() < best->comp_degrees.size() ||
            (fp.comp_degrees.size() == best->comp_degrees.size() &&
             fp.comp_degrees < best->comp_degrees))
            best = &fp;
    return *best;
}

bool has_degree_k_divisor(const xn1_profile& xp, unsigned k) {
    std::vector<char> reach(k + 1, 0);
    reach[0] = 1;
    for (unsigned d : xp.degrees)
        for (unsigned rep = 0; rep < xp.multiplicity; rep++)
            for (unsigned v = k; v >= d; v--) {
                if (reach[v - d]) reach[v] = 1;
                if (v == d) break;
            }
    return reach[k];
}

namespace {

fq_t random_fq(const Fq& K, std::mt19937_64& rng) {
    Nat idx = static_cast<unsigned long>(rng());
    mpz_mul_2exp(idx.get_mpz_t(), idx.get_mpz_t(), 64);
    idx += static_cast<unsigned long>(rng());
    idx %= K.q;
    return K.element_at(idx);
}

polyq random_poly_below(const FqCtx& ctx, unsigned deg, std::mt19937_64& rng) {
    polyq r(deg);
    for (unsigned i = 0; i < deg; i++) r[i] = random_fq(*ctx.F, rng);
    p_trim(ctx, r);
    return r;
}

// h = product of distinct irreducibles, all of degree d
void edf(const FqCtx& ctx, const polyq& h, unsigned d, std::mt19937_64& rng,
         std::vector<polyq>& out) {
    unsigned deg = unsigned(p_deg(ctx, h));
    if (deg == d) {
        out.push_back(p_make_monic(ctx, h));
        return;
    }
    const Fq& K = *ctx.F;
    while (true) {
        polyq r = random_poly_below(ctx, deg, rng);
        if (p_deg(ctx, r) < 1) continue;
        polyq g;
        if (K.p == 2) {
            // additive trace to F_2: r + r^2 + r^4 + ... splits in char 2
            polyq t = r, sq = r;
            for (unsigned i = 1; i < K.s * d; i++) {
                sq = p_mulmod(ctx, sq, sq, h);
                t = p_add(ctx, t, sq);
            }
            g = p_gcd(ctx, t, h);
        } else {
            Nat e = (nat_pow(K.q, d) - 1) / 2;
            polyq b = p_powmod(ctx, r, e, h);
            g = p_gcd(ctx, p_sub(ctx, b, p_one(ctx)), h);
        }
        long dg = p_deg(ctx, g);
        if (dg <= 0 || dg == long(deg)) continue;
        edf(ctx, g, d, rng, out);
        edf(ctx, p_div(ctx, h, g), d, rng, out);
        return;
    }
}

bool poly_less(const Fq& K, const polyq& a, const polyq& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); i++) {
        Nat ia = K.index_of(a[i]), ib = K.index_of(b[i]);
        if (ia != ib) return ia < ib;
    }
    return false;
}

} // namespace

polyq xn_minus_1(const Fq& K, unsigned n) {
    polyq f(n + 1, K.zero());
    f[0] = K.neg(K.one());
    f[n] = K.one();
    return f;
}

xn1_factorization factor_xn1(const Fq& K, unsigned n) {
    if (n == 0) fail(errc::bad_input, "x^n - 1 needs n >= 1");
    unsigned nprime = n, mult = 1;
    while (nprime % K.p == 0) {
        nprime /= K.p;
        mult *= unsigned(K.p);
    }
    FqCtx ctx{&K};
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (mpz_get_ui(K.q.get_mpz_t()) * 0x100000001b3ull) ^
                        n);
    std::vector<std::pair<polyq, unsigned>> found; // (irreducible, degree)
    polyq rem = xn_minus_1(K, nprime);
    polyq x = p_monomial(ctx, 1);
    polyq xq = p_mod(ctx, x, rem);
    for (unsigned d = 1; 2 * d <= unsigned(p_deg(ctx, rem)); d++) {
        xq = p_powmod(ctx, xq, K.q, rem);
        polyq g = p_gcd(ctx, p_sub(ctx, xq, x), rem);
        if (p_deg(ctx, g) > 0) {
            std::vector<polyq> split;
            edf(ctx, g, d, rng, split);
            for (auto& f : split) found.push_back({std::move(f), d});
            rem = p_div(ctx, rem, g);
            xq = p_mod(ctx, xq, rem);
        }
    }
    if (p_deg(ctx, rem) > 0) found.push_back({p_make_monic(ctx, rem), unsigned(p_deg(ctx, rem))});
    std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return poly_less(K, a.first, b.first);
    });
    xn1_factorization fx;
    fx.n = n;
    for (auto& [f, d] : found) fx.factors.push_back({std::move(f), mult});
    return fx;
}

std::vector<unsigned> multiplicities_of(const Fq& K, const xn1_factorization& fx, const polyq& h) {
    FqCtx ctx{&K};
    if (p_deg(ctx, h) < 0 || !p_is_monic(ctx, h))
        fail(errc::not_monic, "divisor of x^n - 1 must be monic and nonzero");
    std::vector<unsigned> mults;
    polyq rem = h;
    for (const auto& pf : fx.factors) {
        unsigned e = 0;
        while (p_deg(ctx, rem) >= p_deg(ctx, pf.f) && p_divides(ctx, pf.f, rem)) {
            rem = p_div(ctx, rem, pf.f);
            e++;
        }
        mults.push_back(e);
    }
    if (p_deg(ctx, rem) != 0)
        fail(errc::invalid_g, "polynomial does not divide x^n - 1");
    return mults;
}

Nat phi_q(const Fq& K, const xn1_factorization& fx, const polyq& h) {
    std::vector<unsigned> e = multiplicities_of(K, fx, h);
    FqCtx ctx{&K};
    Nat r = 1;
    for (size_t i = 0; i < fx.factors.size(); i++) {
        if (!e[i]) continue;
        unsigned d = unsigned(p_deg(ctx, fx.factors[i].f));
        r *= (nat_pow(K.q, d) - 1) * nat_pow(K.q, (unsigned long)d * (e[i] - 1));
    }
    return r;
}

Nat w_poly(const Fq& K, const xn1_factorization& fx, const polyq& h) {
    std::vector<unsigned> e = multiplicities_of(K, fx, h);
    size_t distinct = 0;
    for (unsigned ei : e) distinct += ei > 0;
    return Nat(1) << distinct;
}

int mobius_q(const Fq& K, const xn1_factorization& fx, const polyq& h) {
    std::vector<unsigned> e = multiplicities_of(K, fx, h);
    size_t count = 0;
    for (unsigned ei : e) {
        if (ei >= 2) return 0;
        count += ei;
    }
    return count % 2 ? -1 : 1;
}

std::vector<degree_k_choice> degree_k_divisors(const Fq& K, const xn1_factorization& fx,
                                               unsigned k) {
    FqCtx ctx{&K};
    std::vector<unsigned> degs, mults;
    for (const auto& pf : fx.factors) {
        degs.push_back(unsigned(p_deg(ctx, pf.f)));
        mults.push_back(pf.mult);
    }
    std::vector<degree_k_choice> out;
    enum_takes(degs, mults, k, [&](const std::vector<unsigned>& take) {
        if (out.size() >= divisor_enumeration_cap)
            fail(errc::divisor_cap_exceeded, "too many degree-k divisors to enumerate");
        degree_k_choice c;
        c.take = take;
        c.f = p_one(ctx);
        c.complement = p_one(ctx);
        size_t comp_distinct = 0;
        for (size_t i = 0; i < take.size(); i++) {
            for (unsigned t = 0; t < take[i]; t++) c.f = p_mul(ctx, c.f, fx.factors[i].f);
            for (unsigned t = take[i]; t < mults[i]; t++)
                c.complement = p_mul(ctx, c.complement, fx.factors[i].f);
            comp_distinct += take[i] < mults[i];
        }
        c.w_complement = Nat(1) << comp_distinct;
        out.push_back(std::move(c));
    });
    std::sort(out.begin(), out.end(), [&](const degree_k_choice& a, const degree_k_choice& b) {
        if (a.w_complement != b.w_complement) return a.w_complement < b.w_complement;
        return poly_less(K, a.f, b.f);
    });
    return out;
}

degree_k_choice best_f(const Fq& K, const xn1_factorization& fx, unsigned k) {
    std::vector<degree_k_choice> all = degree_k_divisors(K, fx, k);
    if (all.empty())
        fail(errc::no_degree_k_divisor,
             "x^" + std::to_string(fx.n) + " - 1 has no divisor of degree " + std::to_string(k));
    return all.front();
}

} // namespace rfkn
