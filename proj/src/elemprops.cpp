#include "rfkn/elemprops.hpp"

#include <map>
#include <random>
#include "rfkn/error.hpp"

namespace rfkn {

Nat mult_order(const Tower& T, const gfe& a, const int_factorization& factQ) {
    if (T.is_zero(a)) fail(errc::zero_element, "order of 0 is undefined");
    if (!factQ.complete())
        fail(errc::incomplete_factorization, "mult_order needs q^n - 1 fully factored");
    Nat ord = T.Q - 1;
    for (const auto& fe : factQ.factors) {
        for (unsigned i = 0; i < fe.exp; i++) {
            Nat cand = ord / fe.prime;
            if (ord % fe.prime != 0 || !T.eq(T.pow(a, cand), T.one())) break;
            ord = cand;
        }
    }
    return ord;
}

Nat r_index(const Tower& T, const gfe& a, const int_factorization& factQ) {
    return (T.Q - 1) / mult_order(T, a, factQ);
}

polye g_alpha(const Tower& T, const gfe& a) {
    polye g(T.n, T.zero());
    gfe cur = a;
    for (unsigned i = 0; i < T.n; i++) {
        g[T.n - 1 - i] = cur;
        if (i + 1 < T.n) cur = T.frobenius(cur);
    }
    return g;
}

unsigned normality_k(const Tower& T, const gfe& a) {
    if (T.is_zero(a)) return T.n;
    TowerCtx ctx{&T};
    polye xn1(T.n + 1, T.zero());
    xn1[0] = T.neg(T.one());
    xn1[T.n] = T.one();
    return unsigned(p_deg(ctx, p_gcd(ctx, xn1, g_alpha(T, a))));
}

gfe apply_poly(const Tower& T, const polyq& f, const gfe& a) {
    gfe acc = T.zero(), cur = a;
    for (size_t i = 0; i < f.size(); i++) {
        if (!T.base.is_zero(f[i])) acc = T.add(acc, T.scale(f[i], cur));
        if (i + 1 < f.size()) cur = T.frobenius(cur);
    }
    return acc;
}

polyq fq_order(const Tower& T, const xn1_factorization& fx, const gfe& a) {
    FqCtx ctx{&T.base};
    polyq h = xn_minus_1(T.base, T.n);
    for (const auto& pf : fx.factors) {
        for (unsigned i = 0; i < pf.mult; i++) {
            polyq cand = p_div(ctx, h, pf.f);
            if (!T.is_zero(apply_poly(T, cand, a))) break;
            h = cand;
            if (p_deg(ctx, h) == 0) return h;
        }
    }
    return h;
}

bool is_m_free(const Tower& T, const gfe& a, const Nat& m, const int_factorization& factQ) {
    if (m < 1 || (T.Q - 1) % m != 0) fail(errc::invalid_m, "m must divide q^n - 1");
    if (T.is_zero(a)) return m == 1; // 0 = 0^d for every d
    return nat_gcd(m, r_index(T, a, factQ)) == 1;
}

bool is_m_free_oracle(const Tower& T, const gfe& a, const Nat& m, const int_factorization& factQ) {
    if (m < 1 || (T.Q - 1) % m != 0) fail(errc::invalid_m, "m must divide q^n - 1");
    (void)factQ;
    if (T.Q > exhaustive_field_bound)
        fail(errc::field_too_large, "freeness oracle enumerates the whole field");
    for (Nat d = 2; d <= m; d++) {
        if (m % d != 0) continue;
        for (Nat i = 0; i < T.Q; i++) {
            gfe b = T.element_at(i);
            if (T.eq(T.pow(b, d), a)) return false;
        }
    }
    return true;
}

bool is_g_free(const Tower& T, const xn1_factorization& fx, const gfe& a, const polyq& g) {
    std::vector<unsigned> eg = multiplicities_of(T.base, fx, g);
    std::vector<unsigned> eo = multiplicities_of(T.base, fx, fq_order(T, fx, a));
    for (size_t i = 0; i < eg.size(); i++)
        if (eg[i] > 0 && fx.factors[i].mult > eo[i]) return false;
    return true;
}

namespace {

// monic divisors of g, skipping 1, as multiplicity vectors against fx
void divisors_of(const Fq& K, const xn1_factorization& fx, const std::vector<unsigned>& eg,
                 std::vector<polyq>& out) {
    FqCtx ctx{&K};
    std::vector<unsigned> cur(eg.size(), 0);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == eg.size()) {
            polyq h = p_one(ctx);
            bool trivial = true;
            for (size_t j = 0; j < cur.size(); j++)
                for (unsigned t = 0; t < cur[j]; t++) {
                    h = p_mul(ctx, h, fx.factors[j].f);
                    trivial = false;
                }
            if (!trivial) out.push_back(std::move(h));
            return;
        }
        for (cur[i] = 0; cur[i] <= eg[i]; cur[i]++) self(self, i + 1);
        cur[i] = 0;
    };
    rec(rec, 0);
}

} // namespace

bool is_g_free_oracle(const Tower& T, const xn1_factorization& fx, const gfe& a, const polyq& g) {
    if (T.Q > exhaustive_field_bound)
        fail(errc::field_too_large, "freeness oracle enumerates the whole field");
    std::vector<unsigned> eg = multiplicities_of(T.base, fx, g);
    std::vector<polyq> divs;
    divisors_of(T.base, fx, eg, divs);
    for (const polyq& h : divs)
        for (Nat i = 0; i < T.Q; i++)
            if (T.eq(apply_poly(T, h, T.element_at(i)), a)) return false;
    return true;
}

namespace {

gfe random_element(const Tower& T, std::mt19937_64& rng) {
    Nat idx = static_cast<unsigned long>(rng());
    mpz_mul_2exp(idx.get_mpz_t(), idx.get_mpz_t(), 64);
    idx += static_cast<unsigned long>(rng());
    idx %= T.Q;
    return T.element_at(idx);
}

} // namespace

gfe find_primitive(const Tower& T, const int_factorization& factQ, uint64_t seed) {
    if (!factQ.complete())
        fail(errc::incomplete_factorization, "primitivity test needs q^n - 1 fully factored");
    std::mt19937_64 rng(seed);
    while (true) {
        gfe a = random_element(T, rng);
        if (T.is_zero(a)) continue;
        bool ok = true;
        for (const auto& fe : factQ.factors)
            if (T.eq(T.pow(a, (T.Q - 1) / fe.prime), T.one())) {
                ok = false;
                break;
            }
        if (ok) return a;
    }
}

gfe find_normal(const Tower& T, uint64_t seed) {
    std::mt19937_64 rng(seed);
    while (true) {
        gfe a = random_element(T, rng);
        if (normality_k(T, a) == 0) return a;
    }
}

gfe construct_k_normal(const Tower& T, const gfe& beta, const polyq& f) {
    FqCtx ctx{&T.base};
    if (p_deg(ctx, f) < 0 || !p_is_monic(ctx, f))
        fail(errc::invalid_g, "f must be a monic divisor of x^n - 1");
    if (!p_is_zero(ctx, p_mod(ctx, xn_minus_1(T.base, T.n), f)))
        fail(errc::invalid_g, "f must divide x^n - 1");
    if (normality_k(T, beta) != 0) fail(errc::not_normal, "construction needs a normal element");
    return apply_poly(T, f, beta);
}

gfe construct_r_primitive(const Tower& T, const gfe& beta, const Nat& r,
                          const int_factorization& factQ) {
    if (r < 1 || (T.Q - 1) % r != 0) fail(errc::invalid_r, "r must divide q^n - 1");
    if (T.is_zero(beta) || mult_order(T, beta, factQ) != T.Q - 1)
        fail(errc::not_primitive, "construction needs a primitive element");
    return T.pow(beta, r);
}

Nat count_pairs(const Tower& T, const xn1_factorization& fx, const int_factorization& factQ,
                const Nat& r, const polyq& f, const Nat& m, const polyq& g, uint64_t bound) {
    if (T.Q > bound) fail(errc::field_too_large, "pair counting enumerates the whole field");
    if (r < 1 || (T.Q - 1) % r != 0) fail(errc::invalid_r, "r must divide q^n - 1");
    if (m < 1 || (T.Q - 1) % m != 0) fail(errc::invalid_m, "m must divide q^n - 1");
    FqCtx ctx{&T.base};
    if (p_deg(ctx, f) < 0 || !p_is_monic(ctx, f))
        fail(errc::invalid_g, "f must be a monic divisor of x^n - 1");
    multiplicities_of(T.base, fx, f); // divisibility checks
    multiplicities_of(T.base, fx, g);
    // index of f(sigma)(beta) -> count over g-free beta
    std::map<Nat, Nat> image;
    for (Nat i = 0; i < T.Q; i++) {
        gfe b = T.element_at(i);
        if (!is_g_free(T, fx, b, g)) continue;
        image[T.index_of(apply_poly(T, f, b))] += 1;
    }
    Nat count = 0;
    for (Nat i = 0; i < T.Q; i++) {
        gfe a = T.element_at(i);
        if (!is_m_free(T, a, m, factQ)) continue;
        auto it = image.find(T.index_of(T.pow(a, r)));
        if (it != image.end()) count += it->second;
    }
    return count;
}

} // namespace rfkn
