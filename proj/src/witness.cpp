#include "rfkn/witness.hpp"

#include <random>
#include <json.hpp>
#include "rfkn/error.hpp"

namespace rfkn {

const char* strategy_name(search_strategy s) {
    switch (s) {
        case search_strategy::exhaustive: return "exhaustive";
        case search_strategy::random_direct: return "random_direct";
        case search_strategy::random_pair: return "random_pair";
    }
    return "?";
}

namespace {

std::vector<Nat> primes_of(const Nat& m, const int_factorization& factQ) {
    std::vector<Nat> ps;
    for (const auto& fe : factQ.factors)
        if (m % fe.prime == 0) ps.push_back(fe.prime);
    return ps;
}

witness_record make_record(const Tower& T, const Nat& p, unsigned s, unsigned n, const Nat& r,
                           unsigned k, const gfe& a, const Nat& order,
                           const int_factorization& factQ, search_strategy strategy,
                           uint64_t seed, uint64_t index) {
    witness_record w;
    w.p = p;
    w.s = s;
    w.n = n;
    w.r = r;
    w.k = k;
    w.base_modulus = T.base.modulus;
    w.ext_modulus = T.ext_modulus;
    w.element = a;
    w.order = order;
    w.order_primes = primes_of(order, factQ);
    w.gcd_degree = k;
    w.strategy = strategy_name(strategy);
    w.seed = seed;
    w.candidate_index = index;
    return w;
}

Nat random_below(std::mt19937_64& rng, const Nat& bound) {
    Nat idx = static_cast<unsigned long>(rng());
    mpz_mul_2exp(idx.get_mpz_t(), idx.get_mpz_t(), 64);
    idx += static_cast<unsigned long>(rng());
    return idx % bound;
}

} // namespace

std::optional<witness_record> search_witness(const Nat& p, unsigned s, unsigned n, const Nat& r,
                                             unsigned k, search_strategy strategy, uint64_t seed,
                                             const search_budget& budget,
                                             const factor_table* table) {
    Tower T = make_tower(p, s, n, seed);
    if (k >= n) fail(errc::bad_input, "k must lie in [0, n-1]");
    int_factorization factQ = factorize_qn_minus_1(T.base.q, n, table);
    if (!factQ.complete())
        fail(errc::incomplete_factorization, "witness certification needs q^n - 1 fully factored");
    if (r < 1 || factQ.value % r != 0) fail(errc::invalid_r, "r must divide q^n - 1");
    Nat M = factQ.value / r; // the target order

    auto accept = [&](const gfe& a, uint64_t index) -> std::optional<witness_record> {
        if (T.is_zero(a)) return std::nullopt;
        if (normality_k(T, a) != k) return std::nullopt;
        if (mult_order(T, a, factQ) != M) return std::nullopt;
        return make_record(T, p, s, n, r, k, a, M, factQ, strategy, seed, index);
    };

    switch (strategy) {
        case search_strategy::exhaustive: {
            Nat limit = T.Q;
            for (uint64_t i = 0; i < budget.max_candidates && Nat(i) < limit; i++) {
                auto w = accept(T.element_at(i), i);
                if (w) return w;
            }
            return std::nullopt;
        }
        case search_strategy::random_direct: {
            gfe gamma = find_primitive(T, factQ, seed);
            std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ull);
            for (uint64_t i = 0; i < budget.max_candidates; i++) {
                Nat j = random_below(rng, M) + 1;
                if (nat_gcd(j, M) != 1) continue; // order would drop below (q^n-1)/r
                gfe a = T.pow(gamma, r * j);      // r-primitive by construction
                if (normality_k(T, a) != k) continue;
                return make_record(T, p, s, n, r, k, a, M, factQ, strategy, seed, i);
            }
            return std::nullopt;
        }
        case search_strategy::random_pair: {
            xn1_factorization fx = factor_xn1(T.base, n);
            degree_k_choice choice = best_f(T.base, fx, k);
            std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dull);
            for (uint64_t i = 0; i < budget.max_candidates; i++) {
                gfe beta = T.element_at(random_below(rng, T.Q));
                if (normality_k(T, beta) != 0) continue;
                gfe a = apply_poly(T, choice.f, beta); // k-normal by construction
                if (T.is_zero(a) || mult_order(T, a, factQ) != M) continue;
                return make_record(T, p, s, n, r, k, a, M, factQ, strategy, seed, i);
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

namespace {

bool reject(std::string* why, const std::string& reason) {
    if (why) *why = reason;
    return false;
}

} // namespace

bool verify_witness(const witness_record& w, std::string* why, const factor_table* table) {
    (void)table; // the certificate carries everything it needs
    if (classify_prime(w.p) == primality::composite) return reject(why, "p is not prime");
    if (w.p >= Nat(1) << 31) return reject(why, "p out of range");
    if (w.s == 0 || w.n == 0 || w.k >= w.n) return reject(why, "bad field shape");

    Fq F;
    F.p = nat_to_ulong(w.p);
    F.s = w.s;
    F.modulus = w.base_modulus;
    mpz_ui_pow_ui(F.q.get_mpz_t(), F.p, F.s);
    if (F.modulus.size() != w.s + 1 || F.modulus[w.s] != 1)
        return reject(why, "base modulus is not monic of degree s");
    for (fp_t c : F.modulus)
        if (c >= F.p) return reject(why, "base modulus coefficient out of range");
    FpCtx pctx{F.p};
    if (w.s > 1 && !p_is_irreducible(pctx, F.modulus))
        return reject(why, "base modulus is reducible");

    Tower T;
    T.base = F;
    T.n = w.n;
    T.ext_modulus = w.ext_modulus;
    mpz_pow_ui(T.Q.get_mpz_t(), F.q.get_mpz_t(), w.n);
    if (T.ext_modulus.size() != w.n + 1 || !F.eq(T.ext_modulus[w.n], F.one()))
        return reject(why, "extension modulus is not monic of degree n");
    for (const fq_t& c : T.ext_modulus) {
        if (c.size() != w.s) return reject(why, "extension modulus coefficient malformed");
        for (fp_t d : c)
            if (d >= F.p) return reject(why, "extension modulus coefficient out of range");
    }
    FqCtx qctx{&F};
    if (w.n > 1 && !p_is_irreducible(qctx, T.ext_modulus))
        return reject(why, "extension modulus is reducible");
    T.init_frobenius();

    if (w.element.size() != w.n) return reject(why, "element has the wrong shape");
    for (const fq_t& c : w.element) {
        if (c.size() != w.s) return reject(why, "element coefficient malformed");
        for (fp_t d : c)
            if (d >= F.p) return reject(why, "element coefficient out of range");
    }
    if (T.is_zero(w.element)) return reject(why, "element is zero");

    if (w.r < 1 || (T.Q - 1) % w.r != 0) return reject(why, "r does not divide q^n - 1");
    if (w.order * w.r != T.Q - 1) return reject(why, "order is not (q^n - 1)/r");

    if (!T.eq(T.pow(w.element, w.order), T.one()))
        return reject(why, "element^order != 1");
    // the prime list must exhaust the order: strip every listed prime and
    // demand nothing is left, then check the order cannot drop
    Nat rest = w.order;
    for (const Nat& ell : w.order_primes) {
        if (ell < 2 || classify_prime(ell) == primality::composite)
            return reject(why, "order_primes entry is not prime");
        if (rest % ell != 0) return reject(why, "order_primes entry does not divide the order");
        while (rest % ell == 0) rest /= ell;
        if (T.eq(T.pow(w.element, w.order / ell), T.one()))
            return reject(why, "element^(order/" + ell.get_str() + ") = 1");
    }
    if (rest != 1) return reject(why, "order_primes does not cover the order");

    if (w.gcd_degree != w.k) return reject(why, "gcd degree disagrees with k");
    if (normality_k(T, w.element) != w.k) return reject(why, "element is not k-normal");
    return true;
}

std::string witness_to_json(const witness_record& w) {
    nlohmann::json j;
    j["p"] = w.p.get_str();
    j["s"] = w.s;
    j["n"] = w.n;
    j["r"] = w.r.get_str();
    j["k"] = w.k;
    j["base_modulus"] = w.base_modulus;
    nlohmann::json em = nlohmann::json::array();
    for (const fq_t& c : w.ext_modulus) em.push_back(c);
    j["ext_modulus"] = em;
    nlohmann::json el = nlohmann::json::array();
    for (const fq_t& c : w.element) el.push_back(c);
    j["element"] = el;
    j["order"] = w.order.get_str();
    nlohmann::json op = nlohmann::json::array();
    for (const Nat& x : w.order_primes) op.push_back(x.get_str());
    j["order_primes"] = op;
    j["gcd_degree"] = w.gcd_degree;
    j["strategy"] = w.strategy;
    j["seed"] = w.seed;
    j["candidate_index"] = w.candidate_index;
    return j.dump(2);
}

witness_record witness_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    witness_record w;
    w.p = Nat(j.at("p").get<std::string>(), 10);
    w.s = j.at("s").get<unsigned>();
    w.n = j.at("n").get<unsigned>();
    w.r = Nat(j.at("r").get<std::string>(), 10);
    w.k = j.at("k").get<unsigned>();
    w.base_modulus = j.at("base_modulus").get<std::vector<fp_t>>();
    for (const auto& c : j.at("ext_modulus")) w.ext_modulus.push_back(c.get<fq_t>());
    for (const auto& c : j.at("element")) w.element.push_back(c.get<fq_t>());
    w.order = Nat(j.at("order").get<std::string>(), 10);
    for (const auto& x : j.at("order_primes")) w.order_primes.push_back(Nat(x.get<std::string>(), 10));
    w.gcd_degree = j.at("gcd_degree").get<unsigned>();
    w.strategy = j.at("strategy").get<std::string>();
    w.seed = j.at("seed").get<uint64_t>();
    w.candidate_index = j.at("candidate_index").get<uint64_t>();
    return w;
}

} // namespace rfkn
