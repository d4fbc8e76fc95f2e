#include "rfkn/factorization.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include "rfkn/error.hpp"

#ifndef RFKN_DATA_DIR
#define RFKN_DATA_DIR "data"
#endif

namespace rfkn {

unsigned int_factorization::hidden_prime_cap() const {
    if (complete()) return 0;
    Nat floor = cofactor_floor < 2 ? Nat(2) : cofactor_floor;
    unsigned cap = 0;
    Nat acc = floor;
    while (acc <= cofactor) {
        cap++;
        acc *= floor;
    }
    return cap == 0 ? 1 : cap;
}

void int_factorization::check() const {
    Nat prod = cofactor;
    const Nat* prev = nullptr;
    for (const auto& f : factors) {
        if (f.prime < 2 || f.exp == 0)
            fail(errc::bad_input, "malformed factorization of " + value.get_str());
        if (prev && !(*prev < f.prime))
            fail(errc::bad_input, "factor list of " + value.get_str() + " not increasing");
        prev = &f.prime;
        prod *= nat_pow(f.prime, f.exp);
    }
    if (prod != value)
        fail(errc::bad_input, "factorization of " + value.get_str() + " does not multiply back");
}

namespace {

// Brent's cycle variant of Pollard rho; returns 1 when the budget runs out
Nat brent_rho(const Nat& n, uint64_t budget) {
    for (unsigned long c = 1; c <= 8; c++) {
        Nat x = 2, y = 2, ys = 2, q = 1, g = 1, diff;
        unsigned long r = 1;
        const unsigned long batch = 128;
        uint64_t iter = 0;
        while (g == 1 && iter < budget) {
            x = y;
            for (unsigned long i = 0; i < r; i++) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += batch) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; i++) {
                    y = (y * y + c) % n;
                    diff = x - y;
                    mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
                    q = q * diff % n;
                }
                g = nat_gcd(q, n);
                iter += lim;
            }
            r *= 2;
        }
        if (g == n) { // overshot: replay one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                diff = x - ys;
                mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
                g = nat_gcd(diff, n);
            }
        }
        if (g != 1 && g != n) return g;
    }
    return 1;
}

struct prime_acc {
    std::map<Nat, std::pair<unsigned, bool>> primes; // prime -> (exp, probable)
    Nat cofactor = 1;
    bool incomplete = false;

    void add(const Nat& p, unsigned exp, bool probable) {
        auto& slot = primes[p];
        slot.first += exp;
        slot.second |= probable;
    }
    void give_up(const Nat& composite, unsigned exp) {
        cofactor *= nat_pow(composite, exp);
        incomplete = true;
    }
};

void split_composites(prime_acc& acc, const Nat& start, unsigned start_mult, uint64_t rho_budget) {
    std::vector<std::pair<Nat, unsigned>> stack{{start, start_mult}};
    while (!stack.empty()) {
        auto [m, mult] = stack.back();
        stack.pop_back();
        primality cls = classify_prime(m);
        if (cls != primality::composite) {
            acc.add(m, mult, cls == primality::probable_prime);
            continue;
        }
        auto [b, k] = perfect_power(m);
        if (k >= 2) {
            stack.push_back({b, mult * k});
            continue;
        }
        Nat g = brent_rho(m, rho_budget);
        if (g == 1) {
            acc.give_up(m, mult);
            continue;
        }
        stack.push_back({g, mult});
        stack.push_back({m / g, mult});
    }
}

int_factorization from_acc(const Nat& value, const prime_acc& acc, const Nat& floor) {
    int_factorization out;
    out.value = value;
    for (const auto& [p, ep] : acc.primes) out.factors.push_back({p, ep.first, ep.second});
    out.cofactor = acc.cofactor;
    out.cofactor_floor = acc.incomplete ? floor : Nat(1);
    out.check();
    return out;
}

} // namespace

int_factorization factorize(const Nat& n, const factor_budget& budget) {
    if (n < 1) fail(errc::bad_input, "factorize needs a positive integer");
    prime_acc acc;
    Nat rem = n;
    for (uint64_t d = 2; d <= budget.trial_bound && rem > 1; d += (d == 2 ? 1 : 2)) {
        if (mpz_tdiv_ui(rem.get_mpz_t(), d) != 0) continue;
        unsigned e = 0;
        while (mpz_tdiv_ui(rem.get_mpz_t(), d) == 0) {
            rem /= d;
            e++;
        }
        acc.add(Nat(static_cast<unsigned long>(d)), e, false);
        Nat dd = Nat(static_cast<unsigned long>(d)) * d;
        if (dd > rem) break; // remainder is 1 or prime
    }
    if (rem > 1) split_composites(acc, rem, 1, budget.rho_iterations);
    return from_acc(n, acc, Nat(static_cast<unsigned long>(budget.trial_bound)) + 1);
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// `N = p1^e1 * p2 * ... [* C?]`, floor applied to any residual
int_factorization parse_factor_line(const std::string& line, const Nat& floor) {
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(errc::bad_input, "factor line without '=': " + line);
    int_factorization f;
    f.value = Nat(trim(line.substr(0, eq)), 10);
    std::string rhs = trim(line.substr(eq + 1));
    std::stringstream ss(rhs);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        tok = trim(tok);
        if (tok.empty()) fail(errc::bad_input, "empty factor in: " + line);
        if (tok.back() == '?') {
            f.cofactor = Nat(tok.substr(0, tok.size() - 1), 10);
            f.cofactor_floor = floor;
            continue;
        }
        size_t car = tok.find('^');
        factor_entry fe;
        fe.prime = Nat(car == std::string::npos ? tok : tok.substr(0, car), 10);
        fe.exp = car == std::string::npos ? 1 : unsigned(std::stoul(tok.substr(car + 1)));
        if (fe.prime == 1 && fe.exp == 1 && f.value == 1) continue; // `1 = 1`
        f.factors.push_back(fe);
    }
    return f;
}

} // namespace

factor_table factor_table::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_input, "cannot open factor table: " + path);
    factor_table t;
    std::string line;
    while (std::getline(in, line)) {
        std::string s = trim(line);
        if (s.empty()) continue;
        if (s[0] == '#') {
            size_t pos = s.find("residual-floor:");
            if (pos != std::string::npos) t.residual_floor_ = Nat(trim(s.substr(pos + 15)));
            continue;
        }
        int_factorization f = parse_factor_line(s, t.residual_floor_);
        f.check();
        for (auto& fe : f.factors) {
            primality cls = classify_prime(fe.prime);
            if (cls == primality::composite)
                fail(errc::bad_input, "composite listed as prime in table: " + fe.prime.get_str());
            fe.probable = cls == primality::probable_prime;
        }
        t.entries_[f.value] = std::move(f);
    }
    return t;
}

const factor_table* factor_table::bundled() {
    static factor_table t = [] {
        const char* env = std::getenv("RFKN_FACTOR_TABLE");
        std::string path = env ? env : std::string(RFKN_DATA_DIR) + "/factor_table_11.txt";
        return load(path);
    }();
    return &t;
}

const int_factorization* factor_table::lookup(const Nat& value) const {
    auto it = entries_.find(value);
    return it == entries_.end() ? nullptr : &it->second;
}

namespace {

int mobius_u(unsigned m) {
    int mu = 1;
    for (unsigned d = 2; d * d <= m; d++) {
        if (m % d) continue;
        m /= d;
        if (m % d == 0) return 0;
        mu = -mu;
    }
    if (m > 1) mu = -mu;
    return mu;
}

} // namespace

Nat cyclotomic_value(unsigned d, const Nat& q) {
    if (d == 0 || q < 2) fail(errc::bad_input, "cyclotomic_value needs d >= 1, q >= 2");
    Nat num = 1, den = 1;
    for (unsigned e = 1; e <= d; e++) {
        if (d % e) continue;
        int mu = mobius_u(d / e);
        if (mu == 0) continue;
        (mu > 0 ? num : den) *= nat_pow(q, e) - 1;
    }
    return num / den;
}

int_factorization factorize_qn_minus_1(const Nat& q, unsigned n, const factor_table* table,
                                       const factor_budget& budget) {
    if (q < 2 || n == 0) fail(errc::bad_input, "factorize_qn_minus_1 needs q >= 2, n >= 1");
    auto [base, pw] = perfect_power(q);
    unsigned m = n;
    if (is_prime(base))
        m = pw * n;
    else
        base = q; // composite non-prime-power: the plain Phi_d(q) split still works
    prime_acc acc;
    Nat floor = Nat(static_cast<unsigned long>(budget.trial_bound)) + 1;
    for (unsigned e = 1; e <= m; e++) {
        if (m % e) continue;
        Nat val = cyclotomic_value(e, base);
        if (val == 1) continue;
        const int_factorization* piece = nullptr;
        std::optional<int_factorization> cached = cache_lookup(val);
        if (cached) piece = &*cached;
        if (!piece && table) piece = table->lookup(val);
        int_factorization fresh;
        if (!piece) {
            fresh = factorize(val, budget);
            if (nat_bits(val) > 64) cache_store(fresh);
            piece = &fresh;
        }
        for (const auto& fe : piece->factors) acc.add(fe.prime, fe.exp, fe.probable);
        if (!piece->complete()) {
            acc.cofactor *= piece->cofactor;
            acc.incomplete = true;
            if (piece->cofactor_floor > 1 && (floor == 1 || piece->cofactor_floor < floor))
                floor = piece->cofactor_floor;
        }
    }
    return from_acc(nat_pow(q, n) - 1, acc, floor);
}

Nat euler_phi(const int_factorization& f) {
    if (!f.complete())
        fail(errc::incomplete_factorization, "euler_phi needs a complete factorization");
    Nat r = 1;
    for (const auto& fe : f.factors) r *= nat_pow(fe.prime, fe.exp - 1) * (fe.prime - 1);
    return r;
}

Nat w_int(const int_factorization& f) {
    if (!f.complete())
        fail(errc::incomplete_factorization, "w_int needs a complete factorization");
    Nat r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), f.omega());
    return r;
}

std::pair<Nat, Nat> w_int_bounds(const int_factorization& f) {
    Nat lo = 1, hi = 1;
    size_t extra_lo = f.complete() ? 0 : 1;
    mpz_mul_2exp(lo.get_mpz_t(), lo.get_mpz_t(), f.omega() + extra_lo);
    mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), f.omega() + f.hidden_prime_cap());
    return {lo, hi};
}

std::string format_factorization(const int_factorization& f) {
    std::ostringstream out;
    out << f.value.get_str() << " = ";
    bool first = true;
    for (const auto& fe : f.factors) {
        if (!first) out << " * ";
        first = false;
        out << fe.prime.get_str();
        if (fe.exp > 1) out << '^' << fe.exp;
    }
    if (!f.complete()) {
        if (!first) out << " * ";
        first = false;
        out << f.cofactor.get_str() << '?';
    }
    if (first) out << 1;
    return out.str();
}

namespace {

std::map<Nat, int_factorization>& cache_map() {
    static std::map<Nat, int_factorization> m;
    static bool loaded = false;
    if (!loaded) {
        loaded = true;
        const char* dir = std::getenv("RFKN_CACHE");
        if (dir) {
            std::ifstream in(std::string(dir) + "/factorizations.txt");
            std::string line;
            while (in && std::getline(in, line)) {
                std::string s = trim(line);
                if (s.empty() || s[0] == '#') continue;
                Nat floor = 1;
                size_t semi = s.find(";floor=");
                if (semi != std::string::npos) {
                    floor = Nat(trim(s.substr(semi + 7)));
                    s = trim(s.substr(0, semi));
                }
                try {
                    int_factorization f = parse_factor_line(s, floor);
                    f.check();
                    m[f.value] = std::move(f);
                } catch (const error&) {
                    // stale or hand-edited cache lines are skipped, not fatal
                }
            }
        }
    }
    return m;
}

} // namespace

void cache_store(const int_factorization& f) {
    auto& m = cache_map();
    auto it = m.find(f.value);
    // never replace a complete cached entry by a weaker one
    if (it != m.end() && it->second.complete() && !f.complete()) return;
    m[f.value] = f;
    const char* dir = std::getenv("RFKN_CACHE");
    if (!dir) return;
    std::ofstream out(std::string(dir) + "/factorizations.txt", std::ios::app);
    if (!out) return;
    out << format_factorization(f);
    if (!f.complete()) out << " ;floor=" << f.cofactor_floor.get_str();
    out << '\n';
}

std::optional<int_factorization> cache_lookup(const Nat& value) {
    auto& m = cache_map();
    auto it = m.find(value);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

} // namespace rfkn
