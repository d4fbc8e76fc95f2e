#include "rfkn/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include "rfkn/error.hpp"
#include "rfkn/primes.hpp"

namespace rfkn {

const char* criterion_name(criterion c) {
    switch (c) {
        case criterion::direct: return "direct";
        case criterion::sieve: return "sieve";
        case criterion::caseall: return "caseall";
        case criterion::tu: return "tu";
        case criterion::cota: return "cota";
        case criterion::n7: return "n7";
    }
    return "?";
}

const char* verdict_name(verdict v) {
    switch (v) {
        case verdict::exists: return "EXISTS";
        case verdict::inconclusive: return "INCONCLUSIVE";
        case verdict::not_applicable: return "NOT_APPLICABLE";
        case verdict::indeterminate_factorization: return "INDETERMINATE_FACTORIZATION";
        case verdict::boundary: return "BOUNDARY";
    }
    return "?";
}

namespace {

std::string dec_nat(const Nat& x) {
    std::string s = x.get_str();
    return s.size() <= 40 ? s : BigReal::from_nat(x, 192).str(8);
}

std::string dec_rat(const mpq_class& x) { return BigReal::from_ratio(x, 192).str(8); }

// q^{e/2} for display
std::string dec_half_pow(const Nat& q, long e2) {
    BigReal b = BigReal::from_nat(q, 192).pow(BigReal::from_ratio(mpq_class(e2, 2), 192));
    return b.str(8);
}

mpq_class q_pow(const Nat& q, long e) {
    if (e >= 0) return mpq_class(nat_pow(q, static_cast<unsigned long>(e)));
    return mpq_class(Nat(1), nat_pow(q, static_cast<unsigned long>(-e)));
}

} // namespace

problem_instance make_instance(const Nat& p, unsigned s, unsigned n, const Nat& r, unsigned k,
                                const factor_table* table) {
    if (classify_prime(p) == primality::composite)
        fail(errc::not_prime, "characteristic " + p.get_str() + " is not prime");
    if (s == 0 || n == 0) fail(errc::bad_input, "field degrees must be positive");
    problem_instance inst;
    inst.p = p;
    inst.s = s;
    inst.n = n;
    inst.q = nat_pow(p, s);
    inst.k = k;
    if (k >= n) fail(errc::bad_input, "k must lie in [0, n-1]");
    inst.factQ = factorize_qn_minus_1(inst.q, n, table);
    if (r < 1 || inst.factQ.value % r != 0) fail(errc::invalid_r, "r must divide q^n - 1");
    inst.r = r;
    inst.xprof = profile_xn1(inst.q, p, n);
    inst.f = best_fprofile(inst.xprof, k);
    return inst;
}

namespace {

// shared exact comparison q^{n-2k} >= rhs^2 for the integer-rhs criteria;
// rhs bounds differ only when the factorization is incomplete
verdict exact_verdict(const problem_instance& inst, const Nat& rhs_lo, const Nat& rhs_hi,
                      criterion_report& rep) {
    long e = long(inst.n) - 2 * long(inst.k);
    mpq_class lhs2 = q_pow(inst.q, e);
    rep.lhs = dec_half_pow(inst.q, e);
    rep.rhs = dec_nat(rhs_hi);
    rep.factorization_complete = inst.factQ.complete();
    if (lhs2 >= mpq_class(rhs_hi * rhs_hi)) {
        if (lhs2 == mpq_class(rhs_hi * rhs_hi)) rep.note = "met with equality";
        return verdict::exists;
    }
    if (lhs2 < mpq_class(rhs_lo * rhs_lo)) return verdict::inconclusive;
    rep.note = "verdict depends on the unfactored cofactor";
    rep.details["rhs_lower"] = dec_nat(rhs_lo);
    rep.details["rhs_upper"] = dec_nat(rhs_hi);
    return verdict::indeterminate_factorization;
}

} // namespace

criterion_report check_direct(const problem_instance& inst) {
    criterion_report rep;
    rep.which = criterion::direct;
    auto [wlo, whi] = w_int_bounds(inst.factQ);
    Nat wc = inst.f.w_complement();
    rep.details["W_xn1_over_f"] = dec_nat(wc);
    rep.details["W_qn1"] = inst.factQ.complete() ? dec_nat(whi) : dec_nat(wlo) + ".." + dec_nat(whi);
    rep.verd = exact_verdict(inst, inst.r * wlo * wc, inst.r * whi * wc, rep);
    return rep;
}

criterion_report check_caseall(const problem_instance& inst) {
    criterion_report rep;
    rep.which = criterion::caseall;
    rep.factorization_complete = inst.factQ.complete();
    Nat nk2 = Nat((unsigned long)(inst.n - inst.k)) * (inst.n - inst.k);
    if (2 * inst.k >= inst.n) {
        rep.verd = verdict::not_applicable;
        rep.note = "needs k < n/2";
        return rep;
    }
    if (nk2 > inst.q) {
        rep.verd = verdict::not_applicable;
        rep.note = "needs (n-k)^2 <= q";
        return rep;
    }
    auto [wlo, whi] = w_int_bounds(inst.factQ);
    Nat mult = inst.r * (inst.n - inst.k + 2);
    rep.details["n-k+2"] = std::to_string(inst.n - inst.k + 2);
    rep.details["W_qn1"] = inst.factQ.complete() ? dec_nat(whi) : dec_nat(wlo) + ".." + dec_nat(whi);
    rep.verd = exact_verdict(inst, mult * wlo, mult * whi, rep);
    return rep;
}

namespace {

struct sieve_outcome {
    criterion_report rep;
    mpq_class margin; // lhs^2 / worst-case rhs^2, for the auto sweep
    bool applicable = false;
};

sieve_outcome sieve_eval(const problem_instance& inst, const sieve_spec& spec) {
    sieve_outcome out;
    criterion_report& rep = out.rep;
    rep.which = criterion::sieve;
    rep.factorization_complete = inst.factQ.complete();
    size_t m = inst.xprof.degrees.size();
    if (spec.g_contains.size() != m)
        fail(errc::bad_input, "g flag per irreducible factor of x^n - 1 expected");
    std::vector<bool> sieved(inst.factQ.omega(), false);
    for (size_t i : spec.sieved_prime_idx) {
        if (i >= sieved.size() || sieved[i]) fail(errc::bad_input, "bad sieved prime index");
        sieved[i] = true;
    }
    size_t cut = spec.sieved_prime_idx.size();

    // delta = 1 - sum 1/p_i - sum_{P_i not in g} 1/q^{deg P_i}, all exact
    mpq_class delta = 1;
    for (size_t i : spec.sieved_prime_idx)
        delta -= mpq_class(Nat(1), inst.factQ.factors[i].prime);
    size_t s_prime = 0, w_gtilde_exp = 0;
    mpq_class dprime = 1;
    for (size_t i = 0; i < m; i++) {
        bool in_comp = inst.f.take[i] < inst.xprof.multiplicity;
        if (spec.g_contains[i]) {
            w_gtilde_exp += in_comp;
            continue;
        }
        mpq_class term(Nat(1), nat_pow(inst.q, inst.xprof.degrees[i]));
        delta -= term;
        if (in_comp)
            s_prime++;
        else
            dprime -= term;
    }

    unsigned cap = inst.factQ.hidden_prime_cap();
    mpq_class unknown_penalty =
        cap ? mpq_class(Nat(cap), inst.factQ.cofactor_floor) : mpq_class(0);
    mpq_class delta_worst = delta - unknown_penalty;

    rep.details["cut"] = std::to_string(cut);
    rep.details["s_prime"] = std::to_string(s_prime);
    rep.details["delta"] = dec_rat(delta);
    rep.details["delta_prime"] = dec_rat(dprime);

    if (delta_worst <= 0 && delta <= 0) {
        rep.verd = verdict::not_applicable;
        rep.note = "delta <= 0 for this sieve split";
        return out;
    }

    Nat w_ell = Nat(1) << (inst.factQ.omega() - cut);
    Nat w_gt = Nat(1) << w_gtilde_exp;
    rep.details["W_ell"] = dec_nat(w_ell);
    rep.details["W_gtilde"] = dec_nat(w_gt);

    long e = long(inst.n) - 2 * long(inst.k);
    mpq_class lhs2 = q_pow(inst.q, e);
    rep.lhs = dec_half_pow(inst.q, e);

    auto rhs2_for = [&](const mpq_class& dlt, uint64_t v) -> std::optional<mpq_class> {
        if (dlt <= 0) return std::nullopt;
        mpq_class Delta = 2 + (mpq_class(v + s_prime) - dprime) / dlt;
        mpq_class rhs = mpq_class(inst.r) * w_ell * w_gt * Delta;
        return rhs * rhs;
    };

    std::optional<mpq_class> worst = rhs2_for(delta_worst, cut + cap);
    std::optional<mpq_class> best = rhs2_for(delta, cut + (cap ? 1 : 0));
    mpq_class Delta_shown = 2 + (mpq_class(cut + cap + s_prime) - dprime) /
                                     (delta_worst > 0 ? delta_worst : delta);
    rep.details["Delta"] = dec_rat(Delta_shown);

    out.applicable = true;
    if (worst) {
        mpq_class rhs = *worst;
        rep.rhs = dec_rat(mpq_class(inst.r) * w_ell * w_gt *
                          (2 + (mpq_class(cut + cap + s_prime) - dprime) / delta_worst));
        out.margin = lhs2 / rhs;
        if (lhs2 >= rhs) {
            if (lhs2 == rhs) rep.note = "met with equality";
            rep.verd = verdict::exists;
            return out;
        }
    } else {
        out.margin = 0;
        rep.note = "worst-case delta <= 0 under the unfactored cofactor";
    }
    if (best && lhs2 < *best) {
        rep.verd = verdict::inconclusive;
        return out;
    }
    rep.verd = inst.factQ.complete() ? verdict::inconclusive : verdict::indeterminate_factorization;
    if (!inst.factQ.complete() && rep.note.empty())
        rep.note = "verdict depends on the unfactored cofactor";
    if (!rep.rhs.size())
        rep.rhs = dec_rat(mpq_class(inst.r) * w_ell * w_gt);
    return out;
}

} // namespace

criterion_report check_sieve(const problem_instance& inst, const sieve_spec& spec) {
    return sieve_eval(inst, spec).rep;
}

criterion_report check_sieve(const problem_instance& inst) {
    sieve_spec spec;
    size_t m = inst.xprof.degrees.size();
    spec.g_contains.resize(m);
    for (size_t i = 0; i < m; i++)
        spec.g_contains[i] = inst.f.take[i] == inst.xprof.multiplicity;

    std::vector<size_t> order(inst.factQ.omega());
    std::iota(order.begin(), order.end(), size_t(0));
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return inst.factQ.factors[a].prime > inst.factQ.factors[b].prime;
    });

    std::optional<sieve_outcome> best;
    for (size_t cut = 0; cut <= order.size(); cut++) {
        spec.sieved_prime_idx.assign(order.begin(), order.begin() + cut);
        sieve_outcome o = sieve_eval(inst, spec);
        if (!o.applicable) break; // delta only shrinks as more primes move out
        if (!best || o.margin > best->margin) best = std::move(o);
    }
    if (!best) {
        criterion_report rep;
        rep.which = criterion::sieve;
        rep.factorization_complete = inst.factQ.complete();
        rep.verd = verdict::not_applicable;
        rep.note = "delta <= 0 for every sieve split";
        return rep;
    }
    return best->rep;
}

tu_values threshold_tu(unsigned n, unsigned k, const Nat& r, const mpq_class& t,
                       const mpq_class& u, mpfr_prec_t prec) {
    if (2 * k >= n) fail(errc::precondition_failed, "needs k < n/2");
    mpq_class tu = t + u;
    mpq_class den = tu * long(n - 2 * k) - long(2 * n);
    if (den <= 0) fail(errc::precondition_failed, "needs t + u > 2n/(n - 2k)");
    tu_values tv;
    prime_window w = primes_in_window(t, u);
    tv.v = w.v;
    tv.S = inv_sum(w.primes, prec);
    tv.delta = BigReal::from_ui(1, prec)
                   .sub(tv.S)
                   .sub(BigReal::from_ratio(mpq_class(Nat(1), Nat((unsigned long)(n - k))), prec));
    if (tv.delta.sign() <= 0) fail(errc::precondition_failed, "delta <= 0 for this window");
    tv.Delta = BigReal::from_ui(2, prec).add(
        BigReal::from_ui(w.v + n - k - 1, prec).div(tv.delta));
    tv.A = a_constant(t, u, prec);
    BigReal base = BigReal::from_nat(r, prec).mul(tv.Delta).mul(tv.A);
    tv.threshold = base.pow(BigReal::from_ratio(2 * tu / den, prec));
    return tv;
}

cota_values threshold_cota(unsigned n, unsigned k, const Nat& r, const mpq_class& t,
                           mpfr_prec_t prec) {
    if (2 * k >= n) fail(errc::precondition_failed, "needs k < n/2");
    mpq_class den = t * long(n - 2 * k) - long(2 * n);
    if (den <= 0) fail(errc::precondition_failed, "needs t > 2n/(n - 2k)");
    cota_values cv;
    BigReal A = a_constant(t, 0, prec);
    BigReal ex = BigReal::from_ratio(2 * t / den, prec);
    cv.U = BigReal::from_nat(r * (Nat(1) << (n - k)), prec).mul(A).pow(ex);
    cv.V = BigReal::from_nat(r * (n - k + 2), prec).mul(A).pow(ex);
    BigReal nk2 = BigReal::from_ui((unsigned long)(n - k) * (n - k), prec);
    BigReal mx = nk2.cmp(cv.V) >= 0 ? nk2 : cv.V;
    cv.threshold = cv.U.cmp(mx) <= 0 ? cv.U : mx;
    return cv;
}

namespace {

verdict verdict_from_order(stable_order o) {
    switch (o) {
        case stable_order::above: return verdict::exists;
        case stable_order::below: return verdict::inconclusive;
        case stable_order::equal_or_boundary: return verdict::boundary;
    }
    return verdict::inconclusive;
}

} // namespace

criterion_report check_tu(const problem_instance& inst, const mpq_class& t, const mpq_class& u) {
    if (2 * inst.k >= inst.n) fail(errc::precondition_failed, "needs k < n/2");
    if (Nat((unsigned long)(inst.n - inst.k)) * (inst.n - inst.k) > inst.q)
        fail(errc::precondition_failed, "needs (n-k)^2 <= q");
    criterion_report rep;
    rep.which = criterion::tu;
    mpfr_prec_t used = 0;
    tu_values tv;
    stable_order ord = stable_compare(
        [&](mpfr_prec_t prec) {
            tv = threshold_tu(inst.n, inst.k, inst.r, t, u, prec);
            return std::make_pair(BigReal::from_nat(inst.q, prec), tv.threshold);
        },
        0, 4096, &used);
    rep.precision_bits = used;
    rep.lhs = dec_nat(inst.q);
    rep.rhs = tv.threshold.str(8);
    rep.details["t"] = t.get_str();
    rep.details["u"] = u.get_str();
    rep.details["v"] = std::to_string(tv.v);
    rep.details["S"] = tv.S.str(8);
    rep.details["delta"] = tv.delta.str(8);
    rep.details["Delta"] = tv.Delta.str(8);
    rep.details["A"] = tv.A.str(8);
    rep.verd = verdict_from_order(ord);
    return rep;
}

criterion_report check_cota(const problem_instance& inst, const mpq_class& t) {
    criterion_report rep;
    rep.which = criterion::cota;
    mpfr_prec_t used = 0;
    cota_values cv;
    stable_order ord = stable_compare(
        [&](mpfr_prec_t prec) {
            cv = threshold_cota(inst.n, inst.k, inst.r, t, prec);
            return std::make_pair(BigReal::from_nat(inst.q, prec), cv.threshold);
        },
        0, 4096, &used);
    rep.precision_bits = used;
    rep.lhs = dec_nat(inst.q);
    rep.rhs = cv.threshold.str(8);
    rep.details["t"] = t.get_str();
    rep.details["U"] = cv.U.str(8);
    rep.details["V"] = cv.V.str(8);
    rep.verd = verdict_from_order(ord);
    return rep;
}

criterion_report check_n7(const Nat& q, const factor_table* table) {
    (void)table; // the window thresholds need no integer factorizations
    auto [b, e] = perfect_power(q);
    (void)e;
    if (q < 2 || !is_prime(b)) fail(errc::not_prime, "q must be a prime power");
    if (mpz_tdiv_ui(q.get_mpz_t(), 3) != 1)
        fail(errc::precondition_failed, "needs 3 | q^7 - 1, i.e. q = 1 (mod 3)");
    unsigned long q7 = mpz_tdiv_ui(q.get_mpz_t(), 7);
    if (q7 == 3 || q7 == 5)
        fail(errc::precondition_failed, "x^7 - 1 has no degree-3 divisor when q generates (Z/7)*");

    criterion_report rep;
    rep.which = criterion::n7;
    const mpq_class t(27, 5), cap(13100623, 10000);
    mpfr_prec_t prec0 = BigReal::default_precision();

    // recompute the committed constants and refuse to proceed if any gate breaks
    tu_values upper = threshold_tu(7, 3, 3, mpq_class(17, 2), mpq_class(19, 2), prec0);
    BigReal bound = BigReal::from_ui(1, prec0); // q_max^6 + ... + 1
    for (int i = 0; i < 6; i++) bound = bound.mul(upper.threshold).add(BigReal::from_ui(1, prec0));
    residue7_primes ps = primes_1_mod_7(310);
    size_t v = largest_v_below(ps, bound);
    if (v == 0 || v > 299)
        fail(errc::precondition_failed, "prime-product gate broke: v = " + std::to_string(v));
    mpq_class Sv = ps.inv_sums[v - 1];
    if (!(Sv < mpq_class(19113, 100000)))
        fail(errc::precondition_failed, "inverse-sum gate broke: S_v = " + dec_rat(Sv));
    mpq_class delta = 1 - Sv - mpq_class(1, 25000); // 4/q with the q > 10^5 floor
    if (!(delta > mpq_class(80883, 100000)))
        fail(errc::precondition_failed, "delta gate broke: delta = " + dec_rat(delta));
    mpq_class Delta = 2 + mpq_class((unsigned long)(v + 3)) / delta;
    if (!(Delta < cap))
        fail(errc::precondition_failed, "Delta exceeds its committed cap: " + dec_rat(Delta));

    auto lower_at = [&](mpfr_prec_t prec) {
        BigReal A = a_constant(t, 0, prec);
        return BigReal::from_ratio(3 * cap, prec).mul(A).pow(
            BigReal::from_ratio(2 * t / (t - 2), prec));
    };
    mpfr_prec_t used_lo = 0, used_hi = 0;
    BigReal lower = lower_at(prec0);
    stable_order lo = stable_compare(
        [&](mpfr_prec_t prec) {
            lower = lower_at(prec);
            return std::make_pair(BigReal::from_nat(q, prec), lower);
        },
        0, 4096, &used_lo);
    BigReal upper_hi = upper.threshold;
    stable_order hi = stable_compare(
        [&](mpfr_prec_t prec) {
            upper_hi = threshold_tu(7, 3, 3, mpq_class(17, 2), mpq_class(19, 2), prec).threshold;
            return std::make_pair(BigReal::from_nat(q, prec), upper_hi);
        },
        0, 4096, &used_hi);

    rep.precision_bits = std::max(used_lo, used_hi);
    rep.lhs = dec_nat(q);
    rep.rhs = lower.str(8);
    rep.details["lower"] = lower.str(8);
    rep.details["upper"] = upper_hi.str(8);
    rep.details["v"] = std::to_string(v);
    rep.details["S_v"] = dec_rat(Sv);
    rep.details["delta"] = dec_rat(delta);
    rep.details["Delta"] = dec_rat(Delta);
    rep.details["Delta_cap"] = dec_rat(cap);

    if (lo == stable_order::equal_or_boundary || hi == stable_order::equal_or_boundary) {
        rep.verd = verdict::boundary;
    } else if (lo == stable_order::below) {
        rep.verd = verdict::inconclusive;
        rep.note = "q below the refinement window";
    } else if (hi == stable_order::above) {
        rep.verd = verdict::inconclusive;
        rep.note = "q at or above the window; the (17/2, 19/2) row applies on its own";
    } else {
        rep.verd = verdict::exists;
    }
    return rep;
}

auto_config::auto_config() {
    const std::pair<unsigned long, unsigned long> ts[] = {{5, 1},  {27, 5}, {6, 1},  {63, 10},
                                                          {33, 5}, {34, 5}, {7, 1},  {37, 5},
                                                          {15, 2}, {41, 5}, {17, 2}, {10, 1},
                                                          {78, 5}};
    for (auto [num, den] : ts) t_grid.emplace_back(num, den);
    u_grid = {mpq_class(0), mpq_class(7), mpq_class(19, 2)};
}

std::vector<criterion_report> check_auto(const problem_instance& inst, const auto_config& cfg) {
    std::vector<criterion_report> out;
    auto done = [&](criterion_report rep) {
        out.push_back(std::move(rep));
        return cfg.stop_at_first && out.back().verd == verdict::exists;
    };
    if (done(check_direct(inst))) return out;
    if (done(check_caseall(inst))) return out;
    if (done(check_sieve(inst))) return out;
    for (const mpq_class& t : cfg.t_grid)
        for (const mpq_class& u : cfg.u_grid) {
            criterion_report rep;
            try {
                rep = sgn(u) == 0 ? check_cota(inst, t) : check_tu(inst, t, u);
            } catch (const error& err) {
                if (err.code != errc::precondition_failed && err.code != errc::window_too_large)
                    throw;
                rep.which = sgn(u) == 0 ? criterion::cota : criterion::tu;
                rep.verd = verdict::not_applicable;
                rep.note = err.what();
                rep.details["t"] = t.get_str();
                rep.details["u"] = u.get_str();
            }
            if (done(std::move(rep))) return out;
        }
    return out;
}

} // namespace rfkn
