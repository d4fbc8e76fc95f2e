// command line front end: existence checks, factorizations, witness search,
// pair counting, and replay of the published numeric tables
#include <fstream>
#include <iostream>
#include <sstream>
#include <CLI11.hpp>
#include <json.hpp>
#include "rfkn/criteria.hpp"
#include "rfkn/elemprops.hpp"
#include "rfkn/error.hpp"
#include "rfkn/repro.hpp"
#include "rfkn/witness.hpp"

using namespace rfkn;
using nlohmann::json;

namespace {

struct field_args {
    std::string q;       // decimal or p^s
    Nat p;
    unsigned s = 0;
    void resolve() {
        size_t caret = q.find('^');
        if (caret != std::string::npos) {
            p = Nat(q.substr(0, caret), 10);
            s = std::stoul(q.substr(caret + 1));
            if (classify_prime(p) == primality::composite)
                fail(errc::not_prime, q.substr(0, caret) + " is not prime");
            if (s == 0) fail(errc::bad_input, "exponent must be positive");
        } else {
            split_prime_power(Nat(q, 10), p, s);
        }
    }
    Nat value() const { return nat_pow(p, s); }
};

std::string fq_str(const Fq& K, const fq_t& a) {
    if (K.s == 1) return std::to_string(a.empty() ? 0 : a[0]);
    std::ostringstream out;
    bool first = true;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!first) out << "+";
        if (i == 0 || a[i] != 1) out << a[i];
        if (i > 0) {
            if (a[i] != 1) out << "*";
            out << "y";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

std::string poly_str(const Fq& K, const polyq& f) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = f.size(); i-- > 0;) {
        if (K.is_zero(f[i])) continue;
        std::string c = fq_str(K, f[i]);
        if (!first) out << " + ";
        bool unit = c == "1";
        bool bare = c.find('+') == std::string::npos && c.find('*') == std::string::npos;
        if (i == 0) {
            out << (bare ? c : "(" + c + ")");
        } else {
            if (!unit) out << (bare ? c : "(" + c + ")") << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

json report_json(const criterion_report& rep) {
    json j;
    j["criterion"] = criterion_name(rep.which);
    j["verdict"] = verdict_name(rep.verd);
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    if (rep.precision_bits) j["precision_bits"] = (int64_t)rep.precision_bits;
    j["factorization_complete"] = rep.factorization_complete;
    if (!rep.note.empty()) j["note"] = rep.note;
    for (const auto& [k, v] : rep.details) j["details"][k] = v;
    return j;
}

void print_report(const criterion_report& rep) {
    std::cout << criterion_name(rep.which) << ": " << verdict_name(rep.verd);
    if (!rep.lhs.empty()) std::cout << "  " << rep.lhs << " vs " << rep.rhs;
    if (!rep.note.empty()) std::cout << "  (" << rep.note << ")";
    std::cout << "\n";
    for (const auto& [k, v] : rep.details) std::cout << "    " << k << " = " << v << "\n";
}

json repro_json(const repro_result& r) {
    json rows = json::array();
    for (const repro_row& row : r.rows) {
        json j{{"label", row.label},
               {"printed", row.printed},
               {"published", row.published},
               {"match", row.match},
               {"citation", row.citation}};
        if (row.printed != row.computed) j["computed"] = row.computed;
        if (!row.note.empty()) j["note"] = row.note;
        rows.push_back(j);
    }
    return json{{"suite", r.suite}, {"rows", rows}, {"all_match", r.all_match}};
}

json pairs_json(const std::vector<sn_pair>& v) {
    json a = json::array();
    for (const sn_pair& p : v) a.push_back(json::array({p.s, p.n}));
    return a;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-primitive k-normal elements over finite fields"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine readable output");

    field_args fa;
    unsigned n = 0, k = 0;
    std::string r_str = "1", m_str, via = "auto", t_str, u_str;
    std::string strategy = "exhaustive", out_path, ref_path, suite = "all";
    uint64_t seed = 1, max_cand = 10000000;

    auto* c_check = app.add_subcommand("check", "existence criteria for (q, n, r, k)");
    c_check->add_option("--q", fa.q, "field size, decimal or p^s")->required();
    c_check->add_option("--n", n, "extension degree");
    c_check->add_option("--r", r_str, "order index r");
    c_check->add_option("--k", k, "normality defect k");
    c_check->add_option("--via", via,
                        "criterion: auto, direct, sieve, caseall, tu, cota, n7");
    c_check->add_option("--t", t_str, "t parameter for tu/cota");
    c_check->add_option("--u", u_str, "u parameter for tu");

    auto* c_fint = app.add_subcommand("factor-int", "factor an integer");
    std::string fint_value;
    c_fint->add_option("value", fint_value, "integer to factor")->required();

    auto* c_fx = app.add_subcommand("factor-xn1", "factor x^n - 1 over F_q");
    c_fx->add_option("--q", fa.q)->required();
    c_fx->add_option("--n", n)->required();

    auto* c_search = app.add_subcommand("search", "find a certified witness element");
    c_search->add_option("--q", fa.q)->required();
    c_search->add_option("--n", n)->required();
    c_search->add_option("--r", r_str);
    c_search->add_option("--k", k);
    c_search->add_option("--strategy", strategy, "exhaustive, random_direct, random_pair");
    c_search->add_option("--seed", seed);
    c_search->add_option("--max-candidates", max_cand);
    c_search->add_option("--out", out_path, "write the witness record here");

    auto* c_verify = app.add_subcommand("verify-witness", "re-check a witness record");
    std::string wit_path = "-";
    c_verify->add_option("file", wit_path, "record file, - for stdin");

    auto* c_count = app.add_subcommand("count-pairs",
                                       "brute-force N_{r,f}(m, x^n-1) on a small field");
    c_count->add_option("--q", fa.q)->required();
    c_count->add_option("--n", n)->required();
    c_count->add_option("--r", r_str);
    c_count->add_option("--k", k);
    c_count->add_option("--m", m_str, "freeness modulus, default q^n - 1");

    auto* c_table = app.add_subcommand("table1", "recompute the published thresholds");
    c_table->add_option("--ref", ref_path, "reference values file");
    c_table->add_option("--suite", suite, "table1, proof, lemma, or all");

    auto* c_cor = app.add_subcommand("corollary11", "replay the characteristic-11 survey");
    c_cor->add_option("--ref", ref_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (*c_check) {
            fa.resolve();
            std::vector<criterion_report> reports;
            if (via == "n7") {
                reports.push_back(check_n7(fa.value()));
            } else {
                if (n == 0) fail(errc::bad_input, "--n is required");
                problem_instance inst = make_instance(fa.p, fa.s, n, Nat(r_str), k);
                if (via == "auto") {
                    reports = check_auto(inst);
                } else if (via == "direct") {
                    reports.push_back(check_direct(inst));
                } else if (via == "sieve") {
                    reports.push_back(check_sieve(inst));
                } else if (via == "caseall") {
                    reports.push_back(check_caseall(inst));
                } else if (via == "tu") {
                    if (t_str.empty() || u_str.empty())
                        fail(errc::bad_input, "tu needs --t and --u");
                    reports.push_back(check_tu(inst, mpq_class(t_str), mpq_class(u_str)));
                } else if (via == "cota") {
                    if (t_str.empty()) fail(errc::bad_input, "cota needs --t");
                    reports.push_back(check_cota(inst, mpq_class(t_str)));
                } else {
                    fail(errc::bad_input, "unknown criterion: " + via);
                }
            }
            bool proved = false;
            for (const criterion_report& rep : reports)
                proved = proved || rep.verd == verdict::exists;
            if (as_json) {
                json out = json::array();
                for (const criterion_report& rep : reports) out.push_back(report_json(rep));
                std::cout << out.dump(2) << "\n";
            } else {
                for (const criterion_report& rep : reports) print_report(rep);
                std::cout << (proved ? "existence proven\n" : "not decided\n");
            }
            return proved ? 0 : 1;
        }

        if (*c_fint) {
            int_factorization f = factorize(Nat(fint_value));
            if (as_json) {
                json factors = json::array();
                for (const factor_entry& fe : f.factors)
                    factors.push_back(json{{"prime", fe.prime.get_str()},
                                           {"exp", fe.exp},
                                           {"probable", fe.probable}});
                std::cout << json{{"value", f.value.get_str()},
                                  {"factors", factors},
                                  {"cofactor", f.cofactor.get_str()},
                                  {"complete", f.complete()}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << format_factorization(f) << "\n";
            }
            return f.complete() ? 0 : 1;
        }

        if (*c_fx) {
            fa.resolve();
            Fq K = make_base_field(fa.p, fa.s);
            xn1_factorization fx = factor_xn1(K, n);
            if (as_json) {
                json factors = json::array();
                for (const poly_factor& pf : fx.factors)
                    factors.push_back(json{{"poly", poly_str(K, pf.f)}, {"mult", pf.mult}});
                json out{{"q", fa.value().get_str()}, {"n", n}, {"factors", factors}};
                if (fa.s > 1) {
                    std::ostringstream mod;
                    for (size_t i = 0; i < K.modulus.size(); i++)
                        mod << (i ? " " : "") << K.modulus[i];
                    out["base_modulus"] = mod.str();
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (const poly_factor& pf : fx.factors) {
                    std::cout << poly_str(K, pf.f);
                    if (pf.mult > 1) std::cout << "   ^" << pf.mult;
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (*c_search) {
            fa.resolve();
            search_strategy st;
            if (strategy == "exhaustive") st = search_strategy::exhaustive;
            else if (strategy == "random_direct") st = search_strategy::random_direct;
            else if (strategy == "random_pair") st = search_strategy::random_pair;
            else fail(errc::bad_input, "unknown strategy: " + strategy);
            search_budget budget;
            budget.max_candidates = max_cand;
            auto w = search_witness(fa.p, fa.s, n, Nat(r_str), k, st, seed, budget);
            if (!w) {
                std::cerr << "no witness within " << max_cand << " candidates\n";
                return 1;
            }
            std::string text = witness_to_json(*w);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << text << "\n";
                std::cout << "witness written to " << out_path << "\n";
            } else {
                std::cout << text << "\n";
            }
            return 0;
        }

        if (*c_verify) {
            std::ostringstream buf;
            if (wit_path == "-") {
                buf << std::cin.rdbuf();
            } else {
                std::ifstream in(wit_path);
                if (!in) fail(errc::bad_input, "cannot open " + wit_path);
                buf << in.rdbuf();
            }
            witness_record w = witness_from_json(buf.str());
            std::string why;
            bool ok = verify_witness(w, &why);
            if (as_json)
                std::cout << json{{"ok", ok}, {"why", why}}.dump(2) << "\n";
            else
                std::cout << (ok ? "witness verifies" : "REJECTED: " + why) << "\n";
            return ok ? 0 : 1;
        }

        if (*c_count) {
            fa.resolve();
            Tower T = make_tower(fa.p, fa.s, n);
            xn1_factorization fx = factor_xn1(T.base, n);
            int_factorization factQ = factorize_qn_minus_1(fa.value(), n);
            polyq f = best_f(T.base, fx, k).f;
            Nat m = m_str.empty() ? Nat(T.Q - 1) : Nat(m_str);
            Nat count = count_pairs(T, fx, factQ, Nat(r_str), f, m, xn_minus_1(T.base, n));
            if (as_json)
                std::cout << json{{"count", count.get_str()},
                                  {"f", poly_str(T.base, f)},
                                  {"m", m.get_str()}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << count.get_str() << "  (f = " << poly_str(T.base, f) << ", m = "
                          << m.get_str() << ")\n";
            return 0;
        }

        if (*c_table) {
            std::string path = ref_path.empty() ? default_reference_path() : ref_path;
            std::vector<repro_result> results;
            if (suite == "table1" || suite == "all") results.push_back(reproduce_table1(path));
            if (suite == "proof" || suite == "all")
                results.push_back(reproduce_proof_constants(path));
            if (suite == "lemma" || suite == "all")
                results.push_back(reproduce_lemma_constants(path));
            if (results.empty()) fail(errc::bad_input, "unknown suite: " + suite);
            bool all = true;
            if (as_json) {
                json out = json::array();
                for (const repro_result& r : results) out.push_back(repro_json(r));
                std::cout << out.dump(2) << "\n";
            } else {
                for (const repro_result& r : results) std::cout << format_repro(r);
            }
            for (const repro_result& r : results) all = all && r.all_match;
            return all ? 0 : 1;
        }

        if (*c_cor) {
            std::string path = ref_path.empty() ? default_reference_path() : ref_path;
            corollary_outcome out = reproduce_corollary11(path);
            if (as_json) {
                std::cout << json{{"grid", pairs_json(out.grid)},
                                  {"exceptions", pairs_json(out.exceptions)},
                                  {"n7_direct_pass", out.n7_direct_pass},
                                  {"sieve_successes", pairs_json(out.sieve_successes)},
                                  {"residual", pairs_json(out.residual)},
                                  {"f_sensitive", pairs_json(out.f_sensitive)},
                                  {"all_match", out.rows.all_match}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << format_repro(out.rows);
                std::cout << out.grid.size() << " grid pairs tested";
                if (!out.f_sensitive.empty()) {
                    std::cout << "; divisor-sensitive:";
                    for (const sn_pair& p : out.f_sensitive)
                        std::cout << " (" << p.s << "," << p.n << ")";
                }
                std::cout << "\n";
            }
            return out.rows.all_match ? 0 : 1;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 64;
}
