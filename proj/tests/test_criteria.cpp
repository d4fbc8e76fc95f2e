#include <doctest.h>
#include "rfkn/criteria.hpp"
#include "rfkn/error.hpp"

using namespace rfkn;

namespace {

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code;
    }
    throw std::logic_error("expected an rfkn error");
}

} // namespace

TEST_CASE("instance validation") {
    CHECK(code_of([] { make_instance(6, 1, 2, 1, 0); }) == errc::not_prime);
    CHECK(code_of([] { make_instance(2, 4, 2, 7, 0); }) == errc::invalid_r); // 7 does not divide 255
    CHECK(code_of([] { make_instance(2, 4, 2, 1, 2); }) == errc::bad_input); // k > n - 1
    CHECK(code_of([] { make_instance(2, 1, 7, 1, 2); }) == errc::no_degree_k_divisor);
    CHECK(code_of([] { make_instance(2, 1, 0, 1, 0); }) == errc::bad_input);

    problem_instance inst = make_instance(2, 4, 2, 5, 1);
    CHECK(inst.q == 16);
    CHECK(inst.factQ.value == 255);
    CHECK(inst.factQ.complete());
    CHECK(inst.f.k == 1);
}

TEST_CASE("direct criterion on hand-checked fields") {
    // q = 16, n = 2, r = 1, k = 0: W(255) = 8, W(x^2-1) = 2 in char 2,
    // so the comparison is 16 >= 1 * 8 * 2, met with equality
    problem_instance a = make_instance(2, 4, 2, 1, 0);
    criterion_report ra = check_direct(a);
    CHECK(ra.verd == verdict::exists);
    CHECK(ra.note == "met with equality");
    CHECK(ra.details.at("W_qn1") == "8");
    CHECK(ra.details.at("W_xn1_over_f") == "2");

    // q = 32: W(1023) = 8 as well, 32 > 16 strictly
    problem_instance b = make_instance(2, 5, 2, 1, 0);
    criterion_report rb = check_direct(b);
    CHECK(rb.verd == verdict::exists);
    CHECK(rb.note.empty());

    // q = 2, n = 2: 2 < 1 * 2 * 2
    problem_instance c = make_instance(2, 1, 2, 1, 0);
    CHECK(check_direct(c).verd == verdict::inconclusive);
}

TEST_CASE("all-k criterion") {
    problem_instance a = make_instance(3, 1, 4, 1, 1); // (n-k)^2 = 9 > 3
    criterion_report ra = check_caseall(a);
    CHECK(ra.verd == verdict::not_applicable);

    problem_instance b = make_instance(2, 4, 2, 1, 1); // 2k >= n
    CHECK(check_caseall(b).verd == verdict::not_applicable);

    // q = 81, n = 2, k = 0: 81 >= 1 * 4 * W(6560) = 32
    problem_instance c = make_instance(3, 4, 2, 1, 0);
    criterion_report rc = check_caseall(c);
    CHECK(rc.verd == verdict::exists);

    CHECK(check_caseall(make_instance(2, 4, 2, 1, 0)).verd == verdict::inconclusive);
}

TEST_CASE("degenerate sieve reproduces the direct bound") {
    // no primes sieved, g = the full radical: the sieve inequality collapses
    // to the direct one, so the verdicts (and equality notes) must agree
    for (auto [p, s, n, r, k] : std::vector<std::array<unsigned, 5>>{{2, 4, 2, 1, 0},
                                                                     {2, 5, 2, 1, 0},
                                                                     {2, 1, 2, 1, 0},
                                                                     {3, 4, 2, 1, 0},
                                                                     {3, 1, 4, 2, 1},
                                                                     {5, 1, 4, 1, 1},
                                                                     {2, 2, 3, 3, 1},
                                                                     {11, 2, 7, 3, 3}}) {
        problem_instance inst = make_instance(p, s, n, r, k);
        sieve_spec degenerate;
        degenerate.g_contains.assign(inst.xprof.distinct(), true);
        criterion_report direct = check_direct(inst);
        criterion_report sieve = check_sieve(inst, degenerate);
        CHECK(sieve.verd == direct.verd);
        CHECK((sieve.note == "met with equality") == (direct.note == "met with equality"));
    }
}

TEST_CASE("auto sieve beats direct on a published survey pair") {
    // q = 11^6, n = 7, r = 3, k = 3
    problem_instance inst = make_instance(11, 6, 7, 3, 3);
    CHECK(check_direct(inst).verd == verdict::inconclusive);
    criterion_report s = check_sieve(inst);
    CHECK(s.verd == verdict::exists);
    CHECK(s.details.count("cut"));
    CHECK(s.details.count("delta"));
}

TEST_CASE("sieve spec validation") {
    problem_instance inst = make_instance(2, 4, 2, 1, 0);
    sieve_spec bad;
    bad.g_contains.assign(5, false); // wrong length
    CHECK_THROWS_AS(check_sieve(inst, bad), error);
    sieve_spec bad2;
    bad2.g_contains.assign(inst.xprof.distinct(), false);
    bad2.sieved_prime_idx = {9};
    CHECK_THROWS_AS(check_sieve(inst, bad2), error);
}

TEST_CASE("incomplete factorization produces three-way verdicts") {
    problem_instance inst = make_instance(2, 4, 2, 1, 0);
    // pretend 17 resisted: factors {3, 5}, cofactor 17, no prime below 4 in it
    int_factorization doctored;
    doctored.value = 255;
    doctored.factors = {{3, 1, false}, {5, 1, false}};
    doctored.cofactor = 17;
    doctored.cofactor_floor = 4; // hidden_prime_cap = 2
    doctored.check();
    inst.factQ = doctored;

    criterion_report rep = check_direct(inst);
    CHECK(rep.verd == verdict::indeterminate_factorization);
    CHECK(!rep.factorization_complete);
    CHECK(rep.details.count("rhs_lower"));
    CHECK(rep.details.count("rhs_upper"));

    // floor high enough that only one prime fits: bounds collapse, 16 >= 16
    inst.factQ.cofactor_floor = 7;
    criterion_report tight = check_direct(inst);
    CHECK(tight.verd == verdict::exists);
    CHECK(!tight.factorization_complete);
}

TEST_CASE("threshold preconditions") {
    problem_instance half = make_instance(2, 4, 2, 1, 1); // 2k >= n
    CHECK(code_of([&] { check_tu(half, 6, 1); }) == errc::precondition_failed);
    CHECK(code_of([&] { check_cota(half, 8); }) == errc::precondition_failed);
    CHECK(code_of([] { threshold_tu(8, 3, 3, mpq_class(1), mpq_class(1)); }) ==
          errc::precondition_failed); // t + u too small
    CHECK(code_of([] { threshold_cota(8, 3, 3, mpq_class(2)); }) == errc::precondition_failed);

    // small q fails the (n-k)^2 <= q precondition
    problem_instance small = make_instance(2, 1, 8, 1, 0);
    CHECK(code_of([&] { check_tu(small, 6, 1); }) == errc::precondition_failed);
}

TEST_CASE("tu threshold values are reproducible and monotone in q") {
    tu_values tv = threshold_tu(8, 3, 3, 6, 7);
    CHECK(tv.v == 1010); // primes strictly inside (2^6, 2^13)
    CHECK(tv.delta.sign() > 0);
    CHECK(tv.threshold.sign() > 0);
    // the (6, 7) row of the survey: ceil at three significant digits
    CHECK(ceil_to_printed(tv.threshold, "ceil_sig3") == "7.05e21");

    // a q above the threshold passes, one below does not. built by hand:
    // the tu check never touches the factorization of q^n - 1
    auto big_instance = [](unsigned s) {
        problem_instance inst;
        inst.p = 11;
        inst.s = s;
        inst.q = nat_pow(Nat(11), s);
        inst.n = 8;
        inst.r = 3;
        inst.k = 3;
        inst.xprof = profile_xn1(inst.q, inst.p, inst.n);
        inst.f = best_fprofile(inst.xprof, inst.k);
        return inst;
    };
    criterion_report ra = check_tu(big_instance(21), 6, 7); // 11^21 > 7.05e21
    CHECK(ra.verd == verdict::exists);
    CHECK(ra.precision_bits >= 256);
    CHECK(check_tu(big_instance(20), 6, 7).verd == verdict::inconclusive);
}

TEST_CASE("n = 7 refinement") {
    CHECK(code_of([] { check_n7(10); }) == errc::not_prime);
    CHECK(code_of([] { check_n7(11); }) == errc::precondition_failed);  // 11 = 2 (mod 3)
    CHECK(code_of([] { check_n7(19); }) == errc::precondition_failed);  // 19 = 5 (mod 7)
    CHECK(code_of([] { check_n7(31); }) == errc::precondition_failed);  // 31 = 3 (mod 7)

    criterion_report low = check_n7(13);
    CHECK(low.verd == verdict::inconclusive);
    CHECK(low.note == "q below the refinement window");

    // 2^61 - 1 = 1 (mod 3), = 1 (mod 7), and sits inside the window
    criterion_report in = check_n7((Nat(1) << 61) - 1);
    CHECK(in.verd == verdict::exists);
    CHECK(in.details.at("v") == "299");

    // far above the window: the plain (17/2, 19/2) row already covers it
    Nat big = nat_pow(Nat(10), 190);
    mpz_nextprime(big.get_mpz_t(), big.get_mpz_t());
    while (big % 3 != 1 || big % 7 == 3 || big % 7 == 5)
        mpz_nextprime(big.get_mpz_t(), big.get_mpz_t());
    criterion_report high = check_n7(big);
    CHECK(high.verd == verdict::inconclusive);
    CHECK(high.note.find("applies on its own") != std::string::npos);
}

TEST_CASE("auto stops at the first proof") {
    auto reports = check_auto(make_instance(2, 4, 2, 1, 0));
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].which == criterion::direct);
    CHECK(reports[0].verd == verdict::exists);

    // nothing decides this one; the whole ladder is walked
    auto all = check_auto(make_instance(2, 1, 2, 1, 1));
    CHECK(all.size() > 3);
    for (const criterion_report& r : all) CHECK(r.verd != verdict::exists);
}
