#include <doctest.h>
#include "rfkn/error.hpp"
#include "rfkn/primes.hpp"

using namespace rfkn;

TEST_CASE("prime sieve") {
    std::vector<uint64_t> want{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    CHECK(primes_below(30) == want);
    CHECK(primes_below(32).size() == 11);
    CHECK(primes_below(2).empty());
}

TEST_CASE("window primes against a direct filter") {
    // (2^6, 2^7): both ends integral
    prime_window w = primes_in_window(6, 1);
    std::vector<uint64_t> direct;
    for (uint64_t p : primes_below(129))
        if (p > 64 && p < 128) direct.push_back(p);
    CHECK(w.primes == direct);
    CHECK(w.primes.size() == 13);

    // (2^6.5, 2^7): fractional lower end, p included iff p^2 > 2^13
    prime_window w2 = primes_in_window(mpq_class(13, 2), mpq_class(1, 2));
    std::vector<uint64_t> direct2;
    for (uint64_t p : primes_below(129))
        if (p * p > 8192 && p < 128) direct2.push_back(p);
    CHECK(w2.primes == direct2);

    // the boundary itself is excluded: 2^2 < 5 < 2^3 but 2, 3 sit outside (1, 2)
    prime_window w3 = primes_in_window(2, 1);
    CHECK(w3.primes == std::vector<uint64_t>{5, 7});

    CHECK_THROWS_AS(primes_in_window(40, 1), error); // beyond the sieve cap
}

TEST_CASE("a_constant satisfies its defining identity") {
    // A(t, u) = 2^v / (prod of primes below 2^t)^{1/(t+u)}
    mpq_class t = 6, u = 1;
    mpfr_prec_t prec = 256;
    std::vector<uint64_t> below = primes_below(64);
    Nat prod = 1;
    for (uint64_t p : below) prod *= p;
    BigReal a = a_constant(t, u, prec);
    BigReal lhs = a.mul(BigReal::from_nat(prod, prec).pow(
        BigReal::from_ratio(mpq_class(1) / (t + u), prec)));
    BigReal rhs = BigReal::from_nat(Nat(1) << below.size(), prec);
    BigReal rel = lhs.sub(rhs).div(rhs);
    CHECK(rel.to_double() < 1e-60);
    CHECK(rel.to_double() > -1e-60);
    CHECK(a.sign() > 0);
}

TEST_CASE("primes congruent to 1 mod 7") {
    residue7_primes ps = primes_1_mod_7(5);
    CHECK(ps.primes == std::vector<uint64_t>{29, 43, 71, 113, 127});
    CHECK(ps.products[0] == 29);
    CHECK(ps.products[1] == 29 * 43);
    CHECK(ps.inv_sums[1] == mpq_class(72, 1247));

    CHECK(largest_v_below(ps, Nat(1247)) == 2);
    CHECK(largest_v_below(ps, Nat(1246)) == 1);
    CHECK(largest_v_below(ps, Nat(28)) == 0);
    CHECK(largest_v_below(ps, BigReal::from_ui(1248)) == 2);
    CHECK(largest_v_below(ps, BigReal::from_ui(29)) == 1);
}
