#include <doctest.h>
#include "rfkn/error.hpp"
#include "rfkn/witness.hpp"

using namespace rfkn;

TEST_CASE("exhaustive search matches a brute-force scan") {
    // F_9 over F_3, r = 2, k = 1
    Tower T = make_tower(3, 1, 2);
    int_factorization factQ = factorize_qn_minus_1(3, 2);
    Nat M = (T.Q - 1) / 2;
    uint64_t first = 0;
    bool found = false;
    for (uint64_t i = 0; i < 9 && !found; i++) {
        gfe a = T.element_at(i);
        if (T.is_zero(a)) continue;
        if (mult_order(T, a, factQ) == M && normality_k(T, a) == 1) {
            first = i;
            found = true;
        }
    }
    auto w = search_witness(3, 1, 2, 2, 1, search_strategy::exhaustive, 1);
    REQUIRE(w.has_value() == found);
    if (found) {
        CHECK(w->candidate_index == first);
        CHECK(w->order == M);
        CHECK(w->gcd_degree == 1);
        std::string why;
        CHECK(verify_witness(*w, &why));
        CHECK(why.empty());
    }
}

TEST_CASE("random strategies certify and are reproducible") {
    for (search_strategy st : {search_strategy::random_direct, search_strategy::random_pair}) {
        auto w = search_witness(2, 2, 3, 3, 0, st, 99);
        REQUIRE(w.has_value());
        CHECK(w->order == 21);
        CHECK(w->gcd_degree == 0);
        CHECK(w->strategy == strategy_name(st));
        std::string why;
        CHECK(verify_witness(*w, &why));

        auto again = search_witness(2, 2, 3, 3, 0, st, 99);
        REQUIRE(again.has_value());
        CHECK(again->candidate_index == w->candidate_index);
        CHECK(again->element == w->element);

        // serialization round trip preserves everything the verifier needs
        witness_record back = witness_from_json(witness_to_json(*w));
        CHECK(back.element == w->element);
        CHECK(back.order == w->order);
        CHECK(back.order_primes == w->order_primes);
        CHECK(back.base_modulus == w->base_modulus);
        CHECK(back.ext_modulus == w->ext_modulus);
        CHECK(verify_witness(back));
    }
}

TEST_CASE("verification rejects tampering") {
    auto w = search_witness(3, 1, 2, 2, 1, search_strategy::exhaustive, 1);
    REQUIRE(w.has_value());

    witness_record bad = *w;
    bad.order = bad.order * 2;
    std::string why;
    CHECK(!verify_witness(bad, &why));
    CHECK(!why.empty());

    bad = *w;
    bad.k = 0; // claims normal, element is 1-normal
    CHECK(!verify_witness(bad, &why));

    bad = *w;
    Tower T = make_tower(3, 1, 2);
    bad.element = T.add(bad.element, T.one());
    CHECK(!verify_witness(bad, &why));

    bad = *w;
    bad.order_primes.pop_back(); // certificate no longer covers the order
    CHECK(!verify_witness(bad, &why));

    bad = *w;
    bad.r = 4; // order * r != q^n - 1
    CHECK(!verify_witness(bad, &why));
}

TEST_CASE("search respects its budget") {
    search_budget one;
    one.max_candidates = 1;
    // index 0 is the zero element, never a witness
    auto w = search_witness(3, 1, 2, 2, 1, search_strategy::exhaustive, 1, one);
    CHECK(!w.has_value());
}

TEST_CASE("invalid parameters surface as errors") {
    CHECK_THROWS_AS(search_witness(3, 1, 2, 3, 1, search_strategy::exhaustive, 1), error);
}
