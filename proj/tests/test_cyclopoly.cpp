#include <doctest.h>
#include <algorithm>
#include "rfkn/cyclopoly.hpp"
#include "rfkn/error.hpp"
#include "rfkn/polyring.hpp"

using namespace rfkn;

namespace {

// multiply all factors back together, with multiplicities
polyq refold(const Fq& K, const xn1_factorization& fx) {
    FqCtx C{&K};
    polyq acc = p_one(C);
    for (const poly_factor& pf : fx.factors)
        for (unsigned e = 0; e < pf.mult; e++) acc = p_mul(C, acc, pf.f);
    return acc;
}

} // namespace

TEST_CASE("degree profile without field arithmetic") {
    // x^6 - 1 over F_3: n = 2 * 3, so (x^2 - 1)^3
    xn1_profile p = profile_xn1(3, 3, 6);
    CHECK(p.multiplicity == 3);
    CHECK(p.degrees == std::vector<unsigned>{1, 1});
    CHECK(p.w() == 4);

    // x^8 - 1 over F_3: cosets of 3 mod 8 are {0} {1,3} {2,6} {4} {5,7}
    xn1_profile p8 = profile_xn1(3, 3, 8);
    CHECK(p8.multiplicity == 1);
    CHECK(p8.degrees == std::vector<unsigned>{1, 1, 2, 2, 2});

    // huge q only matters through q mod n
    xn1_profile big = profile_xn1(nat_pow(Nat(11), 20), 11, 7);
    CHECK(big.degrees.size() <= 7);
    unsigned total = 0;
    for (unsigned d : big.degrees) total += d;
    CHECK(total == 7);
}

TEST_CASE("profile agrees with the concrete factorization") {
    for (auto [p, s, n] : std::vector<std::array<unsigned, 3>>{{2, 1, 1},
                                                               {2, 1, 4},
                                                               {2, 1, 7},
                                                               {2, 2, 5},
                                                               {3, 1, 6},
                                                               {3, 1, 8},
                                                               {3, 2, 4},
                                                               {5, 1, 8},
                                                               {7, 1, 6},
                                                               {11, 1, 7}}) {
        Fq K = make_base_field(p, s);
        xn1_factorization fx = factor_xn1(K, n);
        xn1_profile prof = profile_xn1(K.q, p, n);
        std::vector<unsigned> concrete;
        for (const poly_factor& pf : fx.factors) {
            concrete.push_back(unsigned(p_deg(pf.f)));
            CHECK(pf.mult == prof.multiplicity);
            CHECK(p_is_irreducible(FqCtx{&K}, pf.f));
        }
        std::sort(concrete.begin(), concrete.end());
        CHECK(concrete == prof.degrees);
        // and the product recovers x^n - 1
        FqCtx C{&K};
        CHECK(p_eq(C, refold(K, fx), xn_minus_1(K, n)));
        // determinism
        xn1_factorization again = factor_xn1(K, n);
        REQUIRE(again.factors.size() == fx.factors.size());
        for (size_t i = 0; i < fx.factors.size(); i++)
            CHECK(p_eq(C, again.factors[i].f, fx.factors[i].f));
    }
}

TEST_CASE("unit group orders sum to q^n") {
    // sum of phi_q(h) over all monic divisors h of x^n - 1
    for (auto [p, s, n] : std::vector<std::array<unsigned, 3>>{
             {3, 1, 4}, {2, 1, 6}, {2, 2, 3}, {5, 1, 4}}) {
        Fq K = make_base_field(p, s);
        FqCtx C{&K};
        xn1_factorization fx = factor_xn1(K, n);
        size_t m = fx.factors.size();
        std::vector<unsigned> take(m, 0);
        Nat total = 0;
        while (true) {
            polyq h = p_one(C);
            for (size_t i = 0; i < m; i++)
                for (unsigned e = 0; e < take[i]; e++) h = p_mul(C, h, fx.factors[i].f);
            total += phi_q(K, fx, h);
            size_t i = 0;
            while (i < m && take[i] == fx.factors[i].mult) take[i++] = 0;
            if (i == m) break;
            take[i]++;
        }
        CHECK(total == nat_pow(Nat(K.q), n));
    }
}

TEST_CASE("poly mobius and W") {
    Fq K = make_base_field(3, 1);
    FqCtx C{&K};
    xn1_factorization fx = factor_xn1(K, 4); // (x-1)(x+1)(x^2+1)
    REQUIRE(fx.factors.size() == 3);
    CHECK(w_poly(K, fx, xn_minus_1(K, 4)) == 8);
    CHECK(mobius_q(K, fx, p_one(C)) == 1);
    CHECK(mobius_q(K, fx, fx.factors[0].f) == -1);
    CHECK(mobius_q(K, fx, p_mul(C, fx.factors[0].f, fx.factors[1].f)) == 1);
    CHECK(mobius_q(K, fx, p_mul(C, fx.factors[0].f, fx.factors[0].f)) == 0);
    CHECK(phi_q(K, fx, fx.factors[2].f) == 8); // q^2 - 1
    CHECK(phi_q(K, fx, p_one(C)) == 1);
}

TEST_CASE("degree-k divisor choices") {
    Fq K = make_base_field(3, 1);
    xn1_factorization fx = factor_xn1(K, 4);
    auto deg1 = degree_k_divisors(K, fx, 1);
    CHECK(deg1.size() == 2); // x - 1 and x + 1
    auto deg2 = degree_k_divisors(K, fx, 2);
    CHECK(deg2.size() == 2); // (x-1)(x+1) and x^2+1
    // best degree-2 choice leaves the fewest distinct complement factors
    degree_k_choice b = best_f(K, fx, 2);
    CHECK(b.w_complement <= deg2[1].w_complement);
    CHECK(b.w_complement == 2); // complement of x^2+1 is (x-1)(x+1): W=4; W of the other way is 2
    FqCtx C{&K};
    for (const auto& ch : deg2) {
        CHECK(p_deg(ch.f) == 2);
        CHECK(p_eq(C, p_mul(C, ch.f, ch.complement), xn_minus_1(K, 4)));
    }

    // degree-level and concrete agree on the best complement weight
    fprofile fp = best_fprofile(profile_xn1(K.q, K.p, 4), 2);
    CHECK(fp.w_complement() == b.w_complement);
}

TEST_CASE("missing degrees are reported") {
    // x^7 - 1 over F_2 has degrees {1, 3, 3}: no degree-2 divisor
    xn1_profile prof = profile_xn1(2, 2, 7);
    CHECK(prof.degrees == std::vector<unsigned>{1, 3, 3});
    CHECK(!has_degree_k_divisor(prof, 2));
    CHECK(has_degree_k_divisor(prof, 4));
    CHECK_THROWS_AS(best_fprofile(prof, 2), error);
    Fq K = make_base_field(2, 1);
    xn1_factorization fx = factor_xn1(K, 7);
    CHECK(degree_k_divisors(K, fx, 2).empty());
    CHECK_THROWS_AS(best_f(K, fx, 2), error);
}

TEST_CASE("multiplicity vectors") {
    Fq K = make_base_field(2, 1);
    FqCtx C{&K};
    xn1_factorization fx = factor_xn1(K, 4); // (x - 1)^4 over F_2
    REQUIRE(fx.factors.size() == 1);
    CHECK(fx.factors[0].mult == 4);
    polyq h = p_mul(C, fx.factors[0].f, fx.factors[0].f);
    CHECK(multiplicities_of(K, fx, h) == std::vector<unsigned>{2});
    CHECK(multiplicities_of(K, fx, p_one(C)) == std::vector<unsigned>{0});
    // not a divisor: x^2 + x + 1
    polyq bad{K.one(), K.one(), K.one()};
    CHECK_THROWS_AS(multiplicities_of(K, fx, bad), error);
}
