#include <doctest.h>
#include "rfkn/elemprops.hpp"
#include "rfkn/error.hpp"
#include "rfkn/polyring.hpp"

using namespace rfkn;

namespace {

struct small_field {
    Tower T;
    xn1_factorization fx;
    int_factorization factQ;
    std::vector<gfe> all;

    small_field(unsigned p, unsigned s, unsigned n) : T(make_tower(p, s, n)) {
        fx = factor_xn1(T.base, n);
        factQ = factorize_qn_minus_1(T.base.q, n);
        for (Nat i = 0; i < T.Q; i++) all.push_back(T.element_at(i));
    }
};

Nat naive_order(const Tower& T, const gfe& a) {
    gfe x = a;
    Nat ord = 1;
    while (!(x == T.one())) {
        x = T.mul(x, a);
        ord++;
    }
    return ord;
}

} // namespace

TEST_CASE("multiplicative order matches naive repetition") {
    small_field F(3, 1, 2);
    for (const gfe& a : F.all) {
        if (F.T.is_zero(a)) {
            CHECK_THROWS_AS(mult_order(F.T, a, F.factQ), error);
            continue;
        }
        Nat ord = mult_order(F.T, a, F.factQ);
        CHECK(ord == naive_order(F.T, a));
        CHECK((F.T.Q - 1) % ord == 0);
        CHECK(r_index(F.T, a, F.factQ) * ord == F.T.Q - 1);
    }
}

TEST_CASE("normality via the gcd and via the order polynomial") {
    for (auto [p, s, n] : std::vector<std::array<unsigned, 3>>{
             {3, 1, 2}, {2, 1, 4}, {2, 2, 2}, {5, 1, 3}}) {
        small_field F(p, s, n);
        unsigned normal_count = 0;
        for (const gfe& a : F.all) {
            unsigned k = normality_k(F.T, a);
            if (F.T.is_zero(a)) {
                CHECK(k == n);
                continue;
            }
            // deg Ord(a) = n - k
            polyq h = fq_order(F.T, F.fx, a);
            CHECK(unsigned(p_deg(h)) == n - k);
            if (k == 0) normal_count++;
        }
        // the number of normal elements is phi_q(x^n - 1)
        CHECK(normal_count == phi_q(F.T.base, F.fx, xn_minus_1(F.T.base, n)));
    }
}

TEST_CASE("order polynomial annihilates minimally") {
    small_field F(3, 1, 4);
    FqCtx C{&F.T.base};
    for (const gfe& a : F.all) {
        polyq h = fq_order(F.T, F.fx, a);
        CHECK(F.T.is_zero(apply_poly(F.T, h, a)));
        // removing any single irreducible factor breaks annihilation
        std::vector<unsigned> mult = multiplicities_of(F.T.base, F.fx, h);
        for (size_t i = 0; i < mult.size(); i++) {
            if (mult[i] == 0) continue;
            polyq reduced = p_div(C, h, F.fx.factors[i].f);
            CHECK(!F.T.is_zero(apply_poly(F.T, reduced, a)));
        }
    }
}

TEST_CASE("freeness: fast form versus definitional oracle") {
    small_field F(3, 1, 2); // Q - 1 = 8
    std::vector<Nat> ms{1, 2, 4, 8};
    for (const gfe& a : F.all)
        for (const Nat& m : ms)
            CHECK(is_m_free(F.T, a, m, F.factQ) == is_m_free_oracle(F.T, a, m, F.factQ));
    CHECK_THROWS_AS(is_m_free(F.T, F.all[1], 3, F.factQ), error); // 3 does not divide 8

    FqCtx C{&F.T.base};
    std::vector<polyq> gs{p_one(C), F.fx.factors[0].f, F.fx.factors[1].f,
                          xn_minus_1(F.T.base, 2)};
    for (const gfe& a : F.all)
        for (const polyq& g : gs)
            CHECK(is_g_free(F.T, F.fx, a, g) == is_g_free_oracle(F.T, F.fx, a, g));
}

TEST_CASE("freeness oracle agreement on a second field") {
    small_field F(2, 1, 4); // Q - 1 = 15
    for (const gfe& a : F.all)
        for (const Nat& m : std::vector<Nat>{1, 3, 5, 15})
            CHECK(is_m_free(F.T, a, m, F.factQ) == is_m_free_oracle(F.T, a, m, F.factQ));
}

TEST_CASE("constructions") {
    small_field F(3, 1, 2);
    gfe gamma = find_primitive(F.T, F.factQ, 7);
    CHECK(mult_order(F.T, gamma, F.factQ) == 8);
    gfe beta = find_normal(F.T, 7);
    CHECK(normality_k(F.T, beta) == 0);

    // beta^r is r-primitive for primitive beta
    gfe a2 = construct_r_primitive(F.T, gamma, 2, F.factQ);
    CHECK(mult_order(F.T, a2, F.factQ) == 4);
    CHECK_THROWS_AS(construct_r_primitive(F.T, gamma, 3, F.factQ), error);
    CHECK_THROWS_AS(construct_r_primitive(F.T, F.T.one(), 2, F.factQ), error);

    // f(sigma)(beta) is deg(f)-normal for normal beta and f | x^n - 1
    for (const poly_factor& pf : F.fx.factors) {
        gfe c = construct_k_normal(F.T, beta, pf.f);
        CHECK(normality_k(F.T, c) == unsigned(p_deg(pf.f)));
    }
    FqCtx C{&F.T.base};
    polyq notdiv{F.T.base.from_ui(2), F.T.base.one()}; // x + 2 divides x^2-1? over F_3 yes: x+2 = x-1
    CHECK(normality_k(F.T, construct_k_normal(F.T, beta, notdiv)) == 1);
    polyq bad{F.T.base.one(), F.T.base.one(), F.T.base.one()}; // x^2+x+1 does not divide
    CHECK_THROWS_AS(construct_k_normal(F.T, beta, bad), error);
    CHECK_THROWS_AS(construct_k_normal(F.T, F.all[1], p_one(C)), error); // 1 is not normal? index 1 element
}

TEST_CASE("pair counts on F_9 over F_3") {
    small_field F(3, 1, 2);
    FqCtx C{&F.T.base};
    polyq one = p_one(C);
    polyq g = xn_minus_1(F.T.base, 2);

    // (alpha primitive, beta normal, alpha = beta): 4 pairs
    CHECK(count_pairs(F.T, F.fx, F.factQ, 1, one, 8, g) == 4);
    // r = 2 with f = x + 1: the image f(sigma)(beta) has absolute trace form;
    // no 2-primitive alpha lands on it
    polyq xp1{F.T.base.one(), F.T.base.one()};
    CHECK(count_pairs(F.T, F.fx, F.factQ, 2, xp1, 8, g) == 0);
    // m = g = 1: every (alpha, alpha) pair counts once
    CHECK(count_pairs(F.T, F.fx, F.factQ, 1, one, 1, one) == 9);
}

TEST_CASE("oracle guards") {
    small_field F(3, 1, 2);
    CHECK_THROWS_AS(count_pairs(F.T, F.fx, F.factQ, 1, p_one(FqCtx{&F.T.base}), 8,
                                xn_minus_1(F.T.base, 2), 4),
                    error); // bound too small for the 9-element field
}
