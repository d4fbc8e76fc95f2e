#include <doctest.h>
#include "rfkn/error.hpp"
#include "rfkn/gfield.hpp"
#include "rfkn/polyring.hpp"

using namespace rfkn;

TEST_CASE("prime field arithmetic") {
    Fq F = make_base_field(7, 1);
    CHECK(F.q == 7);
    fq_t three = F.from_ui(3);
    CHECK(F.mul(three, F.inv(three)) == F.one());
    CHECK(F.inv(three) == F.from_ui(5));
    CHECK(F.add(F.from_ui(5), F.from_ui(4)) == F.from_ui(2));
    CHECK(F.neg(F.from_ui(2)) == F.from_ui(5));
    CHECK(F.pow(three, 6) == F.one());
    CHECK_THROWS_AS(F.inv(F.zero()), error);
}

TEST_CASE("extension field axioms, sampled exhaustively on F_16") {
    Fq F = make_base_field(2, 4);
    REQUIRE(F.modulus.size() == 5);
    CHECK(p_is_irreducible(FpCtx{F.p}, std::vector<fp_t>(F.modulus)));
    std::vector<fq_t> all;
    for (unsigned i = 0; i < 16; i++) all.push_back(F.element_at(i));
    for (unsigned i = 0; i < 16; i++) CHECK(F.index_of(all[i]) == i);

    for (const fq_t& a : all)
        for (const fq_t& b : all) {
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.add(a, b) == F.add(b, a));
            if (!F.is_zero(b)) CHECK(F.mul(F.mul(a, b), F.inv(b)) == a);
            for (const fq_t& c : all)
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
    // multiplicative group order
    for (const fq_t& a : all)
        if (!F.is_zero(a)) CHECK(F.pow(a, 15) == F.one());
}

TEST_CASE("tower arithmetic and frobenius") {
    Tower T = make_tower(3, 1, 2);
    CHECK(T.Q == 9);
    std::vector<Tower::gfe> all;
    for (unsigned i = 0; i < 9; i++) all.push_back(T.element_at(i));
    for (unsigned i = 0; i < 9; i++) CHECK(T.index_of(all[i]) == i);
    for (const auto& a : all) {
        CHECK(T.frobenius(a) == T.pow(a, 3));
        CHECK(T.frobenius(a, 2) == a); // q^n = identity
        if (!T.is_zero(a)) {
            CHECK(T.mul(a, T.inv(a)) == T.one());
            CHECK(T.pow(a, 8) == T.one());
        }
        for (const auto& b : all) {
            CHECK(T.mul(a, b) == T.mul(b, a));
            CHECK(T.sub(T.add(a, b), b) == a);
        }
    }

    Tower U = make_tower(2, 2, 3);
    CHECK(U.Q == 64);
    CHECK(U.base.q == 4);
    for (unsigned i = 0; i < 64; i++) {
        auto a = U.element_at(i);
        CHECK(U.frobenius(a) == U.pow(a, 4));
        CHECK(U.frobenius(a, 3) == a);
        CHECK(U.frobenius(U.frobenius(a)) == U.frobenius(a, 2));
    }
    // the extension modulus is irreducible over F_4
    CHECK(p_is_irreducible(FqCtx{&U.base}, U.ext_modulus));
    // embedding respects multiplication
    for (unsigned i = 0; i < 4; i++)
        for (unsigned j = 0; j < 4; j++) {
            fq_t a = U.base.element_at(i), b = U.base.element_at(j);
            CHECK(U.mul(U.from_base(a), U.from_base(b)) == U.from_base(U.base.mul(a, b)));
        }
}

TEST_CASE("construction is deterministic in the seed") {
    Tower a = make_tower(5, 2, 3, 42);
    Tower b = make_tower(5, 2, 3, 42);
    CHECK(a.base.modulus == b.base.modulus);
    CHECK(a.ext_modulus == b.ext_modulus);
    Tower c = make_tower(5, 2, 3, 43);
    CHECK(c.Q == a.Q); // same field even if the model differs
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(make_base_field(4, 1), error);
    CHECK_THROWS_AS(make_base_field(1, 1), error);
    CHECK_THROWS_AS(make_base_field(Nat("2147483659"), 1), error); // >= 2^31
    CHECK_THROWS_AS(make_base_field(2, 0), error);
}

TEST_CASE("scalar action on the tower") {
    Tower T = make_tower(3, 2, 2);
    fq_t c = T.base.element_at(5);
    for (unsigned i = 0; i < 81; i++) {
        auto a = T.element_at(i);
        CHECK(T.scale(c, a) == T.mul(T.from_base(c), a));
    }
}
