#include "doctest.h"
#include "sw/field.hpp"

using namespace sw;

TEST_CASE("conway polynomials match the standard small-degree values") {
    CHECK(conway_poly(1) == 0b11u);
    CHECK(conway_poly(2) == 0b111u);
    CHECK(conway_poly(3) == 0b1011u);
    CHECK(conway_poly(4) == 0b10011u);
    CHECK(conway_poly(5) == 0b100101u);
    CHECK(conway_poly(6) == 0b1011011u);
    CHECK(conway_poly(7) == 0b10000011u);
    CHECK(conway_poly(8) == 0b100011101u);
}

TEST_CASE("GF(2): the prime field") {
    Field F = field_create(1);
    CHECK(F.q() == 2);
    CHECK(F.base.add(1, 1) == 0);
    CHECK(F.base.mul(1, 1) == 1);
    CHECK(F.delta == 1);
    CHECK(F.ext.mul_order(F.xi) == 3);
    CHECK(F.base.trace_f2(1) == 1);
}

TEST_CASE("GF(4): exhaustive multiplication table facts") {
    Field F = field_create(2);
    CHECK(F.q() == 4);
    uint16_t g = F.base.gen();
    CHECK(F.base.mul_order(g) == 3);
    CHECK(F.base.pow(g, 3) == 1);
    CHECK(g != 1);
    // g^2 + g + 1 = 0 for the Conway generator
    CHECK((F.base.mul(g, g) ^ g ^ 1) == 0);
    CHECK(F.base.trace_f2(1) == 0);
    CHECK(F.base.trace_f2(g) == 1);
    // field axioms, exhaustively
    for (uint16_t x = 0; x < 4; ++x)
        for (uint16_t y = 0; y < 4; ++y) {
            CHECK(F.base.mul(x, y) == F.base.mul(y, x));
            if (x) CHECK(F.base.mul(x, F.base.inv(x)) == 1);
        }
}

TEST_CASE("GF(16): generator order 15") {
    Field F = field_create(4);
    CHECK(F.base.mul_order(F.base.gen()) == 15);
    CHECK(F.ext.q == 256);
}

TEST_CASE("Frobenius is additive and multiplicative for a <= 4") {
    for (int a = 1; a <= 4; ++a) {
        Field F = field_create(a);
        for (uint32_t x = 0; x < F.q(); ++x)
            for (uint32_t y = 0; y < F.q(); ++y) {
                uint16_t fx = F.base.frob((uint16_t)x), fy = F.base.frob((uint16_t)y);
                CHECK(F.base.frob((uint16_t)(x ^ y)) == (fx ^ fy));
                CHECK(F.base.frob(F.base.mul((uint16_t)x, (uint16_t)y)) == F.base.mul(fx, fy));
            }
    }
}

TEST_CASE("absolute trace is GF(2)-linear and surjective for every a <= 8") {
    for (int a = 1; a <= 8; ++a) {
        Field F = field_create(a);
        bool hit1 = false;
        for (uint32_t x = 0; x < F.q(); ++x) {
            int tx = F.base.trace_f2((uint16_t)x);
            if (tx == 1) hit1 = true;
            for (uint32_t y = x; y < F.q(); ++y)
                CHECK(F.base.trace_f2((uint16_t)(x ^ y)) ==
                      (tx ^ F.base.trace_f2((uint16_t)y)));
        }
        CHECK(hit1);
    }
}

TEST_CASE("primitive roots: delta and xi orders") {
    SUBCASE("q=2") {
        Field F = field_create(1);
        CHECK(F.delta == 1);
        CHECK(F.ext.mul_order(F.xi) == 3);
    }
    SUBCASE("q=4") {
        Field F = field_create(2);
        CHECK(F.base.mul_order(F.delta) == 3);
        CHECK(F.ext.mul_order(F.xi) == 5);
    }
    SUBCASE("q=8") {
        Field F = field_create(3);
        CHECK(F.ext.mul_order(F.xi) == 9);
    }
    SUBCASE("xi powers below q+1 are nontrivial") {
        for (int a = 1; a <= 4; ++a) {
            Field F = field_create(a);
            uint32_t q = F.q();
            CHECK(F.ext.pow(F.xi, q + 1) == 1);
            for (uint32_t k = 1; k <= q; ++k) CHECK(F.ext.pow(F.xi, k) != 1);
        }
    }
}

TEST_CASE("subfield embedding is a ring map for every a <= 8") {
    for (int a = 1; a <= 8; ++a) {
        Field F = field_create(a);
        uint32_t q = F.q();
        uint32_t step = q <= 16 ? 1 : 7;   // exhaustive for small q, sampled above
        for (uint32_t x = 0; x < q; x += step)
            for (uint32_t y = 0; y < q; y += step) {
                uint16_t ex = F.embed((uint16_t)x), ey = F.embed((uint16_t)y);
                CHECK(F.embed((uint16_t)(x ^ y)) == (ex ^ ey));
                CHECK(F.embed(F.base.mul((uint16_t)x, (uint16_t)y)) == F.ext.mul(ex, ey));
            }
        // x -> x^q fixes exactly the embedded subfield
        int fixed = 0;
        for (uint32_t z = 0; z < F.ext.q; z += (F.ext.q > 4096 ? 13 : 1)) {
            uint16_t zq = F.ext.pow((uint16_t)z, q);
            if (z < q) CHECK(F.ext.pow(F.embed((uint16_t)z), q) == F.embed((uint16_t)z));
            if (zq == z) ++fixed;
        }
        if (F.ext.q <= 4096) CHECK(fixed == (int)q);
    }
}

TEST_CASE("field_create rejects out-of-range degrees") {
    CHECK_THROWS(field_create(0));
    CHECK_THROWS(field_create(9));
}

TEST_CASE("FieldElem log representation round trip") {
    Field F = field_create(3);
    for (uint32_t v = 0; v < F.q(); ++v) {
        FieldElem e = FieldElem::from_raw(F.base, (uint16_t)v);
        CHECK(e.raw(F.base) == v);
        if (v == 0) CHECK(e.zero);
    }
}
