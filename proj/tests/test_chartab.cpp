#include "doctest.h"
#include "fixtures.hpp"
#include "sw/chartab.hpp"
#include "sw/json_io.hpp"

using namespace sw;

TEST_CASE("Dixon on S_3 reproduces the hand-computed table") {
    Group G = symplectic_group(1, 2);
    ClassData cd = conjugacy_classes(G);
    CharTable T = dixon_character_table(G, cd);
    REQUIRE(T.k() == 3);
    CHECK(T.degrees == std::vector<long long>{1, 1, 2});
    const CycCtx& cx = CycCtx::get(T.m);
    // classes: identity, involutions, 3-cycles
    auto val = [&](uint32_t i, uint32_t c) { return T.irr[i].v[c].as_integer(cx); };
    // trivial character
    CHECK(val(0, 0) == 1);
    CHECK(val(0, 1) == 1);
    CHECK(val(0, 2) == 1);
    // sign character
    CHECK(val(1, 0) == 1);
    CHECK(val(1, 1) == -1);
    CHECK(val(1, 2) == 1);
    // the 2-dimensional character
    CHECK(val(2, 0) == 2);
    CHECK(val(2, 1) == 0);
    CHECK(val(2, 2) == -1);
}

TEST_CASE("Dixon on A_5 = Sp_2(4): golden-ratio irrationalities stay exact") {
    Group G = symplectic_group(1, 4);
    ClassData cd = conjugacy_classes(G);
    CharTable T = dixon_character_table(G, cd);
    REQUIRE(T.k() == 5);
    CHECK(T.degrees == std::vector<long long>{1, 3, 3, 4, 5});
    const CycCtx& cx = CycCtx::get(T.m);
    // the 3-dimensional characters take irrational values on order-5 classes
    int irrational = 0;
    for (uint32_t i = 0; i < 5; ++i)
        for (uint32_t c = 0; c < 5; ++c)
            if (!T.irr[i].v[c].as_integer(cx)) ++irrational;
    CHECK(irrational == 4);
}

TEST_CASE("Dixon on S_6 = Sp_4(2)") {
    GroupBundle& gb = ws().sp(2, 2);
    CHECK(gb.T.degrees ==
          std::vector<long long>{1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16});
}

TEST_CASE("Dixon on Sp_6(2): 30 irreducibles with the quoted degrees") {
    GroupBundle& gb = ws().sp(3, 2);
    REQUIRE(gb.T.k() == 30);
    std::vector<long long> quoted = {7, 15, 21, 21, 27, 35, 35, 56};
    std::vector<long long> low(gb.T.degrees.begin() + 1, gb.T.degrees.begin() + 9);
    CHECK(low == quoted);
    // all values of this table are rational integers
    const CycCtx& cx = CycCtx::get(gb.T.m);
    for (uint32_t i = 0; i < gb.T.k(); ++i)
        for (uint32_t c = 0; c < gb.cd.k(); ++c) {
            auto v = gb.T.irr[i].v[c].as_integer(cx);
            CHECK(v);
            // absolute square is bounded by the degree squared
            if (v) CHECK(*v * *v <= gb.T.degrees[i] * gb.T.degrees[i]);
        }
}

TEST_CASE("inner products") {
    GroupBundle& gb = ws().sp(3, 2);
    SUBCASE("<1,1> = 1 and row orthogonality spot checks") {
        CHECK(inner_product(gb.T.irr[0], gb.T.irr[0]) == Rat(1));
        CHECK(inner_product(gb.T.irr[0], gb.T.irr[5]) == Rat(0));
        CHECK(inner_product(gb.T.irr[gb.wc.alpha], gb.T.irr[gb.wc.alpha]) == Rat(1));
    }
    SUBCASE("restriction preserves degree and the trivial character") {
        SubBundle& sb = ws().sub(3, 2, "O6-");
        ClassFunction one = restrict_along(gb.T.irr[0], sb.fus.h_to_g, sb.cd);
        const CycCtx& cx = CycCtx::get(gb.T.m);
        for (auto& v : one.v) CHECK(v.as_integer(cx) == 1);
        ClassFunction beta = restrict_along(gb.T.irr[gb.wc.beta], sb.fus.h_to_g, sb.cd);
        CHECK(beta.v[0].as_integer(cx) == 15);
        CHECK(inner_product(beta, beta) == Rat(1));   // beta_3 restricts irreducibly
    }
}

TEST_CASE("l-regular classes") {
    GroupBundle& g6 = ws().sp(3, 2);
    CHECK_THROWS(l_regular_classes(g6.cd, 2));
    CHECK(l_regular_classes(g6.cd, 11).size() == 30);   // 11 does not divide |G|
    auto reg7 = l_regular_classes(g6.cd, 7);
    CHECK(reg7.size() == 29);   // exactly the order-7 class drops out
    for (uint32_t c : reg7) CHECK(g6.cd.cls[c].elem_order % 7 != 0);

    GroupBundle& s6 = ws().sp(2, 2);
    CHECK(l_regular_classes(s6.cd, 3).size() == 7);
}

TEST_CASE("Brauer candidates from integer combinations") {
    GroupBundle& gb = ws().sp(3, 2);
    // chi_6 - chi_3 - chi_2 + chi_1 in White's numbering: the unique degree-84
    // row minus beta_3 minus rho_3^2 plus the trivial character
    uint32_t chi6 = gb.T.of_degree(84).at(0);
    uint32_t one = gb.T.of_degree(1).at(0);
    BrauerCandidate bc = brauer_candidate(
        gb.T, 3, {{1, chi6}, {-1, gb.wc.beta}, {-1, gb.wc.rho2}, {1, one}});
    CHECK(bc.degree == 35);
    BrauerCandidate rho1m1 = brauer_candidate(gb.T, 7, {{1, gb.wc.rho1}, {-1, one}});
    CHECK(rho1m1.degree == 26);
    BrauerCandidate triv = brauer_candidate(gb.T, 3, {{1, one}});
    const CycCtx& cx = CycCtx::get(gb.T.m);
    for (auto& v : triv.values) CHECK(v.as_integer(cx) == 1);
}

TEST_CASE("character table JSON round trip is bit exact and deterministic") {
    GroupBundle& gb = ws().sp(2, 2);
    std::string j1 = char_table_to_json(gb.G, gb.cd, gb.T);
    std::string j2 = char_table_to_json(gb.G, gb.cd, gb.T);
    CHECK(j1 == j2);
    CHECK(char_table_json_roundtrip_equal(j1, gb.T));
}
