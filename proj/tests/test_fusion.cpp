#include "doctest.h"
#include "fixtures.hpp"
#include "sw/fusion.hpp"
#include "sw/subgroups.hpp"

using namespace sw;

TEST_CASE("identity fusion H = G") {
    GroupBundle& gb = ws().sp(2, 2);
    FusionMap f = exact_fusion(gb.G, gb.G, gb.cd, gb.cd);
    for (uint32_t c = 0; c < gb.cd.k(); ++c) CHECK(f.h_to_g[c] == c);
    CHECK(integrality_audit(f, gb.T, gb.cd, &gb.T).empty());
}

TEST_CASE("C_2 into S_3: exactly one candidate fusion") {
    Group G = symplectic_group(1, 2);
    ClassData cdG = conjugacy_classes(G);
    CharTable TG = dixon_character_table(G, cdG);
    Mat t = Mat::identity(2);
    t.at(0, 1) = 1;
    Group H = subgroup_closure(G, "C_2", {t});
    REQUIRE(H.order() == 2);
    ClassData cdH = conjugacy_classes(H);
    CharTable TH = dixon_character_table(H, cdH);
    auto cands = possible_fusions(cdH, TH, cdG, TG);
    REQUIRE(cands.size() == 1);
    CHECK(cands[0] == exact_fusion(H, G, cdH, cdG));
}

TEST_CASE("exact fusion G_2(2) -> Sp_6(2)") {
    GroupBundle& gb = ws().sp(3, 2);
    SubBundle& sb = ws().sub(3, 2, "G2");
    REQUIRE(sb.fus.h_to_g.size() == sb.cd.k());

    SUBCASE("audit is clean, with and without the subgroup table") {
        CHECK(integrality_audit(sb.fus, gb.T, sb.cd, nullptr).empty());
        const CharTable& TH = ws().sub_table(3, 2, "G2");
        CHECK(integrality_audit(sb.fus, gb.T, sb.cd, &TH).empty());
    }
    SUBCASE("order-8 classes: fourth powers land in a single order-2 class") {
        std::vector<uint32_t> h8;
        for (uint32_t c = 0; c < sb.cd.k(); ++c)
            if (sb.cd.cls[c].elem_order == 8) h8.push_back(c);
        REQUIRE(h8.size() == 2);
        const auto& pmH = sb.cd.power_map.at(2);
        uint32_t u4a = pmH[pmH[h8[0]]], u4b = pmH[pmH[h8[1]]];
        CHECK(u4a == u4b);
        CHECK(sb.cd.cls[u4a].elem_order == 2);
        // and the fusion commutes: images of the order-8 classes are distinct
        CHECK(sb.fus.h_to_g[h8[0]] != sb.fus.h_to_g[h8[1]]);
    }
    SUBCASE("the perturbed map swapping the order-8 images is rejected") {
        std::vector<uint32_t> h8;
        for (uint32_t c = 0; c < sb.cd.k(); ++c)
            if (sb.cd.cls[c].elem_order == 8) h8.push_back(c);
        FusionMap bad = sb.fus;
        std::swap(bad.h_to_g[h8[0]], bad.h_to_g[h8[1]]);
        const CharTable& TH = ws().sub_table(3, 2, "G2");
        auto violations = integrality_audit(bad, gb.T, sb.cd, &TH);
        CHECK(!violations.empty());
        // the self-norms alone cannot see the swap: both classes have equal
        // size, so it takes the multiplicity audit against Irr(H)
        CHECK(sb.cd.cls[h8[0]].size == sb.cd.cls[h8[1]].size);
        CHECK(integrality_audit(bad, gb.T, sb.cd, nullptr).empty());
    }
    SUBCASE("the constraint solver finds the exact fusion among its candidates") {
        const CharTable& TH = ws().sub_table(3, 2, "G2");
        auto cands = possible_fusions(sb.cd, TH, gb.cd, gb.T);
        CHECK(!cands.empty());
        bool contains = false;
        for (const auto& c : cands)
            if (c == sb.fus) contains = true;
        CHECK(contains);
        // deterministic order
        auto cands2 = possible_fusions(sb.cd, TH, gb.cd, gb.T);
        CHECK(cands == cands2);
    }
}

TEST_CASE("P_3: all order-7 classes fuse into the single order-7 class of G") {
    GroupBundle& gb = ws().sp(3, 2);
    SubBundle& sb = ws().sub(3, 2, "P3");
    uint32_t g7 = UINT32_MAX;
    for (uint32_t c = 0; c < gb.cd.k(); ++c)
        if (gb.cd.cls[c].elem_order == 7) g7 = c;
    int found = 0;
    for (uint32_t c = 0; c < sb.cd.k(); ++c)
        if (sb.cd.cls[c].elem_order == 7) {
            ++found;
            CHECK(sb.fus.h_to_g[c] == g7);
        }
    CHECK(found >= 1);
}

TEST_CASE("restriction norms by elements: parallel, serial and class-based agree") {
    GroupBundle& gb = ws().sp(3, 2);
    SubBundle& sb = ws().sub(3, 2, "O6-");
    for (uint32_t i : {0u, gb.wc.alpha, gb.wc.beta, gb.wc.rho2}) {
        Rat par = restriction_norm_by_elements(sb.H, gb.G, gb.cd, gb.T.irr[i], ExecMode::Parallel);
        Rat ser = restriction_norm_by_elements_serial_ref(sb.H, gb.G, gb.cd, gb.T.irr[i]);
        ClassFunction r = restrict_along(gb.T.irr[i], sb.fus.h_to_g, sb.cd);
        Rat cls = inner_product(r, r);
        CHECK(par == ser);
        CHECK(par == cls);
    }
}

TEST_CASE("every restriction norm is a positive integer (all named subgroups)") {
    for (auto [n, q] : {std::pair<int, int>{3, 2}, {2, 2}}) {
        GroupBundle& gb = ws().sp(n, q);
        for (const auto& nm : known_subgroup_names(gb.G)) {
            SubBundle& sb = ws().sub(n, q, nm);
            for (uint32_t i = 0; i < gb.T.k(); ++i) {
                ClassFunction r = restrict_along(gb.T.irr[i], sb.fus.h_to_g, sb.cd);
                Rat nrm = inner_product(r, r);
                CHECK(nrm.is_integer());
                CHECK(nrm.num >= 1);
            }
        }
    }
}
