#include "doctest.h"
#include "fixtures.hpp"
#include "sw/classify.hpp"
#include "sw/subgroups.hpp"

using namespace sw;

namespace {

std::vector<std::string> classification_names(GroupBundle& gb, SubBundle& sb) {
    std::vector<std::string> out;
    for (uint32_t r : ordinary_classification(gb, sb)) out.push_back(char_display_name(gb, r));
    return out;
}

}  // namespace

TEST_CASE("classification agrees with the unscreened element-sweep oracle") {
    for (auto [n, q] : {std::pair<int, int>{3, 2}, {2, 2}, {2, 4}}) {
        GroupBundle& gb = ws().sp(n, q);
        for (const auto& nm : known_subgroup_names(gb.G)) {
            CAPTURE(nm);
            SubBundle& sb = ws().sub(n, q, nm);
            CHECK(ordinary_classification(gb, sb) == ordinary_classification_oracle(gb, sb.H));
        }
    }
}

TEST_CASE("ordinary classification results for Sp_6(2)") {
    GroupBundle& gb = ws().sp(3, 2);
    auto get = [&](const char* nm) { return ordinary_classification(gb, ws().sub(3, 2, nm)); };

    SUBCASE("O_6^-(2): exactly beta_3") {
        CHECK(get("O6-") == std::vector<uint32_t>{gb.wc.beta});
    }
    SUBCASE("O_6^+(2): alpha_3, the other degree 35, the other degree 21") {
        std::vector<uint32_t> want = {gb.wc.alpha, resolve_char(gb, "deg21!zeta1"),
                                      resolve_char(gb, "deg35!rho2")};
        std::sort(want.begin(), want.end());
        CHECK(get("O6+") == want);
    }
    SUBCASE("P_3: exactly alpha_3 and the degree-21 character that is not zeta_3^1") {
        std::vector<uint32_t> want = {gb.wc.alpha, resolve_char(gb, "deg21!zeta1")};
        std::sort(want.begin(), want.end());
        CHECK(get("P3") == want);
    }
    SUBCASE("G_2(2): alpha_3, zeta_3^1, rho_3^1 and the degree-56 character") {
        std::vector<uint32_t> want = {gb.wc.alpha, gb.wc.zeta[0], gb.wc.rho1,
                                      resolve_char(gb, "deg56")};
        std::sort(want.begin(), want.end());
        CHECK(get("G2") == want);
    }
    SUBCASE("L_2(8).3: alpha_3, zeta_3^1, rho_3^1 and the other degree 21") {
        std::vector<uint32_t> want = {gb.wc.alpha, gb.wc.zeta[0], gb.wc.rho1,
                                      resolve_char(gb, "deg21!zeta1")};
        std::sort(want.begin(), want.end());
        CHECK(get("L2_8.3") == want);
    }
    SUBCASE("the remaining maximal subgroups admit nothing") {
        CHECK(get("P1").empty());
        CHECK(get("P2").empty());
        CHECK(get("Sp2xSp4").empty());
        CHECK(get("Sp2wrS3").empty());
    }
}

TEST_CASE("ordinary classification results for S_6 = Sp_4(2)") {
    GroupBundle& gb = ws().sp(2, 2);
    auto get = [&](const char* nm) { return ordinary_classification(gb, ws().sub(2, 2, nm)); };
    CHECK(!get("A6").empty());
    CHECK(!get("S5").empty());
    CHECK(!get("O4-").empty());
    CHECK(get("O4+").empty());
    CHECK(get("2xS4").empty());
    CHECK(get("S2wrS3").empty());
    CHECK(get("P1").empty());
    CHECK(get("P2").empty());
}

TEST_CASE("ordinary classification for Sp_4(4) parabolics") {
    GroupBundle& gb = ws().sp(2, 4);
    CHECK(ordinary_classification(gb, ws().sub(2, 4, "P2")) ==
          std::vector<uint32_t>{gb.wc.alpha});
    CHECK(ordinary_classification(gb, ws().sub(2, 4, "P1")).empty());
}

TEST_CASE("the q=2 shadow of the restriction decompositions") {
    GroupBundle& gb = ws().sp(3, 2);
    SubBundle& sb = ws().sub(3, 2, "G2");
    ClassFunction rho2 = restrict_along(gb.T.irr[gb.wc.rho2], sb.fus.h_to_g, sb.cd);
    ClassFunction beta = restrict_along(gb.T.irr[gb.wc.beta], sb.fus.h_to_g, sb.cd);
    CHECK(inner_product(rho2, rho2) == Rat(2));
    CHECK(inner_product(beta, beta) == Rat(2));
    // each splits into two distinct irreducibles; their degrees are the
    // theta-degrees from the catalog evaluated at q=2: 21+14 and 1+14
    const CharTable& TH = ws().sub_table(3, 2, "G2");
    auto constituents = [&](const ClassFunction& r) {
        std::vector<long long> degs;
        for (uint32_t j = 0; j < TH.k(); ++j) {
            ClassFunction psi;
            psi.cd = &sb.cd;
            psi.m = gb.T.m;
            for (uint32_t c = 0; c < sb.cd.k(); ++c) {
                Cyc v;
                for (auto [e, co] : TH.irr[j].v[c].t)
                    v.t.push_back({e * (gb.T.m / TH.m), co});
                psi.v.push_back(v);
            }
            Rat mult = inner_product(r, psi);
            if (mult == Rat(1)) degs.push_back(TH.degrees[j]);
            else CHECK(mult == Rat(0));
        }
        std::sort(degs.begin(), degs.end());
        return degs;
    };
    CHECK(constituents(rho2) == std::vector<long long>{14, 21});
    CHECK(constituents(beta) == std::vector<long long>{1, 14});
}

TEST_CASE("lift filters") {
    GroupBundle& gb = ws().sp(3, 2);
    SUBCASE("rho_3^2 on O_6^-: no shifted lift exists") {
        SubBundle& sb = ws().sub(3, 2, "O6-");
        const CharTable& TH = ws().sub_table(3, 2, "O6-");
        auto res = lift_filters(gb, sb, TH, gb.wc.rho2);
        CHECK(!res.chi_restricts_irreducibly);
        CHECK(!res.shifted_lift_possible);
    }
    SUBCASE("alpha_3 on G_2(2) passes") {
        SubBundle& sb = ws().sub(3, 2, "G2");
        const CharTable& TH = ws().sub_table(3, 2, "G2");
        auto res = lift_filters(gb, sb, TH, gb.wc.alpha);
        CHECK(res.chi_restricts_irreducibly);
        CHECK(res.shifted_lift_possible);
    }
}

TEST_CASE("clifford orbit tests") {
    GroupBundle& gb = ws().sp(3, 2);
    ParabolicData pd1 = parabolic_decomposition(gb.G, 1);
    ParabolicData pd3 = parabolic_decomposition(gb.G, 3);
    ZOrbitData zo1 = z_orbit_classification(*gb.G.F, 1);
    ZOrbitData zo3 = z_orbit_classification(*gb.G.F, 3);

    SUBCASE("every nontrivial character is reducible on P_1") {
        for (uint32_t i = 0; i < gb.T.k(); ++i) {
            if (gb.T.degrees[i] == 1) continue;
            auto res = clifford_orbit_test(gb, pd1, zo1, i);
            CHECK(res.verdict == Verdict::Reducible);
            CHECK(res.justification.find("fixed points") != std::string::npos);
        }
    }
    SUBCASE("alpha_3 on P_3 is certified irreducible by the single-orbit test") {
        auto res = clifford_orbit_test(gb, pd3, zo3, gb.wc.alpha);
        CHECK(res.verdict == Verdict::Irreducible);
        CHECK((pd3.P.order() / pd3.Z.order()) % 7 == 0);   // Ito divisibility holds
    }
    SUBCASE("multi-orbit profiles are excluded") {
        auto res = clifford_orbit_test(gb, pd3, zo3, gb.wc.beta);
        CHECK(res.verdict == Verdict::ExcludedByOrbitTest);
    }
    SUBCASE("orbit screens never contradict the exact norms") {
        SubBundle& sb = ws().sub(3, 2, "P3");
        auto survivors = ordinary_classification(gb, sb);
        for (uint32_t i = 0; i < gb.T.k(); ++i) {
            if (gb.T.degrees[i] == 1) continue;
            auto res = clifford_orbit_test(gb, pd3, zo3, i);
            bool survives = std::find(survivors.begin(), survivors.end(), i) != survivors.end();
            if (res.verdict == Verdict::Irreducible) CHECK(survives);
            if (res.verdict == Verdict::Reducible ||
                res.verdict == Verdict::ExcludedByOrbitTest)
                CHECK(!survives);
        }
    }
}

TEST_CASE("degree screen") {
    GroupBundle& gb = ws().sp(3, 2);
    SubBundle& sb = ws().sub(3, 2, "G2");
    const CharTable& TH = ws().sub_table(3, 2, "G2");
    long long mh = *std::max_element(TH.degrees.begin(), TH.degrees.end());
    ScreenResult sr = degree_screen(gb, sb.H.order(), 1, mh);
    // monotone: anything that classifies as irreducible survives the screen
    for (uint32_t r : ordinary_classification(gb, sb))
        CHECK(std::find(sr.survivors.begin(), sr.survivors.end(), r) != sr.survivors.end());
    // with H = G nothing is excluded
    ScreenResult all = degree_screen(gb, gb.G.order(), 1, 0);
    CHECK(all.survivors.size() == gb.T.k() - 1);   // everything nontrivial
}

TEST_CASE("verify_published") {
    SUBCASE("theorem 1.4 at q=2") {
        VerifyReport rep = verify_published(ws(), "1.4", 2, 0);
        CHECK(!rep.refuted);
        CHECK(rep.completeness_asserted);
    }
    SUBCASE("theorem 1.3 at q=4") {
        VerifyReport rep = verify_published(ws(), "1.3", 4, 0);
        CHECK(!rep.refuted);
    }
    SUBCASE("theorem 1.5 at q=2") {
        VerifyReport rep = verify_published(ws(), "1.5", 2, 0);
        CHECK(!rep.refuted);
        CHECK(rep.rows.size() == 9);
    }
    SUBCASE("theorem 1.2 instantiated at q=2 (spot check)") {
        VerifyReport rep = verify_published(ws(), "1.2", 2, 0);
        CHECK(!rep.refuted);
        CHECK(!rep.completeness_asserted);
    }
    SUBCASE("theorem 1.2 at q=4 is undecidable at desk scale") {
        VerifyReport rep = verify_published(ws(), "1.2", 4, 0);
        bool any_undecidable = false;
        for (auto& r : rep.rows)
            if (r.verdict == "undecidable-at-desk-scale") any_undecidable = true;
        CHECK(any_undecidable);
    }
    SUBCASE("unknown theorem id") { CHECK_THROWS(verify_published(ws(), "9.9", 2, 0)); }
}
