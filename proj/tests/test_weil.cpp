#include "doctest.h"
#include "fixtures.hpp"
#include "sw/weil.hpp"

using namespace sw;

namespace {

Fingerprint identity_fp(int dim, uint32_t q) {
    Fingerprint fp;
    fp.order = 1;
    fp.ker_base.assign(q - 1, 0);
    fp.ker_base[0] = (uint8_t)dim;
    fp.ker_ext.assign(q + 1, 0);
    fp.ker_ext[0] = (uint8_t)dim;
    return fp;
}

}  // namespace

TEST_CASE("formula values at the identity (no enumeration needed)") {
    const CycCtx* unused = &CycCtx::get(15);
    (void)unused;
    SUBCASE("n=3, q=4") {
        Field F = field_create(2);
        Fingerprint fp = identity_fp(6, 4);
        uint32_t m = 15;   // lcm(q-1, q+1)
        CHECK(weil_tau(F, m, fp, 0).as_integer(CycCtx::get(m)) == 1364);   // rho_3^1 + rho_3^2
        CHECK(weil_tau(F, m, fp, 1).as_integer(CycCtx::get(m)) == 1365);   // (q^6-1)/(q-1)
        CHECK(weil_zeta(F, m, fp, 0).as_integer(CycCtx::get(m)) == 820);   // alpha_3 + beta_3
        CHECK(weil_zeta(F, m, fp, 1).as_integer(CycCtx::get(m)) == 819);   // (q^6-1)/(q+1)
    }
    SUBCASE("n=3, q=2") {
        Field F = field_create(1);
        Fingerprint fp = identity_fp(6, 2);
        uint32_t m = 3;
        CHECK(weil_tau(F, m, fp, 0).as_integer(CycCtx::get(m)) == 62);
        CHECK(weil_zeta(F, m, fp, 0).as_integer(CycCtx::get(m)) == 22);
        CHECK(weil_zeta(F, m, fp, 1).as_integer(CycCtx::get(m)) == 21);
        CHECK_THROWS(weil_tau(F, m, fp, 1));
        CHECK_THROWS(weil_zeta(F, m, fp, 3));
    }
    SUBCASE("order-3 element of Sp_6(2) with known kernel dimensions") {
        Field F = field_create(1);
        Fingerprint fp;
        fp.order = 3;
        fp.ker_base = {4};
        fp.ker_ext = {4, 1, 1};
        uint32_t m = 3;
        CHECK(weil_zeta(F, m, fp, 1).as_integer(CycCtx::get(m)) == 6);
        CHECK(weil_zeta(F, m, fp, 0).as_integer(CycCtx::get(m)) == 4);
    }
}

TEST_CASE("weil constituents of Sp_6(2)") {
    GroupBundle& gb = ws().sp(3, 2);
    CHECK(gb.T.degrees[gb.wc.alpha] == 7);
    CHECK(gb.T.degrees[gb.wc.beta] == 15);
    CHECK(gb.T.degrees[gb.wc.rho1] == 27);
    CHECK(gb.T.degrees[gb.wc.rho2] == 35);
    REQUIRE(gb.wc.zeta.size() == 1);
    CHECK(gb.T.degrees[gb.wc.zeta[0]] == 21);
    CHECK(gb.wc.tau.empty());
    // zeta^0 = alpha + beta and tau^0 = rho^1 + rho^2 exactly
    const CycCtx& cx = CycCtx::get(gb.T.m);
    for (uint32_t c = 0; c < gb.cd.k(); ++c) {
        Cyc z = gb.wc.zeta0.v[c] - gb.T.irr[gb.wc.alpha].v[c] - gb.T.irr[gb.wc.beta].v[c];
        CHECK(z.is_zero(cx));
        Cyc t = gb.wc.tau0.v[c] - gb.T.irr[gb.wc.rho1].v[c] - gb.T.irr[gb.wc.rho2].v[c];
        CHECK(t.is_zero(cx));
    }
    // cross-check the order-3 example against the table value of zeta_3^1
    for (uint32_t c = 0; c < gb.cd.k(); ++c) {
        const Fingerprint& fp = gb.cd.cls[c].fp;
        if (fp.order == 3 && fp.ker_base[0] == 4)
            CHECK(gb.T.irr[gb.wc.zeta[0]].v[c].as_integer(cx) == 6);
    }
}

TEST_CASE("weil constituents of Sp_4(4)") {
    GroupBundle& gb = ws().sp(2, 4);
    CHECK(gb.T.degrees[gb.wc.alpha] == 18);
    CHECK(gb.T.degrees[gb.wc.beta] == 34);
    CHECK(gb.T.degrees[gb.wc.rho1] == 34);
    CHECK(gb.T.degrees[gb.wc.rho2] == 50);
    REQUIRE(gb.wc.zeta.size() == 2);
    CHECK(gb.T.degrees[gb.wc.zeta[0]] == 51);
    CHECK(gb.T.degrees[gb.wc.zeta[1]] == 51);
    CHECK(gb.wc.zeta[0] != gb.wc.zeta[1]);
    REQUIRE(gb.wc.tau.size() == 1);
    CHECK(gb.T.degrees[gb.wc.tau[0]] == 85);
}

TEST_CASE("formula values are class functions (exhaustive on small groups)") {
    Group G2 = symplectic_group(1, 4);
    ClassData cd2 = conjugacy_classes(G2);
    CHECK(weil_class_function_check(G2, cd2, ExecMode::Parallel));
    CHECK(weil_class_function_check_serial_ref(G2, cd2));

    GroupBundle& s6 = ws().sp(2, 2);
    CHECK(weil_class_function_check(s6.G, s6.cd, ExecMode::Parallel));
}

TEST_CASE("orbit classification of Irr(Z_j)") {
    SUBCASE("j=3, q=2") {
        Field F = field_create(1);
        ZOrbitData zo = z_orbit_classification(F, 3);
        CHECK(zo.orbit_size.at({1, 0}) == 7);
        CHECK(zo.orbit_size.at({2, -1}) == 7);
        CHECK(zo.orbit_size.at({2, 1}) == 21);
        CHECK(zo.orbit_size.at({3, 0}) == 28);
        CHECK(zo.orbit_size.at({0, 0}) == 1);
    }
    SUBCASE("j=2, q=2") {
        Field F = field_create(1);
        ZOrbitData zo = z_orbit_classification(F, 2);
        CHECK(zo.orbit_size.at({1, 0}) == 3);
        CHECK(zo.orbit_size.at({2, -1}) == 1);
        CHECK(zo.orbit_size.at({2, 1}) == 3);
    }
    SUBCASE("j=2, q=4") {
        Field F = field_create(2);
        ZOrbitData zo = z_orbit_classification(F, 2);
        CHECK(zo.orbit_size.at({1, 0}) == 15);
        CHECK(zo.orbit_size.at({2, -1}) == 18);
        CHECK(zo.orbit_size.at({2, 1}) == 30);
    }
}

namespace {

void check_profile(const OrbitProfile& p, long long trivial,
                   std::vector<std::tuple<int, int, long long>> expect) {
    CHECK(p.trivial == trivial);
    CHECK(p.mult.size() == expect.size());
    for (auto [rank, type, mult] : expect) {
        OrbitLabel lab{rank, type};
        REQUIRE(p.mult.count(lab));
        CHECK(p.mult.at(lab) == mult);
    }
}

}  // namespace

TEST_CASE("restriction profiles on Z_2 for Sp_4(q), q in {2,4}") {
    for (int q : {2, 4}) {
        CAPTURE(q);
        GroupBundle& gb = ws().sp(2, q);
        ParabolicData pd = parabolic_decomposition(gb.G, 2);
        ZOrbitData zo = z_orbit_classification(*gb.G.F, 2);
        auto prof = [&](uint32_t row) {
            return orbit_restriction_profile(gb.T.irr[row], gb.cd, pd, zo);
        };
        check_profile(prof(gb.wc.alpha), 0, {{2, -1, 1}});
        check_profile(prof(gb.wc.beta), 1, {{1, 0, 1}, {2, -1, 1}});
        for (uint32_t zi : gb.wc.zeta)
            check_profile(prof(zi), 0, {{1, 0, 1}, {2, -1, 2}});
        check_profile(prof(gb.wc.rho1), q, {{2, 1, 1}});
        check_profile(prof(gb.wc.rho2), q + 1, {{1, 0, 1}, {2, 1, 1}});
        for (uint32_t ti : gb.wc.tau)
            check_profile(prof(ti), 2 * q + 2, {{1, 0, 1}, {2, 1, 2}});
        // profile weights equal degrees
        for (uint32_t row : {gb.wc.alpha, gb.wc.beta, gb.wc.rho1, gb.wc.rho2})
            CHECK(profile_degree(prof(row), zo) == gb.T.degrees[row]);
    }
}

TEST_CASE("alpha_3 restricted to Z_3 is a single O_2^- orbit sum") {
    GroupBundle& gb = ws().sp(3, 2);
    ParabolicData pd = parabolic_decomposition(gb.G, 3);
    ZOrbitData zo = z_orbit_classification(*gb.G.F, 3);
    OrbitProfile p = orbit_restriction_profile(gb.T.irr[gb.wc.alpha], gb.cd, pd, zo);
    check_profile(p, 0, {{2, -1, 1}});
    // all Table-1 characters decompose with the right weight
    for (uint32_t row : {gb.wc.alpha, gb.wc.beta, gb.wc.rho1, gb.wc.rho2, gb.wc.zeta[0]}) {
        OrbitProfile pr = orbit_restriction_profile(gb.T.irr[row], gb.cd, pd, zo);
        CHECK(profile_degree(pr, zo) == gb.T.degrees[row]);
    }
}

TEST_CASE("the two displayed identities for the full zeta_2 on Z_2") {
    for (int q : {2, 4}) {
        CAPTURE(q);
        GroupBundle& gb = ws().sp(2, q);
        ParabolicData pd = parabolic_decomposition(gb.G, 2);
        ZOrbitData zo = z_orbit_classification(*gb.G.F, 2);
        const CycCtx& cx = CycCtx::get(gb.T.m);
        const Field& F = *gb.G.F;
        for (uint32_t zi = 0; zi < pd.Z.order(); ++zi) {
            Mat zm = pd.Z.mat_of(zi);
            Fingerprint fp = fingerprint(F, zm);
            // zeta_2 = sum_i zeta_2^i has value (-q)^{dim ker(g-1) over GF(q^2)}
            long long lhs = 1;
            for (int t = 0; t < fp.ker_ext[0]; ++t) lhs *= -(long long)q;
            // orbit sums at this element
            int j = 2, n2 = gb.G.half_rank;
            Mat c = Mat::zero(j);
            for (int r = 0; r < j; ++r)
                for (int s = 0; s < j; ++s) c.at(r, s) = zm.at(r, n2 + s);
            long long w1 = 0, w2m = 0;
            for (size_t yi = 0; yi < zo.ys.size(); ++yi) {
                uint16_t tr = 0;
                for (int r = 0; r < j; ++r)
                    for (int s = 0; s < j; ++s)
                        if (zo.ys[yi].at(r, s) && c.at(r, s))
                            tr ^= F.base.mul(zo.ys[yi].at(r, s), c.at(r, s));
                int sign = F.base.trace_f2(tr) ? -1 : 1;
                if (zo.labels[yi] == OrbitLabel{1, 0}) w1 += sign;
                if (zo.labels[yi] == OrbitLabel{2, -1}) w2m += sign;
            }
            CHECK(lhs == 1 + (q + 1) * w1 + (2 * q + 2) * w2m);
            // and (q+1)(alpha+beta)|_Z - q
            uint32_t cls = gb.cd.class_of[gb.G.ord_of(pd.Z.elems[zi])];
            auto av = gb.T.irr[gb.wc.alpha].v[cls].as_integer(cx);
            auto bv = gb.T.irr[gb.wc.beta].v[cls].as_integer(cx);
            REQUIRE(av);
            REQUIRE(bv);
            CHECK(lhs == (q + 1) * (*av + *bv) - q);
        }
    }
}
