#include "doctest.h"
#include "sw/qpoly.hpp"

using namespace sw;

TEST_CASE("cyclotomic polynomials") {
    QPoly q = QPoly::q();
    CHECK(cyclotomic(1) == q - QPoly(1));
    CHECK(cyclotomic(2) == q + QPoly(1));
    // Phi_6 via the division oracle: (q^6-1) / (Phi_1 Phi_2 Phi_3)
    QPoly oracle = (QPoly::monomial(6) - QPoly(1))
                       .divided_by(cyclotomic(1) * cyclotomic(2) * cyclotomic(3));
    CHECK(cyclotomic(6) == oracle);
    CHECK(cyclotomic(6) == QPoly::monomial(2) - q + QPoly(1));
    CHECK_THROWS(cyclotomic(0));
    CHECK_THROWS(cyclotomic(13));
}

TEST_CASE("catalog lookups match the quoted degree values") {
    const Catalog& cat = Catalog::instance();
    CHECK(cat.lookup("alpha_3").eval_int(2) == 7);
    CHECK(cat.lookup("alpha_3").eval_int(4) == 378);
    CHECK(cat.lookup("zeta_3").eval_int(2) == 21);
    CHECK(cat.lookup("beta_3").eval_int(2) == 15);
    CHECK(cat.lookup("rho_3_1").eval_int(2) == 27);
    CHECK(cat.lookup("rho_3_2").eval_int(2) == 35);
    CHECK(cat.lookup("alpha_2").eval_int(4) == 18);
    CHECK(cat.lookup("B_3") == QPoly::monomial(2) * (QPoly::monomial(2) - QPoly(1)) *
                                   (QPoly::monomial(3) - QPoly(1)));
    CHECK_THROWS(cat.lookup("no_such_formula"));
}

TEST_CASE("catalog entries are integer-valued at even q") {
    const Catalog& cat = Catalog::instance();
    for (const auto& [name, e] : cat.entries) {
        for (long long qv : {2LL, 4LL, 8LL, 16LL, 32LL}) {
            CHECK_MESSAGE(e.poly.integral_at(qv), name, " at q=", qv);
            if (e.radicand) CHECK(e.radicand->integral_at(qv));
        }
    }
}

TEST_CASE("White degree polynomials are pairwise distinct") {
    const Catalog& cat = Catalog::instance();
    for (int i = 1; i <= 12; ++i)
        for (int j = i + 1; j <= 12; ++j)
            CHECK(!(cat.lookup("White_chi_" + std::to_string(i)) ==
                    cat.lookup("White_chi_" + std::to_string(j))));
}

TEST_CASE("identity suite passes") {
    auto results = verify_catalog_identities();
    CHECK(results.size() >= 40);
    for (const auto& r : results) CHECK_MESSAGE(r.pass, r.name, ": ", r.detail);
}

TEST_CASE("zeta/tau degree splitting instances") {
    const Catalog& cat = Catalog::instance();
    // n=3, q=4: 1364 = 650 + 714
    CHECK(cat.lookup("rho_3_1").eval_int(4) == 650);
    CHECK(cat.lookup("rho_3_2").eval_int(4) == 714);
    CHECK(cat.lookup("rho_3_1").eval_int(4) + cat.lookup("rho_3_2").eval_int(4) == 1364);
    // n=3, q=2: 22 = 7 + 15 and 62 = 27 + 35
    CHECK(cat.lookup("alpha_3").eval_int(2) + cat.lookup("beta_3").eval_int(2) == 22);
    CHECK(cat.lookup("rho_3_1").eval_int(2) + cat.lookup("rho_3_2").eval_int(2) == 62);
}

TEST_CASE("orbit sizes at q=2") {
    const Catalog& cat = Catalog::instance();
    CHECK(cat.lookup("O_1").eval_int(2) == 7);
    CHECK(cat.lookup("O_2_minus").eval_int(2) == 7);
    CHECK(cat.lookup("O_2_plus").eval_int(2) == 21);
    CHECK(cat.lookup("O_3").eval_int(2) == 28);
    CHECK(cat.lookup("O_1").eval_int(2) + cat.lookup("O_2_minus").eval_int(2) +
              cat.lookup("O_2_plus").eval_int(2) + cat.lookup("O_3").eval_int(2) + 1 ==
          64);
}

TEST_CASE("QPoly arithmetic basics") {
    QPoly q = QPoly::q();
    QPoly p = (q - QPoly(1)) * (q + QPoly(1));
    CHECK(p == QPoly::monomial(2) - QPoly(1));
    CHECK(p.divided_by(q - QPoly(1)) == q + QPoly(1));
    CHECK_THROWS(p.divided_by(q + QPoly(2)));
    QPoly h = p;
    h.den = 2;
    h.normalize();
    CHECK(h.eval_int(3) == 4);
    CHECK(!h.integral_at(2));
    CHECK((q * q - QPoly(3) * q).positive_for_q_geq(4));
    CHECK(!(QPoly(1) - q).positive_for_q_geq(4));
}

TEST_CASE("degree screen bound for the field-extension subgroup") {
    const Catalog& cat = Catalog::instance();
    QPoly gap = cat.lookup("d_ell_Sp6") - cat.lookup("m_SL2q3_3");
    CHECK(gap.positive_for_q_geq(4));
    CHECK(gap.eval_int(2) < 0);   // the screen genuinely needs q >= 4
}
