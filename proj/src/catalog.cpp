#include "sw/qpoly.hpp"

#include <stdexcept>

namespace sw {

namespace {

QPoly Q() { return QPoly::q(); }
QPoly qp(int deg) { return QPoly::monomial(deg); }
QPoly C(long long c) { return QPoly(c); }
QPoly half(const QPoly& p) {
    QPoly r = p;
    r.den *= 2;
    r.normalize();
    return r;
}

Catalog build_catalog() {
    Catalog cat;
    auto put = [&](const std::string& name, const QPoly& p, const std::string& prov) {
        if (cat.entries.count(name)) throw std::logic_error("catalog: duplicate " + name);
        cat.entries[name] = CatalogEntry{p, std::nullopt, prov};
    };
    auto put_rad = [&](const std::string& name, const QPoly& p, const QPoly& rad,
                       const std::string& prov) {
        cat.entries[name] = CatalogEntry{p, rad, prov};
    };

    QPoly q = Q();
    QPoly one = C(1);

    // ---- Weil character degrees, n = 2, 3 ----
    for (int n = 2; n <= 3; ++n) {
        std::string s = "_" + std::to_string(n);
        QPoly qn = qp(n), q2n = qp(2 * n);
        put("rho" + s + "_1", half((qn + one) * (qn - q)).divided_by(q - one),
            "linear Weil degree (q^n+1)(q^n-q)/2(q-1)");
        put("rho" + s + "_2", half((qn - one) * (qn + q)).divided_by(q - one),
            "linear Weil degree (q^n-1)(q^n+q)/2(q-1)");
        put("tau" + s, (q2n - one).divided_by(q - one), "linear Weil degree (q^2n-1)/(q-1)");
        put("alpha" + s, half((qn - one) * (qn - q)).divided_by(q + one),
            "unitary Weil degree (q^n-1)(q^n-q)/2(q+1)");
        put("beta" + s, half((qn + one) * (qn + q)).divided_by(q + one),
            "unitary Weil degree (q^n+1)(q^n+q)/2(q+1)");
        put("zeta" + s, (q2n - one).divided_by(q + one), "unitary Weil degree (q^2n-1)/(q+1)");
    }

    // ---- unipotent character degrees (White's numbering) ----
    QPoly f1 = cyclotomic(1), f2 = cyclotomic(2), f3 = cyclotomic(3), f4 = cyclotomic(4),
          f6 = cyclotomic(6);
    QPoly s3 = qp(4) + qp(2) + one;   // q^4+q^2+1 = Phi_3 Phi_6
    put("White_chi_1", one, "unipotent degree, principal series");
    put("White_chi_2", half(q * f3 * f4), "unipotent degree q(q^2+q+1)(q^2+1)/2");
    put("White_chi_3", half(q * f6 * f4), "unipotent degree q(q^2-q+1)(q^2+1)/2");
    put("White_chi_4", half(q * f6 * f2 * f2), "unipotent degree q(q^2-q+1)(q+1)^2/2");
    put("White_chi_5", half(q * f1 * f1 * f3), "unipotent degree q(q-1)^2(q^2+q+1)/2");
    put("White_chi_6", qp(2) * s3, "unipotent degree q^2(q^4+q^2+1)");
    put("White_chi_7", qp(3) * s3, "unipotent degree q^3(q^4+q^2+1)");
    put("White_chi_8", half(qp(4) * f3 * f4), "unipotent degree q^4(q^2+q+1)(q^2+1)/2");
    put("White_chi_9", half(qp(4) * f6 * f2 * f2), "unipotent degree q^4(q^2-q+1)(q+1)^2/2");
    put("White_chi_10", half(qp(4) * f6 * f4), "unipotent degree q^4(q^2-q+1)(q^2+1)/2");
    put("White_chi_11", half(qp(4) * f1 * f1 * f3), "unipotent degree q^4(q-1)^2(q^2+q+1)/2");
    put("White_chi_12", qp(9), "Steinberg degree q^9");
    const QPoly& w2 = cat.lookup("White_chi_2");
    const QPoly& w3 = cat.lookup("White_chi_3");
    const QPoly& w5 = cat.lookup("White_chi_5");
    const QPoly& w6 = cat.lookup("White_chi_6");
    const QPoly& w7 = cat.lookup("White_chi_7");
    const QPoly& w8 = cat.lookup("White_chi_8");
    const QPoly& w10 = cat.lookup("White_chi_10");
    put("White_chi_22", w8 - w7 - w5, "degree via chi_22-hat = chi_8 - chi_7 - chi_5 relation");
    put("White_chi_23", w10 - w7 + w6 - w3, "degree via chi_23-hat = chi_10-chi_7+chi_6-chi_3");
    put("White_chi_28", w6 - w3 - w2 + one, "degree via chi_28-hat = chi_6-chi_3-chi_2+chi_1");
    put("White_chi_30", qp(3) * f1 * f1 * f3 * f4, "degree q^3(q-1)^2(q^2+q+1)(q^2+1)");
    put("White_chi_35", w7 - w6 + w3 - one + w5, "degree via chi_35-hat - chi_5-hat relation");

    // ---- low-dimension bounds D and B ----
    put("D_unip_a", half(qp(4) * f1 * f1 * f3), "D bound, ell | (q^3-1)(q^2+1)");
    put("D_unip_b1", half(q * (qp(3) - C(2)) * f4 * f6) - half(q * f1 * (qp(3) - one)) + one,
        "D bound, ell | (q+1), (q+1)_ell != 3");
    put("D_unip_b2", half(q * (qp(3) - C(2)) * f4 * f6) + one,
        "D bound, ell | (q+1), (q+1)_ell = 3");
    put("D_unip_c", half(q * (qp(3) - one) * (qp(3) - one) * f1),
        "D bound, 3 != ell | (q^2-q+1)");
    put("B_nonunip", half(q * s3 * f1 * f1 * f1), "bound B = q(q^4+q^2+1)(q-1)^3/2");

    // ---- restriction bounds for P_3 ----
    put_rad("B_1", f1 * (qp(3) - one), C(2) * qp(3) * f2,
            "bound (q-1)(q^3-1) sqrt(2q^3(q+1)) for orbit O_1");
    put_rad("B_2_minus", qp(2) * f1 * (qp(3) - one), qp(2) - one,
            "bound q^2(q-1)(q^3-1) sqrt(q^2-1) for orbit O_2^-");
    put("B_2_plus", qp(2) * (qp(2) - one) * (qp(3) - one), "bound for orbit O_2^+");
    put("B_3", qp(2) * (qp(2) - one) * (qp(3) - one), "bound for orbit O_3");

    // ---- orbit and stabilizer data on Irr(Z_j) ----
    QPoly q3m1 = qp(3) - one;
    put("O_1", q3m1, "orbit size q^3-1, rank-1 forms");
    put("O_2_minus", half(q * f1 * q3m1), "orbit size q(q-1)(q^3-1)/2");
    put("O_2_plus", half(q * f2 * q3m1), "orbit size q(q+1)(q^3-1)/2");
    put("O_3", qp(2) * f1 * q3m1, "orbit size q^2(q-1)(q^3-1)");
    put("stab_O_1", qp(3) * f1 * (qp(2) - one), "stabilizer order q^3(q-1)(q^2-1)");
    put("stab_O_2_minus", C(2) * qp(2) * f1 * f2, "stabilizer order 2q^2(q-1)(q+1)");
    put("stab_O_2_plus", C(2) * qp(2) * f1 * f1, "stabilizer order 2q^2(q-1)^2");
    put("stab_O_3", q * (qp(2) - one), "stabilizer order q(q^2-1)");
    put("Z2_O_1", qp(2) - one, "orbit size q^2-1 on Irr(Z_2)");
    put("Z2_O_2_minus", half(q * f1 * f1), "orbit size q(q-1)^2/2 on Irr(Z_2)");
    put("Z2_O_2_plus", half(q * (qp(2) - one)), "orbit size q(q^2-1)/2 on Irr(Z_2)");
    put("Z2_stab_O_1", q * f1, "stabilizer order q(q-1) in GL_2(q)");
    put("Z2_stab_O_2_minus", C(2) * f2, "stabilizer order 2(q+1) in GL_2(q)");
    put("Z2_stab_O_2_plus", C(2) * f1, "stabilizer order 2(q-1) in GL_2(q)");

    // ---- group orders ----
    QPoly sp2 = q * (qp(2) - one);
    QPoly sp4 = qp(4) * (qp(2) - one) * (qp(4) - one);
    QPoly sp6 = qp(9) * (qp(2) - one) * (qp(4) - one) * (qp(6) - one);
    put("Sp2_order", sp2, "group order q(q^2-1)");
    put("Sp4_order", sp4, "group order q^4(q^2-1)(q^4-1)");
    put("Sp6_order", sp6, "group order q^9(q^2-1)(q^4-1)(q^6-1)");
    put("Sp6_order_odd", (qp(2) - one) * (qp(4) - one) * (qp(6) - one),
        "odd part of |Sp_6(q)|, q even");
    put("GL2_order", q * f1 * (qp(2) - one), "group order of GL_2(q)");
    put("GL3_order", qp(3) * f1 * (qp(2) - one) * (qp(3) - one), "group order of GL_3(q)");
    put("GU3_order", qp(3) * f2 * (qp(2) - one) * (qp(3) + one), "group order of GU_3(q)");
    put("G2_order", qp(6) * (qp(6) - one) * (qp(2) - one), "group order of G_2(q)");
    put("P3_order", qp(9) * f1 * (qp(2) - one) * (qp(3) - one), "order of P_3 in Sp_6(q)");
    put("P3_index_Z", qp(3) * f1 * (qp(2) - one) * (qp(3) - one), "[P_3 : Z_3]");

    // ---- semisimple class data (indices and odd centralizer orders) ----
    put("idx_c40", (qp(6) - one).divided_by(f2), "index (q^6-1)/(q+1), class c_{4,0}");
    put("idx_c30", (qp(6) - one).divided_by(f1), "index (q^6-1)/(q-1), class c_{3,0}");
    put("idx_c60", f4 * f1 * f1 * f3, "index (q^2+1)(q-1)^2(q^2+q+1), class c_{6,0}");
    put("idx_c50", f4 * f2 * f2 * f6, "index (q^2+1)(q+1)^2(q^2-q+1), class c_{5,0}");
    put("idx_c100", f1 * f4 * s3, "index (q-1)(q^2+1)(q^4+q^2+1), class c_{10,0}");
    put("idx_c80", f2 * f4 * s3, "index (q+1)(q^2+1)(q^4+q^2+1), class c_{8,0}");
    put("cent_c40_odd", (qp(2) - one) * (qp(4) - one) * f2, "odd order of Sp_4(q) x GU_1(q)");
    put("cent_c30_odd", (qp(2) - one) * (qp(4) - one) * f1, "odd order of Sp_4(q) x GL_1(q)");
    put("cent_c60_odd", f2 * (qp(2) - one) * (qp(3) + one), "odd order of GU_3(q)");
    put("cent_c50_odd", f1 * (qp(2) - one) * (qp(3) - one), "odd order of GL_3(q)");
    put("cent_c100_odd", f2 * (qp(2) - one) * (qp(2) - one), "odd order of GU_2(q) x Sp_2(q)");
    put("cent_c80_odd", f1 * (qp(2) - one) * (qp(2) - one), "odd order of GL_2(q) x Sp_2(q)");
    put("ss_c60_deg", f4 * f1 * f1 * f3, "semisimple character degree, family c_{6,0}");
    put("ss_c50_deg", f4 * f2 * f2 * f6, "semisimple character degree, family c_{5,0}");
    put("ss_c100_deg", f1 * f4 * s3, "semisimple character degree, family c_{10,0}");
    put("ss_c80_deg", f2 * f4 * s3, "semisimple character degree, family c_{8,0}");

    // ---- small character degrees of G_2(q) used in the decompositions ----
    QPoly sixth_t1 = q * f2 * f2 * f3;
    sixth_t1.den *= 6;
    sixth_t1.normalize();
    QPoly sixth_t1p = q * f1 * f1 * f6;
    sixth_t1p.den *= 6;
    sixth_t1p.normalize();
    QPoly third_t4 = q * s3;
    third_t4.den *= 3;
    third_t4.normalize();
    put("theta_1", sixth_t1, "G_2(q) degree q(q+1)^2(q^2+q+1)/6");
    put("theta_1_prime", sixth_t1p, "G_2(q) degree q(q-1)^2(q^2-q+1)/6");
    put("theta_4", third_t4, "G_2(q) degree q(q^4+q^2+1)/3");

    // ---- degree-screen bounds ----
    put("d_ell_Sp6", half((qp(3) - one) * (qp(3) - q)).divided_by(f2),
        "smallest nontrivial degree of Sp_6(q), cross characteristic");
    put("d_ell_Sp4", half(q * f1 * f1), "smallest nontrivial degree of Sp_4(q)");
    put("m_SL2q3_3", C(3) * (qp(3) + one), "degree bound for SL_2(q^3).3");
    put("m_Sp2wrS3", C(6) * f2 * f2 * f2, "degree bound for Sp_2(q) wr S_3");
    put("m_Sp4xSp2", f4 * f2 * f2 * f2, "degree bound for Sp_4(q) x Sp_2(q)");

    return cat;
}

}  // namespace

const CatalogEntry& Catalog::entry(const std::string& name) const {
    auto it = entries.find(name);
    if (it == entries.end()) throw std::out_of_range("catalog: unknown name " + name);
    return it->second;
}

const QPoly& Catalog::lookup(const std::string& name) const { return entry(name).poly; }

const Catalog& Catalog::instance() {
    static Catalog cat = build_catalog();
    return cat;
}

namespace {

void check(std::vector<IdentityResult>& out, const std::string& name, bool pass,
           const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

void check_eq(std::vector<IdentityResult>& out, const std::string& name, const QPoly& a,
              const QPoly& b) {
    bool ok = a == b;
    check(out, name, ok, ok ? "" : a.str() + " != " + b.str());
}

}  // namespace

std::vector<IdentityResult> verify_catalog_identities() {
    std::vector<IdentityResult> out;
    const Catalog& cat = Catalog::instance();
    auto L = [&](const std::string& n) -> const QPoly& { return cat.lookup(n); };
    QPoly one = QPoly(1);
    QPoly q = QPoly::q();

    // (i) orbit partitions of Irr(Z_j)
    check_eq(out, "orbit_partition_Z3",
             L("O_1") + L("O_2_minus") + L("O_2_plus") + L("O_3") + one, QPoly::monomial(6));
    check_eq(out, "orbit_partition_Z2",
             L("Z2_O_1") + L("Z2_O_2_minus") + L("Z2_O_2_plus") + one, QPoly::monomial(3));

    // (ii) orbit-stabilizer products
    check_eq(out, "orbit_stabilizer_Z3_O1", L("O_1") * L("stab_O_1"), L("GL3_order"));
    check_eq(out, "orbit_stabilizer_Z3_O2m", L("O_2_minus") * L("stab_O_2_minus"), L("GL3_order"));
    check_eq(out, "orbit_stabilizer_Z3_O2p", L("O_2_plus") * L("stab_O_2_plus"), L("GL3_order"));
    check_eq(out, "orbit_stabilizer_Z3_O3", L("O_3") * L("stab_O_3"), L("GL3_order"));
    check_eq(out, "orbit_stabilizer_Z2_O1", L("Z2_O_1") * L("Z2_stab_O_1"), L("GL2_order"));
    check_eq(out, "orbit_stabilizer_Z2_O2m", L("Z2_O_2_minus") * L("Z2_stab_O_2_minus"),
             L("GL2_order"));
    check_eq(out, "orbit_stabilizer_Z2_O2p", L("Z2_O_2_plus") * L("Z2_stab_O_2_plus"),
             L("GL2_order"));

    // (iii) bound comparisons: B_3 = B_2^+ symbolically, chain at sampled q
    check_eq(out, "B3_eq_B2plus", L("B_3"), L("B_2_plus"));
    {
        bool chain = true;
        std::string det;
        for (long long qv : {4LL, 8LL, 16LL, 32LL}) {
            // compare squares to keep the radicals exact
            long long b2p = L("B_2_plus").eval_int(qv);
            long long b2m = cat.entry("B_2_minus").poly.eval_int(qv);
            long long b2m_rad = cat.entry("B_2_minus").radicand->eval_int(qv);
            long long b1 = cat.entry("B_1").poly.eval_int(qv);
            long long b1_rad = cat.entry("B_1").radicand->eval_int(qv);
            bool ok1 = (__int128)b2p * b2p > (__int128)b2m * b2m * b2m_rad;
            bool ok2 = (__int128)b2m * b2m * b2m_rad > (__int128)b1 * b1 * b1_rad;
            if (!(ok1 && ok2)) {
                chain = false;
                det = "fails at q=" + std::to_string(qv);
            }
        }
        check(out, "bound_chain_B2p_B2m_B1", chain, det);
    }

    // (v) Table 3: index times odd centralizer order equals odd group order
    for (const char* c : {"c40", "c30", "c60", "c50", "c100", "c80"})
        check_eq(out, std::string("table3_product_") + c,
                 L(std::string("idx_") + c) * L(std::string("cent_") + c + "_odd"),
                 L("Sp6_order_odd"));

    // (vi) zeta and tau degree splittings
    for (int n = 2; n <= 3; ++n) {
        std::string s = "_" + std::to_string(n);
        check_eq(out, "zeta_deg_split" + s,
                 (QPoly::monomial(2 * n) + q).divided_by(q + one), L("alpha" + s) + L("beta" + s));
        check_eq(out, "tau_deg_split" + s,
                 (QPoly::monomial(2 * n) + q - QPoly(2)).divided_by(q - one) - QPoly(2),
                 L("rho" + s + "_1") + L("rho" + s + "_2"));
    }

    // degree identities for semisimple-series characters
    check_eq(out, "ss_deg_zeta3_c40", L("zeta_3"), L("idx_c40"));
    check_eq(out, "ss_deg_tau3_c30", L("tau_3"), L("idx_c30"));
    check_eq(out, "ss_deg_c60", L("ss_c60_deg"), L("idx_c60"));
    check_eq(out, "ss_deg_c50", L("ss_c50_deg"), L("idx_c50"));
    check_eq(out, "ss_deg_c100", L("ss_c100_deg"), L("idx_c100"));
    check_eq(out, "ss_deg_c80", L("ss_c80_deg"), L("idx_c80"));

    // the D-bound rewriting in the (q^2-q+1) case
    check_eq(out, "D_case_rewrite", L("D_unip_a") - L("White_chi_5"), L("D_unip_c"));

    // identification of Weil degrees with White's labels
    check_eq(out, "white_chi2_is_rho32", L("White_chi_2"), L("rho_3_2"));
    check_eq(out, "white_chi3_is_beta3", L("White_chi_3"), L("beta_3"));
    check_eq(out, "white_chi4_is_rho31", L("White_chi_4"), L("rho_3_1"));
    check_eq(out, "white_chi5_is_alpha3", L("White_chi_5"), L("alpha_3"));

    // (iv) Brauer-character degree consistency, per unipotent-block table
    QPoly f1 = cyclotomic(1), f2 = cyclotomic(2), f3 = cyclotomic(3), f4 = cyclotomic(4),
          f6 = cyclotomic(6);
    auto W = [&](int i) -> const QPoly& { return L("White_chi_" + std::to_string(i)); };
    auto halfq = [&](const QPoly& p) {
        QPoly r = p;
        r.den *= 2;
        r.normalize();
        return r;
    };

    // ell = 3 | (q-1)
    check_eq(out, "app5_chi4m1", W(4) - W(1), halfq(q * f6 * f2 * f2) - one);
    check_eq(out, "app5_chi9m3", W(9) - W(3),
             halfq(QPoly::monomial(4) * f6 * f2 * f2) - halfq(q * f6 * f4));
    check_eq(out, "app5_chi10m4p1", W(10) - W(4) + W(1),
             halfq(QPoly::monomial(4) * f6 * f4) - halfq(q * f6 * f2 * f2) + one);
    check_eq(out, "app5_chi12m9p3", W(12) - W(9) + W(3),
             QPoly::monomial(9) - halfq(QPoly::monomial(4) * f6 * f2 * f2) + halfq(q * f6 * f4));

    // ell | (q+1): principal-block rows (beta_1 resolved to 1)
    check_eq(out, "app6_phi2_beta1_resolved", W(2) - W(1), halfq(q * f3 * f4) - one);
    check_eq(out, "app6_phi3", W(3) - W(1), halfq(q * f6 * f4) - one);
    check_eq(out, "app6_phi5", W(6) - W(3) - W(2) + W(1), f3 * f1 * f1 * f4);
    check_eq(out, "app6_phi6", W(7) - W(6) + W(3) - W(1), f1 * f3 * (f4 * f6 - halfq(q * f1)));
    check_eq(out, "app6_phi6_is_chi35m5", W(35) - W(5), W(7) - W(6) + W(3) - W(1));
    for (long long alpha : {1LL, 2LL}) {
        QPoly a(alpha);
        check_eq(out, "app6_phi7_alpha" + std::to_string(alpha),
                 W(8) - W(7) - a * W(5) - W(3) + W(1),
                 halfq(q * f1 * f3 * f4 * f6) - halfq((a - one) * q * f1 * f1 * f3) -
                     halfq(q * f4 * f6) + one);
        check_eq(out, "app6_phi7_chi22_form_alpha" + std::to_string(alpha),
                 W(22) - (a - one) * W(5) - W(3) + W(1), W(8) - W(7) - a * W(5) - W(3) + W(1));
    }
    check_eq(out, "app6_phi8", W(10) - W(7) + W(6) - W(3), halfq(q * f1 * f1 * f1 * f3 * f6));
    check_eq(out, "app6_phi8_is_chi23", W(23), W(10) - W(7) + W(6) - W(3));
    check_eq(out, "app6_phi9", W(11) - W(5), halfq(q * f1 * f1 * f1 * f3 * f3));
    {
        // phi_10 with the unknown parameters at their range endpoints
        QPoly b2lo(1), b2hi = halfq(q + QPoly(2));
        QPoly b3lo(1), b3hi = halfq(q);
        bool ok = true;
        for (const QPoly& b2 : {b2lo, b2hi})
            for (const QPoly& b3 : {b3lo, b3hi}) {
                QPoly lhs = W(30) - b3 * (W(11) - W(5)) - (b2 - one) * W(23) - W(28);
                QPoly rhs = f1 * f1 * f3 *
                            (QPoly::monomial(3) * f4 - halfq(b3 * QPoly::monomial(4)) +
                             halfq(b3 * q) - f4 - halfq((b2 - one) * q * f1 * f6));
                if (!(lhs == rhs)) ok = false;
            }
        check(out, "app6_phi10_endpoints", ok);
    }
    check_eq(out, "app6_b1_chi9m4", W(9) - W(4),
             halfq(q * f2 * f2 * f6 * (QPoly::monomial(3) - one)));

    // ell | (q^2-q+1), ell != 3
    check_eq(out, "app7_chi2m1", W(2) - W(1), halfq(q * f3 * f4) - one);
    check_eq(out, "app7_chi8m2p1", W(8) - W(2) + W(1),
             halfq(QPoly::monomial(4) * f3 * f4) - halfq(q * f3 * f4) + one);
    check_eq(out, "app7_chi12m8p2m1", W(12) - W(8) + W(2) - W(1),
             QPoly::monomial(9) - halfq(QPoly::monomial(4) * f3 * f4) + halfq(q * f3 * f4) - one);
    check_eq(out, "app7_chi11m5", W(11) - W(5),
             halfq(QPoly::monomial(4) * f1 * f1 * f3) - halfq(q * f1 * f1 * f3));

    // ell | (q^2+q+1), ell != 3
    check_eq(out, "app8_chi4m1", W(4) - W(1), halfq(q * f2 * f2 * f6) - one);
    check_eq(out, "app8_chi10m4p1", W(10) - W(4) + W(1),
             halfq(QPoly::monomial(4) * f4 * f6) - halfq(q * f2 * f2 * f6) + one);
    check_eq(out, "app8_chi9m3", W(9) - W(3),
             halfq(QPoly::monomial(4) * f2 * f2 * f6) - halfq(q * f4 * f6));
    check_eq(out, "app8_chi12m9p3", W(12) - W(9) + W(3),
             QPoly::monomial(9) - halfq(QPoly::monomial(4) * f2 * f2 * f6) + halfq(q * f4 * f6));

    // ell | (q^2+1)
    QPoly s3p = QPoly::monomial(4) + QPoly::monomial(2) + one;
    check_eq(out, "app9_chi6m1", W(6) - W(1), QPoly::monomial(2) * s3p - one);
    check_eq(out, "app9_chi9m6p1", W(9) - W(6) + W(1),
             halfq(QPoly::monomial(4) * f2 * f2 * f6) - QPoly::monomial(2) * s3p + one);
    check_eq(out, "app9_chi7m4", W(7) - W(4),
             QPoly::monomial(3) * s3p - halfq(q * f2 * f2 * f6));
    check_eq(out, "app9_chi12m7p4", W(12) - W(7) + W(4),
             QPoly::monomial(9) - QPoly::monomial(3) * s3p + halfq(q * f2 * f2 * f6));

    // degree rows quoted in the statement of the low-dimension theorem
    check_eq(out, "thm11_a3_row2", W(7) - W(4),
             QPoly::monomial(3) * s3p - halfq(q * f2 * (QPoly::monomial(3) + one)));
    check_eq(out, "thm11_a3_row3", W(7) - W(6) + W(3) - W(1),
             f1 * f4 * s3p - halfq(q * f1 * (QPoly::monomial(3) - one)));

    // restriction-to-G_2 degree facts
    check_eq(out, "thm51_tau3_deg", L("tau_3"), f3 * (QPoly::monomial(3) + one));
    check_eq(out, "thm51_zeta3_deg", L("zeta_3"), f6 * (QPoly::monomial(3) - one));
    check_eq(out, "thm52_rho32_split", L("rho_3_2"), L("theta_1") + L("theta_4"));
    check_eq(out, "thm52_beta3_split", L("beta_3"), L("theta_1_prime") + L("theta_4"));

    // cyclotomic factor basis sanity
    for (int k = 1; k <= 12; ++k) {
        QPoly prod(1);
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) prod = prod * cyclotomic(d);
        check_eq(out, "cyclotomic_product_" + std::to_string(k), prod,
                 QPoly::monomial(k) - one);
    }

    // parabolic index transcriptions
    check_eq(out, "P3_order_product", L("P3_order"), QPoly::monomial(6) * L("GL3_order"));
    check_eq(out, "P3_index_transcription", L("P3_index_Z"),
             L("P3_order").divided_by(QPoly::monomial(6)));

    // the basic reduction screen for SL_2(q^3).3, as a positivity certificate
    check(out, "screen_SL2q3_positive_q_ge_4",
          (L("d_ell_Sp6") - L("m_SL2q3_3")).positive_for_q_geq(4));

    return out;
}

}  // namespace sw
