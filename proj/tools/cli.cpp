#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sw/classify.hpp"
#include "sw/json_io.hpp"
#include "sw/qpoly.hpp"
#include "sw/subgroups.hpp"
#include "sw/weil.hpp"

using namespace sw;
using nlohmann::json;

namespace {

struct CommonOpts {
    int n = 3;
    int q = 2;
    uint32_t ell = 0;
    std::string subgroup;
    std::string out;
    uint64_t seed = 0;
    uint64_t budget = 2000000;
    int threads = 0;
};

void add_common(CLI::App* app, CommonOpts& o) {
    app->add_option("--n", o.n, "half rank of the symplectic group");
    app->add_option("--q", o.q, "field size (power of 2)");
    app->add_option("--ell", o.ell, "characteristic for Brauer-level options (0 = ordinary)");
    app->add_option("--subgroup", o.subgroup, "named subgroup (see README)");
    app->add_option("--out", o.out, "output directory for JSON artifacts");
    app->add_option("--seed", o.seed, "seed recorded in reports (all computations are exact)");
    app->add_option("--budget", o.budget, "enumeration budget in elements");
    app->add_option("--threads", o.threads, "worker threads (<= 1 selects the serial kernels)");
}

void apply_common(const CommonOpts& o) {
    if (o.threads > 0) set_thread_count(o.threads);
}

json meta(const CommonOpts& o, const std::string& cmd) {
    json j;
    j["command"] = cmd;
    j["n"] = o.n;
    j["q"] = o.q;
    j["ell"] = o.ell;
    j["seed"] = o.seed;
    j["budget"] = o.budget;
    return j;
}

void emit(const CommonOpts& o, const std::string& fname, const std::string& content) {
    if (o.out.empty()) return;
    std::filesystem::create_directories(o.out);
    write_text_file(o.out + "/" + fname, content);
}

int cmd_identities(const CommonOpts& o) {
    apply_common(o);
    auto results = verify_catalog_identities();
    bool all = true;
    json rows = json::array();
    for (const auto& r : results) {
        std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name
                  << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
        rows.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all = all && r.pass;
    }
    std::cout << (all ? "all identities pass" : "identity failures present") << " ("
              << results.size() << " checks)\n";
    json j = meta(o, "identities");
    j["results"] = rows;
    j["all_pass"] = all;
    emit(o, "identities.json", j.dump(1) + "\n");
    return all ? 0 : 1;
}

int cmd_table(const CommonOpts& o) {
    apply_common(o);
    Workspace ws;
    ws.budget = o.budget;
    GroupBundle& gb = ws.sp(o.n, o.q);
    std::cout << gb.G.name << ": order " << gb.G.order() << ", " << gb.cd.k()
              << " classes, exponent " << gb.cd.exponent() << ", Dixon prime " << gb.T.dixon_prime
              << "\n";
    std::cout << "degrees:";
    for (long long d : gb.T.degrees) std::cout << " " << d;
    std::cout << "\n";
    if (!o.out.empty()) {
        std::filesystem::create_directories(o.out);
        write_char_table(o.out + "/table.json", gb.G, gb.cd, gb.T);
        std::cout << "wrote " << o.out << "/table.json\n";
    }
    return 0;
}

int cmd_weil(const CommonOpts& o) {
    apply_common(o);
    Workspace ws;
    ws.budget = o.budget;
    GroupBundle& gb = ws.sp(o.n, o.q);
    auto& wc = gb.wc;
    auto show = [&](const char* nm, uint32_t row) {
        std::cout << "  " << nm << " -> row " << row << ", degree " << gb.T.degrees[row] << "\n";
    };
    show("alpha", wc.alpha);
    show("beta", wc.beta);
    show("rho^1", wc.rho1);
    show("rho^2", wc.rho2);
    for (size_t i = 0; i < wc.zeta.size(); ++i)
        show(("zeta^" + std::to_string(i + 1)).c_str(), wc.zeta[i]);
    for (size_t i = 0; i < wc.tau.size(); ++i)
        show(("tau^" + std::to_string(i + 1)).c_str(), wc.tau[i]);
    bool cf = weil_class_function_check(gb.G, gb.cd, default_exec_mode());
    std::cout << "formula values constant on classes: " << (cf ? "yes" : "NO") << "\n";
    json j = meta(o, "weil");
    j["degrees"] = {{"alpha", gb.T.degrees[wc.alpha]},
                    {"beta", gb.T.degrees[wc.beta]},
                    {"rho1", gb.T.degrees[wc.rho1]},
                    {"rho2", gb.T.degrees[wc.rho2]}};
    j["class_function_check"] = cf;
    emit(o, "weil.json", j.dump(1) + "\n");
    return cf ? 0 : 1;
}

int cmd_fusion(const CommonOpts& o, bool candidates) {
    apply_common(o);
    if (o.subgroup.empty()) {
        std::cerr << "fusion: --subgroup required\n";
        return 2;
    }
    Workspace ws;
    ws.budget = o.budget;
    GroupBundle& gb = ws.sp(o.n, o.q);
    SubBundle& sb = ws.sub(o.n, o.q, o.subgroup);
    std::cout << sb.H.name << " -> " << gb.G.name << ": " << sb.cd.k() << " classes fused\n";
    auto audit = integrality_audit(sb.fus, gb.T, sb.cd, nullptr);
    std::cout << "integrality audit: " << (audit.empty() ? "clean" : "violations!") << "\n";
    for (auto& v : audit) std::cout << "  " << v << "\n";
    json j = meta(o, "fusion");
    j["subgroup"] = sb.H.name;
    j["map"] = sb.fus.h_to_g;
    j["audit_violations"] = audit;
    if (candidates) {
        const CharTable& TH = ws.sub_table(o.n, o.q, o.subgroup);
        auto cands = possible_fusions(sb.cd, TH, gb.cd, gb.T);
        std::cout << "possible fusions: " << cands.size() << " candidate(s)\n";
        bool contains = false;
        json cj = json::array();
        for (auto& c : cands) {
            cj.push_back(c.h_to_g);
            if (c == sb.fus) contains = true;
        }
        std::cout << "contains the exact fusion: " << (contains ? "yes" : "NO") << "\n";
        j["candidates"] = cj;
        j["contains_exact"] = contains;
    }
    emit(o, "fusion.json", j.dump(1) + "\n");
    return audit.empty() ? 0 : 1;
}

int cmd_classify(const CommonOpts& o) {
    apply_common(o);
    Workspace ws;
    ws.budget = o.budget;
    GroupBundle& gb = ws.sp(o.n, o.q);
    json j = meta(o, "classify");
    json rows = json::array();
    std::vector<std::string> names =
        o.subgroup.empty() ? known_subgroup_names(gb.G) : std::vector<std::string>{o.subgroup};
    for (const auto& nm : names) {
        SubBundle& sb = ws.sub(o.n, o.q, nm);
        auto got = ordinary_classification(gb, sb);
        std::cout << gb.G.name << " | H=" << sb.H.name << " (order " << sb.H.order() << "): ";
        if (got.empty()) std::cout << "no nontrivial irreducible restriction";
        for (uint32_t r : got) std::cout << char_display_name(gb, r) << " ";
        std::cout << "\n";
        json row;
        row["subgroup"] = sb.H.name;
        json cs = json::array();
        for (uint32_t r : got) cs.push_back(char_display_name(gb, r));
        row["irreducible_restrictions_ell0"] = cs;
        if (o.ell != 0) {
            const CharTable& TH = ws.sub_table(o.n, o.q, nm);
            json lf = json::array();
            for (uint32_t r = 0; r < gb.T.k(); ++r) {
                if (gb.T.degrees[r] == 1) continue;
                auto res = lift_filters(gb, sb, TH, r);
                lf.push_back({{"chi", char_display_name(gb, r)},
                              {"restricts_irreducibly", res.chi_restricts_irreducibly},
                              {"shifted_lift_possible", res.shifted_lift_possible}});
            }
            row["lift_filters_ell"] = o.ell;
            row["lift_filters"] = lf;
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    emit(o, "classify.json", j.dump(1) + "\n");
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& thm) {
    apply_common(o);
    Workspace ws;
    ws.budget = o.budget;
    VerifyReport rep = verify_published(ws, thm, o.q, o.ell);
    std::cout << rep.text();
    json j = meta(o, "verify");
    j["theorem"] = rep.theorem;
    json rows = json::array();
    for (auto& r : rep.rows)
        rows.push_back({{"subgroup", r.subgroup},
                        {"character", r.character},
                        {"verdict", r.verdict},
                        {"justification", r.justification}});
    j["rows"] = rows;
    j["notes"] = rep.notes;
    j["refuted"] = rep.refuted;
    emit(o, "verify.json", j.dump(1) + "\n");
    return rep.refuted ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character-theory workbench for small symplectic groups"};
    app.require_subcommand(1);
    CommonOpts o;
    std::string thm = "1.5";
    bool candidates = false;

    auto* identities = app.add_subcommand("identities", "run the symbolic identity suite");
    add_common(identities, o);
    auto* table = app.add_subcommand("table", "compute an exact character table");
    add_common(table, o);
    table->add_option("--group", [](const std::vector<std::string>&) { return true; },
                      "group family (sp only)");
    auto* weil = app.add_subcommand("weil", "evaluate the Weil character formulas");
    add_common(weil, o);
    auto* fusion = app.add_subcommand("fusion", "class fusion for a named subgroup");
    add_common(fusion, o);
    fusion->add_flag("--candidates", candidates, "also run the fusion constraint solver");
    auto* classify = app.add_subcommand("classify", "irreducible-restriction classification");
    add_common(classify, o);
    auto* verify = app.add_subcommand("verify", "check computations against the published tables");
    add_common(verify, o);
    verify->add_option("--thm", thm, "theorem id: 1.2, 1.3, 1.4 or 1.5");

    CLI11_PARSE(app, argc, argv);
    try {
        if (identities->parsed()) return cmd_identities(o);
        if (table->parsed()) return cmd_table(o);
        if (weil->parsed()) return cmd_weil(o);
        if (fusion->parsed()) return cmd_fusion(o, candidates);
        if (classify->parsed()) return cmd_classify(o);
        if (verify->parsed()) return cmd_verify(o, thm);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
