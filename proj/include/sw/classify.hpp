#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sw/chartab.hpp"
#include "sw/fusion.hpp"
#include "sw/group.hpp"
#include "sw/weil.hpp"

namespace sw {

// everything the pipeline needs about one ambient group
struct GroupBundle {
    Group G;
    ClassData cd;
    CharTable T;
    WeilConstituents wc;
};

// a subgroup prepared for restriction work; the character table is computed
// on demand (it is only needed by the lift filters and the fusion solver)
struct SubBundle {
    Group H;
    ClassData cd;
    FusionMap fus;
    std::shared_ptr<CharTable> T;
};

// lazy cache of groups and subgroups, shared by the CLI and the test suites
struct Workspace {
    uint64_t budget = 2000000;

    GroupBundle& sp(int n, int q);
    SubBundle& sub(int n, int q, const std::string& name);
    const CharTable& sub_table(int n, int q, const std::string& name);

  private:
    std::map<std::string, std::unique_ptr<GroupBundle>> groups_;
    std::map<std::string, std::unique_ptr<SubBundle>> subs_;
};

// resolve a character name inside a bundle: "1", "alpha", "beta", "rho1",
// "rho2", "zeta<i>", "tau<i>", "deg<d>" (unique degree), "deg21!zeta1",
// "deg35!rho2"
uint32_t resolve_char(const GroupBundle& gb, const std::string& name);
std::string char_display_name(const GroupBundle& gb, uint32_t row);

enum class Verdict {
    Irreducible,
    Reducible,
    ExcludedByScreen,
    ExcludedByLiftFilter,
    ExcludedByOrbitTest,
    Undecidable,
};
std::string verdict_str(Verdict v);

// ---- Lemma-style screens ----

struct ScreenResult {
    std::vector<uint32_t> survivors;           // rows of T_G
    std::vector<std::string> fired;            // per excluded row: which bound
};
// removes chi with chi(1) > m(H) or chi(1)^2 > |H/Z(H)|
ScreenResult degree_screen(const GroupBundle& gb, uint64_t h_order, uint64_t h_center_order,
                           long long max_h_degree);

// exact list of nontrivial chi with <chi|_H, chi|_H> = 1 (ell = 0)
std::vector<uint32_t> ordinary_classification(const GroupBundle& gb, const SubBundle& sb);
// unscreened oracle: norms by direct element sweep, no fusion map involved
std::vector<uint32_t> ordinary_classification_oracle(const GroupBundle& gb, const Group& H);

struct LiftFilterResult {
    bool chi_restricts_irreducibly;     // norm of chi|_H equals 1
    bool shifted_lift_possible;         // exists lambda with chi|_H - lambda in Irr(H)
    std::string detail;
};
// Applies the lift filters: if chi|_H is reducible, a lifting Brauer
// character cannot restrict irreducibly; if chi|_H - lambda is never
// irreducible for degree-1 lambda (or 0), neither is any hat(chi) - mu.
LiftFilterResult lift_filters(const GroupBundle& gb, const SubBundle& sb, const CharTable& TH,
                              uint32_t chi);

struct OrbitTestResult {
    Verdict verdict = Verdict::Undecidable;
    std::string justification;
};
// long-root fixed points for P_1, orbit profile, Ito divisibility
OrbitTestResult clifford_orbit_test(const GroupBundle& gb, const ParabolicData& pd,
                                    const ZOrbitData& zo, uint32_t chi);

// ---- published-results verification ----

struct TripleReport {
    std::string subgroup;
    std::string character;
    std::string verdict;        // confirmed / refuted / undecidable-at-desk-scale
    std::string justification;
};

struct VerifyReport {
    std::string theorem;
    int q = 0;
    uint32_t ell = 0;
    bool completeness_asserted = false;
    std::vector<TripleReport> rows;
    std::vector<std::string> notes;
    bool refuted = false;
    std::string text() const;
};

// thm ids: "1.2", "1.3", "1.4", "1.5"; ell = 0 runs the ordinary level
VerifyReport verify_published(Workspace& ws, const std::string& thm_id, int q, uint32_t ell);

}  // namespace sw
