#pragma once

#include <string>
#include <vector>

#include "sw/chartab.hpp"
#include "sw/group.hpp"

namespace sw {

// per-class map from the classes of H into the classes of G
struct FusionMap {
    std::vector<uint32_t> h_to_g;
    bool operator==(const FusionMap& o) const { return h_to_g == o.h_to_g; }
    bool operator<(const FusionMap& o) const { return h_to_g < o.h_to_g; }
};

// the true fusion computed through the element index; verifies order
// preservation, centralizer divisibility and power-map commutation
FusionMap exact_fusion(const Group& H, const Group& G, const ClassData& cdH,
                       const ClassData& cdG);

// Integrality audit in the style of the class-scalar-product eliminations:
// for every irreducible chi of G, the norm of chi pulled back along f must
// be a rational integer, and when the H-table is supplied every multiplicity
// <chi o f, psi> must be a nonnegative rational integer summing to chi(1).
// Returns a list of human-readable violations; empty iff f passes.
std::vector<std::string> integrality_audit(const FusionMap& f, const CharTable& TG,
                                           const ClassData& cdH, const CharTable* TH);

// All candidate fusions surviving order equality, centralizer divisibility,
// power-map commutation and full character integrality; deterministic
// (lexicographic) order.  Empty result signals inconsistent inputs.
std::vector<FusionMap> possible_fusions(const ClassData& cdH, const CharTable& TH,
                                        const ClassData& cdG, const CharTable& TG);

// Unscreened reference: the norm of chi|_H computed by a sweep over the
// elements of H (no class data or fusion map involved).
Rat restriction_norm_by_elements(const Group& H, const Group& G, const ClassData& cdG,
                                 const ClassFunction& chi, ExecMode mode);
Rat restriction_norm_by_elements_serial_ref(const Group& H, const Group& G, const ClassData& cdG,
                                            const ClassFunction& chi);

}  // namespace sw
