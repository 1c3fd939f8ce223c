#pragma once

#include <map>
#include <string>
#include <vector>

#include "sw/chartab.hpp"
#include "sw/group.hpp"

namespace sw {

// Raw (undivided) evaluation sums of the two Weil formulas from the kernel
// dimensions of an element; dividing by q -+ 1 yields the character values.
Cyc weil_tau_raw(const Field& F, uint32_t m, const Fingerprint& fp, uint32_t i);
Cyc weil_zeta_raw(const Field& F, uint32_t m, const Fingerprint& fp, uint32_t i);

// Character values: tau_n^i(g) and zeta_n^i(g); exact division, i in range.
Cyc weil_tau(const Field& F, uint32_t m, const Fingerprint& fp, uint32_t i);
Cyc weil_zeta(const Field& F, uint32_t m, const Fingerprint& fp, uint32_t i);

// Per-class evaluations as class functions.
ClassFunction weil_tau_fn(const ClassData& cd, uint32_t m, uint32_t i);
ClassFunction weil_zeta_fn(const ClassData& cd, uint32_t m, uint32_t i);

// Exhaustive check that every formula value is constant on conjugacy
// classes (parallel kernel with a serial reference twin).
bool weil_class_function_check(const Group& G, const ClassData& cd, ExecMode mode);
bool weil_class_function_check_serial_ref(const Group& G, const ClassData& cd);

// The named Weil constituents located inside a computed table.
struct WeilConstituents {
    uint32_t alpha = 0, beta = 0, rho1 = 0, rho2 = 0;   // rows of T
    std::vector<uint32_t> tau;    // tau^i rows, i = 1..(q-2)/2
    std::vector<uint32_t> zeta;   // zeta^i rows, i = 1..q/2
    ClassFunction tau0, zeta0;    // the i = 0 evaluations
};

WeilConstituents weil_constituents(const Group& G, const ClassData& cd, const CharTable& T);

// ---- restriction to the centre of a unipotent radical ----

// label of a P_j-orbit on Irr(Z_j): rank of the associated quadratic form,
// and its type (+1 / -1 for even positive rank, 0 otherwise)
struct OrbitLabel {
    int rank = 0;
    int type = 0;
    bool operator<(const OrbitLabel& o) const {
        return rank != o.rank ? rank < o.rank : type < o.type;
    }
    bool operator==(const OrbitLabel& o) const { return rank == o.rank && type == o.type; }
    std::string str() const;
};

struct ZOrbitData {
    int j = 0;
    std::vector<Mat> ys;                 // upper-triangular representatives
    std::vector<OrbitLabel> labels;      // per Y
    std::map<OrbitLabel, uint64_t> orbit_size;
};

// classify Irr(Z_j) by rank and type of q_Y (type by exhaustive zero count)
ZOrbitData z_orbit_classification(const Field& F, int j);

struct OrbitProfile {
    std::map<OrbitLabel, long long> mult;   // per nontrivial orbit
    long long trivial = 0;                  // multiplicity of 1_Z
};

// exact decomposition of chi restricted to Z_j into orbit sums; throws if a
// multiplicity is not a nonnegative integer or differs inside one orbit
OrbitProfile orbit_restriction_profile(const ClassFunction& chi, const ClassData& cdG,
                                       const ParabolicData& pd, const ZOrbitData& zo);

// weight of the profile: sum of multiplicity * orbit size + trivial part
long long profile_degree(const OrbitProfile& p, const ZOrbitData& zo);

}  // namespace sw
