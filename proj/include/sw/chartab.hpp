#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sw/cyc.hpp"
#include "sw/group.hpp"

namespace sw {

struct ClassFunction {
    const ClassData* cd = nullptr;
    uint32_t m = 1;              // values live in Z[zeta_m]
    std::vector<Cyc> v;          // one value per class

    Cyc degree_value() const { return v.at(0); }   // class 0 is the identity
};

// inner product numerator and denominator, kept exact; the numerator is a
// cyclotomic integer, the denominator the group order
struct IPValue {
    Cyc num;
    uint64_t den = 1;
    uint32_t m = 1;

    std::optional<Rat> rational() const;
    std::optional<long long> integer() const;
    std::string str() const;
};

IPValue inner_product_full(const ClassFunction& f, const ClassFunction& h);
// convenience: throws unless the value is an exact rational
Rat inner_product(const ClassFunction& f, const ClassFunction& h);

// pull a class function on G back to H along a per-class fusion map
ClassFunction restrict_along(const ClassFunction& chi, const std::vector<uint32_t>& h_to_g,
                             const ClassData& cdH);

struct CharTable {
    const ClassData* cd = nullptr;
    uint32_t m = 1;              // exponent of the group
    uint32_t dixon_prime = 0;
    std::vector<ClassFunction> irr;       // deterministic order: degree, then values
    std::vector<long long> degrees;

    uint32_t k() const { return (uint32_t)irr.size(); }
    // indices of irreducibles of the given degree
    std::vector<uint32_t> of_degree(long long d) const;
};

// Exact ordinary character table via class-multiplication matrices over a
// prime p = 1 (mod exponent), p > 2 sqrt(|G|), lifted into Z[zeta_m].
CharTable dixon_character_table(const Group& G, const ClassData& cd);

// verification helpers (all exact; throw on failure)
void verify_orthogonality(const CharTable& T);

// classes whose element order is coprime to ell; ell = 2 is rejected
std::vector<uint32_t> l_regular_classes(const ClassData& cd, uint32_t ell);

struct BrauerCandidate {
    std::vector<uint32_t> reg_classes;
    std::vector<Cyc> values;
    long long degree = 0;
};

// integer combination of restrictions-to-regular-classes of irreducibles
BrauerCandidate brauer_candidate(const CharTable& T, uint32_t ell,
                                 const std::vector<std::pair<long long, uint32_t>>& combo);

// smallest prime p = 1 (mod m) with p > floor(2 sqrt(order))
uint32_t dixon_prime(uint64_t order, uint64_t m);

}  // namespace sw
