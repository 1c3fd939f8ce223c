#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sw {

// Polynomial in the indeterminate q with integer coefficient vector over a
// single positive integer denominator.  All catalog formulas live here.
struct QPoly {
    std::vector<long long> num;   // num[i] = coefficient of q^i
    long long den = 1;            // > 0

    QPoly() = default;
    QPoly(long long c) : num{c} {}
    static QPoly monomial(int deg, long long c = 1);
    static QPoly q() { return monomial(1); }

    int degree() const;
    bool is_zero() const;
    void normalize();   // strip leading zeros, reduce by gcd, den > 0

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    bool operator==(const QPoly& o) const;

    // exact division; throws if the remainder is nonzero
    QPoly divided_by(const QPoly& o) const;

    // exact value at integer q; throws if not integral there
    long long eval_int(long long qv) const;
    bool integral_at(long long qv) const;

    // substitute q -> q + shift (used for positivity certificates)
    QPoly shifted(long long shift) const;
    // true if provably positive for all integer q >= threshold
    bool positive_for_q_geq(long long threshold) const;

    std::string str() const;
};

QPoly cyclotomic(int j);   // Phi_j(q), 1 <= j <= 12

// One catalog entry: a polynomial, an optional radicand (entries of the form
// poly * sqrt(radicand), used by two of the restriction bounds), and a
// provenance note.
struct CatalogEntry {
    QPoly poly;
    std::optional<QPoly> radicand;
    std::string provenance;
};

struct Catalog {
    std::map<std::string, CatalogEntry> entries;

    const CatalogEntry& entry(const std::string& name) const;
    const QPoly& lookup(const std::string& name) const;   // plain polynomial entries
    bool has(const std::string& name) const { return entries.count(name) != 0; }

    static const Catalog& instance();
};

struct IdentityResult {
    std::string name;
    bool pass;
    std::string detail;
};

// The symbolic identity suite: orbit partitions, orbit-stabilizer products,
// bound comparisons, Brauer-table degree consistency, index-centralizer
// products, and the degree identities for the zeta/tau sums.
std::vector<IdentityResult> verify_catalog_identities();

}  // namespace sw
