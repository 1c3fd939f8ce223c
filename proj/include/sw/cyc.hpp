#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sw {

// Exact rational with 64-bit parts; throws on overflow-prone denominators is
// not attempted — magnitudes here stay far below 2^63.
struct Rat {
    long long num = 0;
    long long den = 1;
    Rat() = default;
    Rat(long long n, long long d = 1);
    void reduce();
    bool is_integer() const { return den == 1; }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    Rat operator+(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    std::string str() const;
};

// Reduction context for Z[zeta_m]: the cyclotomic polynomial Phi_m and a
// table expressing x^e (phi(m) <= e < m) over the power basis.
struct CycCtx {
    uint32_t m = 1;
    uint32_t phi = 1;
    std::vector<long long> phim;                 // monic, degree phi
    std::vector<std::vector<long long>> red;     // red[e - phi] for e in [phi, m)

    static const CycCtx& get(uint32_t m);
};

// Element of Z[zeta_m], kept as a sparse sorted list of (exponent, coeff)
// with exponents in [0, m).  Canonicalization against Phi_m happens only at
// comparison and rationality checks.
struct Cyc {
    std::vector<std::pair<uint32_t, long long>> t;

    static Cyc integer(long long c);
    static Cyc root(uint32_t e, uint32_t m, long long c = 1);   // c * zeta_m^e

    bool is_structurally_zero() const { return t.empty(); }
    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc mul(const Cyc& o, uint32_t m) const;
    Cyc conj(uint32_t m) const;
    Cyc scaled(long long c) const;

    std::vector<long long> canonical(const CycCtx& cx) const;
    bool is_zero(const CycCtx& cx) const;
    bool equals(const Cyc& o, const CycCtx& cx) const;
    // the value as a rational integer, if it is one
    std::optional<long long> as_integer(const CycCtx& cx) const;
    // exact division by an integer scalar; throws if not divisible
    Cyc divided_by_int(long long d, const CycCtx& cx) const;

    std::string str() const;
};

}  // namespace sw
