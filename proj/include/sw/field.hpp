#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sw {

// Arithmetic in GF(2^a) via log/antilog tables.  Element values are bit
// patterns over the polynomial basis; 0 is the zero element and 1 the unit.
struct Gf {
    int a = 0;
    uint32_t q = 0;       // 2^a
    uint32_t poly = 0;    // defining polynomial, bit i = coeff of x^i
    std::vector<uint16_t> logt;   // value -> log, logt[0] undefined
    std::vector<uint16_t> expt;   // log -> value, length 2(q-1)

    uint16_t add(uint16_t x, uint16_t y) const { return x ^ y; }
    uint16_t mul(uint16_t x, uint16_t y) const {
        if (x == 0 || y == 0) return 0;
        return expt[logt[x] + logt[y]];
    }
    uint16_t inv(uint16_t x) const {
        if (x == 0) throw std::domain_error("Gf::inv: zero element");
        return expt[(q - 1) - logt[x]];
    }
    uint16_t pow(uint16_t x, long long e) const;
    uint16_t gen() const { return expt[1]; }   // fixed primitive element
    // multiplicative order (order of 0 is undefined, throws)
    uint32_t mul_order(uint16_t x) const;
    uint16_t frob(uint16_t x) const { return mul(x, x); }
    int trace_f2(uint16_t x) const;            // absolute trace into GF(2)
};

// A field element in the log representation used by the generator-file
// format: log index in [0, q-2] when nonzero.
struct FieldElem {
    bool zero = true;
    uint16_t log = 0;
    static FieldElem from_raw(const Gf& f, uint16_t v) {
        return v == 0 ? FieldElem{} : FieldElem{false, f.logt[v]};
    }
    uint16_t raw(const Gf& f) const { return zero ? 0 : f.expt[log]; }
};

// GF(q) together with its quadratic extension GF(q^2), both built from
// Conway polynomials, plus the fixed roots of unity delta (order q-1 in
// GF(q)) and xi (order q+1 in GF(q^2)).
struct Field {
    Gf base;   // GF(2^a)
    Gf ext;    // GF(2^{2a})
    uint16_t delta = 0;   // generator of GF(q)^x
    uint16_t xi = 0;      // element of GF(q^2) of multiplicative order q+1

    uint32_t q() const { return base.q; }
    // subfield embedding GF(q) -> GF(q^2), log scaling by q+1
    uint16_t embed(uint16_t x) const {
        if (x == 0) return 0;
        return ext.expt[(uint32_t)base.logt[x] * (q() + 1)];
    }
};

// Conway polynomial over GF(2), computed (not table-driven): the
// lexicographically least primitive polynomial of degree n compatible with
// the Conway polynomials of all proper subfields.  Cached per degree.
uint32_t conway_poly(int n);

// Construct GF(2^a) and its quadratic extension; 1 <= a <= 8.
Field field_create(int a);

// Build a single Gf table from a defining polynomial (degree n, primitive).
Gf gf_from_poly(int n, uint32_t poly);

}  // namespace sw
