#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sw/field.hpp"
#include "sw/matrix.hpp"

namespace sw {

enum class ExecMode { Serial, Parallel };
ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode m);
void set_thread_count(int k);   // <= 1 selects the serial path

// Row-major packed encoding of a dim x dim matrix over GF(2^a):
// entry (i,j) occupies bits [(i*dim+j)*a, (i*dim+j+1)*a).  Requires
// dim*dim*a <= 64.
struct PackedCodec {
    int dim = 0;
    int abits = 0;

    uint64_t pack(const Mat& m) const;
    Mat unpack(uint64_t x) const;
    int bits() const { return dim * dim * abits; }
};

// Conjugation-invariant element data.  The key form is a compact packing
// used for bucketing all elements; the rich form is kept per class.
struct FpKey {
    uint64_t a = 0, b = 0;
    bool operator==(const FpKey& o) const { return a == o.a && b == o.b; }
    bool operator<(const FpKey& o) const { return a != o.a ? a < o.a : b < o.b; }
};

struct Fingerprint {
    uint32_t order = 0;
    std::vector<uint16_t> charpoly;    // over GF(q), degree dim
    std::vector<uint8_t> ker_base;     // dim ker(g - delta^j), j = 0..q-2
    std::vector<uint8_t> ker_ext;      // dim ker(g - xi^j) over GF(q^2), j = 0..q
    FpKey key() const;                 // compact packing used for bucketing
    bool operator==(const Fingerprint& o) const {
        return order == o.order && charpoly == o.charpoly && ker_base == o.ker_base &&
               ker_ext == o.ker_ext;
    }
};

// A fully enumerated matrix group over GF(q).
struct Group {
    std::shared_ptr<Field> F;
    int half_rank = 0;         // n when symplectic; 0 for generic subgroups
    int dim = 0;
    PackedCodec codec;
    std::string name;
    std::vector<uint64_t> elems;      // sorted, ascending
    std::vector<uint32_t> inv_ord;    // ordinal of the inverse
    std::vector<Mat> generators;

    // open-addressing index over elems, built once
    std::vector<uint64_t> hkeys;
    std::vector<uint32_t> hvals;
    uint64_t hmask = 0;

    uint64_t order() const { return elems.size(); }
    const Gf& gf() const { return F->base; }

    void build_index();
    bool contains(uint64_t packed) const;
    uint32_t ord_of(uint64_t packed) const;   // throws if absent
    Mat mat_of(uint32_t ord) const { return codec.unpack(elems[ord]); }
    uint64_t mul_packed(uint64_t x, uint64_t y) const;
    uint32_t mul_ord(uint32_t x, uint32_t y) const;
    uint64_t pow_packed(uint64_t x, uint64_t e) const;
    uint32_t identity_ord() const;
};

// Standard generators for Sp_{2n}(q): a long-root transvection, the
// hyperbolic-pair swap, Weyl permutations and (q > 2) a torus element.
std::vector<Mat> symplectic_generators(const Field& F, int n);

// Fully enumerated Sp_{2n}(q).  Throws if the group order from the order
// formula exceeds the budget, reporting the required order.
Group symplectic_group(int n, int q, uint64_t budget = 2000000);

// Enumerated subgroup from a membership predicate over G's elements.
Group subgroup_filter(const Group& G, const std::string& name,
                      const std::function<bool(const Mat&)>& pred);

// Enumerated subgroup as the closure of explicit generators (each must lie
// in G).
Group subgroup_closure(const Group& G, const std::string& name,
                       const std::vector<Mat>& gens);

// Deterministic small generating set (greedy over the element list).
std::vector<Mat> find_generators(const Group& G);

struct ClassInfo {
    uint32_t rep = 0;           // ordinal of the representative
    uint64_t size = 0;
    uint64_t centralizer = 0;
    uint32_t elem_order = 0;
    uint64_t min_code = 0;      // minimal packed encoding in the class
    Fingerprint fp;
};

struct ClassData {
    const Group* G = nullptr;
    std::vector<ClassInfo> cls;
    std::vector<uint32_t> class_of;                        // per ordinal
    std::map<uint32_t, std::vector<uint32_t>> power_map;   // prime -> per-class image

    uint32_t k() const { return (uint32_t)cls.size(); }
    uint64_t exponent() const;
    uint32_t class_of_power(uint32_t ci, uint64_t t) const;   // class of rep^t
    uint32_t inverse_class(uint32_t ci) const;
    // classes whose fingerprint key is shared with another class
    std::vector<std::pair<uint32_t, uint32_t>> ambiguous_pairs() const;
};

ClassData conjugacy_classes(const Group& G);

// rich fingerprint of one element
Fingerprint fingerprint(const Field& F, const Mat& g);

struct ParabolicData {
    int j = 0;
    Group P, Q, Z, L;
};

// P_j, Q_j, Z_j, L_j for G = Sp_{2n}(q); the block shapes are verified
// element-wise during construction.
ParabolicData parabolic_decomposition(const Group& G, int j);

// ---- parallel kernels with serial reference twins (see also bench) ----
std::vector<FpKey> fingerprint_keys(const Group& G, ExecMode mode);
std::vector<FpKey> fingerprint_keys_serial_ref(const Group& G);

// class-multiplication coefficients a[i][j][k], flattened k*k*k
std::vector<uint64_t> class_matrix_coeffs(const Group& G, const ClassData& cd, ExecMode mode);
std::vector<uint64_t> class_matrix_coeffs_serial_ref(const Group& G, const ClassData& cd);

}  // namespace sw
