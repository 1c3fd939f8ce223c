#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sw/field.hpp"

namespace sw {

// Dense square matrix over GF(2^k), dimension <= 8.  Entries are raw field
// values.  Heavy loops operate on the packed encoding instead (see group.hpp);
// this type is for construction, linear algebra and IO.
struct Mat {
    int n = 0;
    std::array<uint16_t, 64> e{};

    static Mat identity(int n);
    static Mat zero(int n) { return Mat{n, {}}; }

    uint16_t& at(int i, int j) { return e[i * n + j]; }
    uint16_t at(int i, int j) const { return e[i * n + j]; }

    bool operator==(const Mat& o) const;
};

Mat mul(const Gf& f, const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat inverse(const Gf& f, const Mat& a);     // throws on singular input
bool is_identity(const Mat& a);

// rank and kernel dimension via Gaussian elimination
int rank(const Gf& f, const Mat& a);
inline int kernel_dim(const Gf& f, const Mat& a) { return a.n - rank(f, a); }

// characteristic polynomial, coefficient vector c[0..n] with c[n] = 1
std::vector<uint16_t> charpoly(const Gf& f, const Mat& a);

// multiplicative order; throws if the matrix is singular or order > cap
uint32_t mat_order(const Gf& f, const Mat& a, uint32_t cap = 1u << 20);

// lift a matrix over GF(q) entrywise into GF(q^2) through the fixed embedding
Mat lift_to_ext(const Field& F, const Mat& a);

// the standard alternating Gram matrix [[0, I],[I, 0]] of half-rank n
Mat gram_standard(int half_rank);

// B^T J B == J for the standard J
bool is_symplectic(const Gf& f, const Mat& b);

// Given a nondegenerate alternating Gram matrix over GF(q), return a basis
// change P with P^T G P = standard J (columns of P are the new basis).
Mat symplectic_basis(const Gf& f, const Mat& gram);

}  // namespace sw
