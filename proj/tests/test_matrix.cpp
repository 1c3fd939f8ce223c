#include "doctest.h"
#include "sw/matrix.hpp"

using namespace sw;

namespace {

// characteristic polynomial oracle: coefficient of x^{n-k} is the sum of the
// principal k x k minors (characteristic 2, so signs vanish)
uint16_t det_rec(const Gf& f, const Mat& a, std::vector<int>& rows, std::vector<int>& cols,
                 size_t lvl) {
    if (lvl == rows.size()) return 1;
    uint16_t acc = 0;
    int r = rows[lvl];
    for (size_t ci = lvl; ci < cols.size(); ++ci) {
        std::swap(cols[lvl], cols[ci]);
        uint16_t v = a.at(r, cols[lvl]);
        if (v) acc ^= f.mul(v, det_rec(f, a, rows, cols, lvl + 1));
        std::swap(cols[lvl], cols[ci]);
    }
    return acc;
}

std::vector<uint16_t> charpoly_oracle(const Gf& f, const Mat& a) {
    int n = a.n;
    std::vector<uint16_t> cp(n + 1, 0);
    cp[n] = 1;
    for (int k = 1; k <= n; ++k) {
        uint16_t ek = 0;
        // iterate k-subsets of {0..n-1}
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<int> rows = idx, cols = idx;
            ek ^= det_rec(f, a, rows, cols, 0);
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        cp[n - k] = ek;
    }
    return cp;
}

Mat rand_mat(const Gf& f, int n, uint32_t& state) {
    Mat m;
    m.n = n;
    for (int i = 0; i < n * n; ++i) {
        state = state * 1664525u + 1013904223u;
        m.e[i] = (uint16_t)((state >> 16) % f.q);
    }
    return m;
}

}  // namespace

TEST_CASE("matrix multiply and inverse over GF(4)") {
    Field F = field_create(2);
    uint32_t st = 7;
    for (int trial = 0; trial < 40; ++trial) {
        Mat a = rand_mat(F.base, 4, st);
        if (rank(F.base, a) < 4) continue;
        Mat ai = inverse(F.base, a);
        CHECK(is_identity(mul(F.base, a, ai)));
        CHECK(is_identity(mul(F.base, ai, a)));
    }
}

TEST_CASE("charpoly agrees with the principal-minors oracle") {
    for (int a = 1; a <= 2; ++a) {
        Field F = field_create(a);
        uint32_t st = 3 + a;
        for (int trial = 0; trial < 60; ++trial) {
            int n = 2 + trial % 5;
            Mat m = rand_mat(F.base, n, st);
            CHECK(charpoly(F.base, m) == charpoly_oracle(F.base, m));
        }
    }
}

TEST_CASE("kernel dimension") {
    Field F = field_create(1);
    Mat m = Mat::zero(3);
    CHECK(kernel_dim(F.base, m) == 3);
    m = Mat::identity(3);
    CHECK(kernel_dim(F.base, m) == 0);
    m.at(0, 0) = 0;
    CHECK(kernel_dim(F.base, m) == 1);
}

TEST_CASE("gram and symplectic checks") {
    Field F = field_create(1);
    Mat j = gram_standard(3);
    CHECK(is_symplectic(F.base, Mat::identity(6)));
    Mat t = Mat::identity(6);
    t.at(0, 3) = 1;   // transvection f_1 -> f_1 + e_1
    CHECK(is_symplectic(F.base, t));
    Mat bad = Mat::identity(6);
    bad.at(0, 1) = 1;
    bad.at(3, 4) = 1;   // not symplectic: e_2 -> e_2 + e_1 with wrong f-part
    CHECK(!is_symplectic(F.base, bad));
    CHECK(j == transpose(j));
}

TEST_CASE("symplectic basis extraction normalizes a nonstandard Gram matrix") {
    Field F = field_create(1);
    // tridiagonal alternating Gram on 4 points
    Mat gram = Mat::zero(4);
    for (int i = 0; i < 3; ++i) gram.at(i, i + 1) = gram.at(i + 1, i) = 1;
    Mat p = symplectic_basis(F.base, gram);
    Mat check = mul(F.base, transpose(p), mul(F.base, gram, p));
    CHECK(check == gram_standard(2));
}

TEST_CASE("matrix order") {
    Field F = field_create(1);
    Mat t = Mat::identity(2);
    t.at(0, 1) = 1;
    CHECK(mat_order(F.base, t) == 2);
    Mat c = Mat::zero(2);
    c.at(0, 1) = 1;
    c.at(1, 0) = 1;
    c.at(1, 1) = 1;   // companion of x^2+x+1
    CHECK(mat_order(F.base, c) == 3);
}
