#include "sw/matrix.hpp"

#include <stdexcept>

namespace sw {

Mat Mat::identity(int n) {
    Mat m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::operator==(const Mat& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n * n; ++i)
        if (e[i] != o.e[i]) return false;
    return true;
}

Mat mul(const Gf& f, const Mat& a, const Mat& b) {
    Mat c;
    c.n = a.n;
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            uint16_t v = a.at(i, k);
            if (!v) continue;
            for (int j = 0; j < a.n; ++j) {
                uint16_t w = b.at(k, j);
                if (w) c.at(i, j) ^= f.mul(v, w);
            }
        }
    return c;
}

Mat transpose(const Mat& a) {
    Mat t;
    t.n = a.n;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

bool is_identity(const Mat& a) {
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (a.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Mat inverse(const Gf& f, const Mat& a) {
    int n = a.n;
    Mat w = a, inv = Mat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (w.at(r, col)) { piv = r; break; }
        if (piv < 0) throw std::domain_error("inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w.e[piv * n + j], w.e[col * n + j]);
                std::swap(inv.e[piv * n + j], inv.e[col * n + j]);
            }
        uint16_t d = f.inv(w.at(col, col));
        for (int j = 0; j < n; ++j) {
            w.at(col, j) = f.mul(w.at(col, j), d);
            inv.at(col, j) = f.mul(inv.at(col, j), d);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            uint16_t t = w.at(r, col);
            if (!t) continue;
            for (int j = 0; j < n; ++j) {
                w.at(r, j) ^= f.mul(t, w.at(col, j));
                inv.at(r, j) ^= f.mul(t, inv.at(col, j));
            }
        }
    }
    return inv;
}

int rank(const Gf& f, const Mat& a) {
    Mat w = a;
    int n = a.n, rk = 0;
    for (int col = 0; col < n && rk < n; ++col) {
        int piv = -1;
        for (int r = rk; r < n; ++r)
            if (w.at(r, col)) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rk)
            for (int j = 0; j < n; ++j) std::swap(w.e[piv * n + j], w.e[rk * n + j]);
        uint16_t d = f.inv(w.at(rk, col));
        for (int j = 0; j < n; ++j) w.at(rk, j) = f.mul(w.at(rk, j), d);
        for (int r = 0; r < n; ++r) {
            if (r == rk) continue;
            uint16_t t = w.at(r, col);
            if (!t) continue;
            for (int j = 0; j < n; ++j) w.at(r, j) ^= f.mul(t, w.at(rk, j));
        }
        ++rk;
    }
    return rk;
}

std::vector<uint16_t> charpoly(const Gf& f, const Mat& a) {
    // Hessenberg reduction by similarity, then the standard recurrence.
    // Characteristic 2, so no signs anywhere.
    int n = a.n;
    Mat h = a;
    for (int m = 0; m + 2 < n; ++m) {
        int piv = -1;
        for (int r = m + 1; r < n; ++r)
            if (h.at(r, m)) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != m + 1) {
            for (int j = 0; j < n; ++j) std::swap(h.e[piv * n + j], h.e[(m + 1) * n + j]);
            for (int i = 0; i < n; ++i) std::swap(h.e[i * n + piv], h.e[i * n + m + 1]);
        }
        uint16_t d = f.inv(h.at(m + 1, m));
        for (int r = m + 2; r < n; ++r) {
            uint16_t t = h.at(r, m);
            if (!t) continue;
            uint16_t c = f.mul(t, d);
            for (int j = 0; j < n; ++j) h.at(r, j) ^= f.mul(c, h.at(m + 1, j));
            for (int i = 0; i < n; ++i) h.at(i, m + 1) ^= f.mul(c, h.at(i, r));
        }
    }
    // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[i][m-1] (prod subdiag) p_i
    std::vector<std::vector<uint16_t>> p(n + 1);
    p[0] = {1};
    for (int m = 1; m <= n; ++m) {
        p[m].assign(m + 1, 0);
        // x * p_{m-1}
        for (int k = 0; k < m; ++k) p[m][k + 1] ^= p[m - 1][k];
        // + h[m-1][m-1] * p_{m-1}
        uint16_t d = h.at(m - 1, m - 1);
        if (d)
            for (int k = 0; k < m; ++k) p[m][k] ^= f.mul(d, p[m - 1][k]);
        uint16_t sub = 1;
        for (int i = m - 2; i >= 0; --i) {
            sub = f.mul(sub, h.at(i + 1, i));
            if (!sub) break;
            uint16_t c = f.mul(sub, h.at(i, m - 1));
            if (!c) continue;
            for (int k = 0; k <= i; ++k) p[m][k] ^= f.mul(c, p[i][k]);
        }
    }
    return p[n];
}

uint32_t mat_order(const Gf& f, const Mat& a, uint32_t cap) {
    Mat x = a;
    for (uint32_t k = 1; k <= cap; ++k) {
        if (is_identity(x)) return k;
        x = mul(f, x, a);
    }
    throw std::domain_error("mat_order: cap exceeded");
}

Mat lift_to_ext(const Field& F, const Mat& a) {
    Mat b;
    b.n = a.n;
    for (int i = 0; i < a.n * a.n; ++i) b.e[i] = F.embed(a.e[i]);
    return b;
}

Mat gram_standard(int half_rank) {
    Mat j = Mat::zero(2 * half_rank);
    for (int i = 0; i < half_rank; ++i) {
        j.at(i, half_rank + i) = 1;
        j.at(half_rank + i, i) = 1;
    }
    return j;
}

bool is_symplectic(const Gf& f, const Mat& b) {
    Mat j = gram_standard(b.n / 2);
    Mat t = mul(f, transpose(b), mul(f, j, b));
    return t == j;
}

Mat symplectic_basis(const Gf& f, const Mat& gram) {
    // hyperbolic-pair extraction; columns of the result are the new basis
    int n = gram.n;
    if (n % 2) throw std::invalid_argument("symplectic_basis: odd dimension");
    std::vector<std::vector<uint16_t>> basis;   // chosen vectors e_1..e_k, f_1..f_k interleaved
    std::vector<std::vector<uint16_t>> pool;
    for (int i = 0; i < n; ++i) {
        std::vector<uint16_t> v(n, 0);
        v[i] = 1;
        pool.push_back(v);
    }
    auto form = [&](const std::vector<uint16_t>& x, const std::vector<uint16_t>& y) {
        uint16_t s = 0;
        for (int i = 0; i < n; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < n; ++j)
                if (gram.at(i, j) && y[j]) s ^= f.mul(x[i], f.mul(gram.at(i, j), y[j]));
        }
        return s;
    };
    std::vector<std::vector<uint16_t>> es, fs;
    while ((int)es.size() < n / 2) {
        // pick u in the pool not orthogonal to everything remaining
        bool found = false;
        for (size_t i = 0; i < pool.size() && !found; ++i)
            for (size_t j = i + 1; j < pool.size() && !found; ++j) {
                uint16_t b = form(pool[i], pool[j]);
                if (!b) continue;
                std::vector<uint16_t> u = pool[i], w = pool[j];
                uint16_t bi = f.inv(b);
                for (auto& c : w) c = f.mul(c, bi);   // now form(u,w) = 1
                es.push_back(u);
                fs.push_back(w);
                // reduce the rest of the pool against the pair
                std::vector<std::vector<uint16_t>> next;
                for (auto& v : pool) {
                    std::vector<uint16_t> r = v;
                    uint16_t cu = form(r, w), cw = form(u, r);
                    for (int t = 0; t < n; ++t) r[t] ^= f.add(f.mul(cu, u[t]), f.mul(cw, w[t]));
                    bool zero = true;
                    for (auto c : r)
                        if (c) zero = false;
                    if (!zero) next.push_back(r);
                }
                pool = next;
                found = true;
            }
        if (!found) throw std::domain_error("symplectic_basis: degenerate form");
    }
    Mat p = Mat::zero(n);
    int k = n / 2;
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < n; ++r) {
            p.at(r, c) = es[c][r];
            p.at(r, k + c) = fs[c][r];
        }
    return p;
}

}  // namespace sw
