#include "sw/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sw {

std::optional<Rat> IPValue::rational() const {
    auto iv = num.as_integer(CycCtx::get(m));
    if (!iv) return std::nullopt;
    return Rat(*iv, (long long)den);
}

std::optional<long long> IPValue::integer() const {
    auto r = rational();
    if (!r || !r->is_integer()) return std::nullopt;
    return r->num;
}

std::string IPValue::str() const {
    auto r = rational();
    if (r) return r->str();
    return "(" + num.str() + ")/" + std::to_string(den);
}

IPValue inner_product_full(const ClassFunction& f, const ClassFunction& h) {
    if (f.cd != h.cd) throw std::invalid_argument("inner_product: mismatched class data");
    if (f.m != h.m) throw std::invalid_argument("inner_product: mismatched value rings");
    IPValue out;
    out.m = f.m;
    out.den = f.cd->G->order();
    Cyc acc;
    for (uint32_t c = 0; c < f.cd->k(); ++c) {
        Cyc term = f.v[c].mul(h.v[c].conj(f.m), f.m);
        acc = acc + term.scaled((long long)f.cd->cls[c].size);
    }
    out.num = acc;
    return out;
}

Rat inner_product(const ClassFunction& f, const ClassFunction& h) {
    IPValue ip = inner_product_full(f, h);
    auto r = ip.rational();
    if (!r) throw std::domain_error("inner_product: value is not rational: " + ip.str());
    return *r;
}

ClassFunction restrict_along(const ClassFunction& chi, const std::vector<uint32_t>& h_to_g,
                             const ClassData& cdH) {
    if (h_to_g.size() != cdH.k()) throw std::invalid_argument("restrict_along: map size mismatch");
    ClassFunction r;
    r.cd = &cdH;
    r.m = chi.m;
    r.v.reserve(cdH.k());
    for (uint32_t c = 0; c < cdH.k(); ++c) r.v.push_back(chi.v.at(h_to_g[c]));
    return r;
}

std::vector<uint32_t> CharTable::of_degree(long long d) const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < k(); ++i)
        if (degrees[i] == d) out.push_back(i);
    return out;
}

uint32_t dixon_prime(uint64_t order, uint64_t m) {
    if (m < 2) m = 2;
    uint64_t bound = (uint64_t)(2.0 * std::sqrt((double)order)) + 2;
    uint64_t p = m + 1;
    while (p <= bound) p += m;
    auto is_prime = [](uint64_t x) {
        if (x < 2) return false;
        for (uint64_t d = 2; d * d <= x; ++d)
            if (x % d == 0) return false;
        return true;
    };
    while (!is_prime(p)) p += m;
    if (p > 0x7fffffffull) throw std::runtime_error("dixon_prime: prime too large");
    return (uint32_t)p;
}

namespace {

struct ModP {
    uint64_t p;
    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b % p) % p; }
    uint64_t mul(uint64_t a, uint64_t b) const { return a * b % p; }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
    uint64_t generator() const {
        // p - 1 factorization by trial division
        std::vector<uint64_t> ps;
        uint64_t n = p - 1;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                ps.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) ps.push_back(n);
        for (uint64_t g = 2; g < p; ++g) {
            bool ok = true;
            for (uint64_t q : ps)
                if (pow(g, (p - 1) / q) == 1) { ok = false; break; }
            if (ok) return g;
        }
        throw std::logic_error("ModP: no generator");
    }
    uint64_t sqrt_small(uint64_t a) const {
        for (uint64_t x = 0; x < p; ++x)
            if (mul(x, x) == a % p) return x;
        throw std::domain_error("ModP: not a square");
    }
};

using Vec = std::vector<uint64_t>;
using Matp = std::vector<Vec>;   // row major

// coordinates of v in the row space of basis (basis rows independent)
Vec coords_in_basis(const ModP& mp, const Matp& basis, const Vec& v) {
    size_t d = basis.size(), n = v.size();
    Matp aug(d, Vec(n));
    for (size_t i = 0; i < d; ++i) aug[i] = basis[i];
    // row reduce [basis | I] and apply same ops to v? easier: solve x * basis = v
    // via Gaussian elimination on the transpose system
    // build matrix with columns = basis vectors: n x d, solve A x = v
    Matp A(n, Vec(d + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < d; ++j) A[i][j] = basis[j][i];
        A[i][d] = v[i];
    }
    size_t r = 0;
    std::vector<int> pivot_col(d, -1);
    for (size_t c = 0; c < d && r < n; ++c) {
        size_t piv = r;
        while (piv < n && A[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(A[piv], A[r]);
        uint64_t ic = mp.inv(A[r][c]);
        for (size_t j = c; j <= d; ++j) A[r][j] = mp.mul(A[r][j], ic);
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            uint64_t t = A[i][c];
            if (!t) continue;
            for (size_t j = c; j <= d; ++j) A[i][j] = mp.sub(A[i][j], mp.mul(t, A[r][j]));
        }
        pivot_col[c] = (int)r;
        ++r;
    }
    Vec x(d, 0);
    for (size_t c = 0; c < d; ++c)
        if (pivot_col[c] >= 0) x[c] = A[pivot_col[c]][d];
    // consistency check
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = 0;
        for (size_t j = 0; j < d; ++j) s = mp.add(s, mp.mul(x[j], basis[j][i]));
        if (s != v[i]) throw std::logic_error("coords_in_basis: vector outside subspace");
    }
    return x;
}

std::vector<uint64_t> charpoly_modp(const ModP& mp, Matp h) {
    size_t n = h.size();
    for (size_t m2 = 0; m2 + 2 < n; ++m2) {
        size_t piv = m2 + 1;
        while (piv < n && h[piv][m2] == 0) ++piv;
        if (piv == n) continue;
        if (piv != m2 + 1) {
            std::swap(h[piv], h[m2 + 1]);
            for (size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][m2 + 1]);
        }
        uint64_t d = mp.inv(h[m2 + 1][m2]);
        for (size_t r2 = m2 + 2; r2 < n; ++r2) {
            uint64_t t = h[r2][m2];
            if (!t) continue;
            uint64_t c = mp.mul(t, d);
            for (size_t j = 0; j < n; ++j) h[r2][j] = mp.sub(h[r2][j], mp.mul(c, h[m2 + 1][j]));
            for (size_t i = 0; i < n; ++i) h[i][m2 + 1] = mp.add(h[i][m2 + 1], mp.mul(c, h[i][r2]));
        }
    }
    std::vector<std::vector<uint64_t>> p(n + 1);
    p[0] = {1};
    for (size_t m2 = 1; m2 <= n; ++m2) {
        p[m2].assign(m2 + 1, 0);
        for (size_t t = 0; t < m2; ++t) p[m2][t + 1] = p[m2 - 1][t];
        uint64_t dd = h[m2 - 1][m2 - 1];
        if (dd)
            for (size_t t = 0; t < m2; ++t)
                p[m2][t] = mp.sub(p[m2][t], mp.mul(dd, p[m2 - 1][t]));
        uint64_t sub = 1;
        for (int i = (int)m2 - 2; i >= 0; --i) {
            sub = mp.mul(sub, h[i + 1][i]);
            if (!sub) break;
            uint64_t c = mp.mul(sub, h[i][m2 - 1]);
            if (!c) continue;
            for (size_t t = 0; t <= (size_t)i; ++t)
                p[m2][t] = mp.sub(p[m2][t], mp.mul(c, p[i][t]));
        }
    }
    return p[n];
}

Matp kernel_basis_modp(const ModP& mp, Matp a) {
    size_t n = a.size();
    size_t rank = 0;
    std::vector<int> pivot_of_col(n, -1);
    for (size_t c = 0; c < n && rank < n; ++c) {
        size_t piv = rank;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[rank]);
        uint64_t ic = mp.inv(a[rank][c]);
        for (size_t j = 0; j < n; ++j) a[rank][j] = mp.mul(a[rank][j], ic);
        for (size_t i = 0; i < n; ++i) {
            if (i == rank) continue;
            uint64_t t = a[i][c];
            if (!t) continue;
            for (size_t j = 0; j < n; ++j) a[i][j] = mp.sub(a[i][j], mp.mul(t, a[rank][j]));
        }
        pivot_of_col[c] = (int)rank;
        ++rank;
    }
    Matp kb;
    for (size_t c = 0; c < n; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec v(n, 0);
        v[c] = 1;
        for (size_t c2 = 0; c2 < n; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = mp.sub(0, a[pivot_of_col[c2]][c]);
        kb.push_back(v);
    }
    return kb;
}

}  // namespace

CharTable dixon_character_table(const Group& G, const ClassData& cd) {
    uint32_t k = cd.k();
    if (k > 64) throw std::invalid_argument("dixon: more than 64 classes");
    CharTable T;
    T.cd = &cd;
    uint64_t m = cd.exponent();
    T.m = (uint32_t)m;
    const CycCtx& cx = CycCtx::get(T.m);
    ModP mp{dixon_prime(G.order(), m)};
    T.dixon_prime = (uint32_t)mp.p;

    std::vector<uint64_t> a = class_matrix_coeffs(G, cd, default_exec_mode());
    auto aijk = [&](uint32_t i, uint32_t j, uint32_t kk) -> uint64_t {
        return a[((size_t)i * k + j) * k + kk];
    };

    // common eigenvectors of the class matrices over GF(p)
    std::vector<Matp> spaces;
    {
        Matp full(k, Vec(k, 0));
        for (uint32_t i = 0; i < k; ++i) full[i][i] = 1;
        spaces.push_back(full);
    }
    for (uint32_t i = 1; i < k; ++i) {
        bool all_one = true;
        for (auto& s : spaces)
            if (s.size() > 1) all_one = false;
        if (all_one) break;
        // class matrix A_i: rows j, cols kk
        Matp Ai(k, Vec(k));
        for (uint32_t j = 0; j < k; ++j)
            for (uint32_t kk = 0; kk < k; ++kk) Ai[j][kk] = aijk(i, j, kk) % mp.p;
        std::vector<Matp> next;
        for (auto& S : spaces) {
            if (S.size() == 1) {
                next.push_back(S);
                continue;
            }
            size_t d = S.size();
            // restriction M: A_i maps the row-span of S to itself
            Matp M(d, Vec(d));
            for (size_t r = 0; r < d; ++r) {
                Vec img(k, 0);
                for (uint32_t row = 0; row < k; ++row) {
                    uint64_t s = 0;
                    for (uint32_t col = 0; col < k; ++col)
                        s = mp.add(s, mp.mul(Ai[row][col], S[r][col]));
                    img[row] = s;
                }
                M[r] = coords_in_basis(mp, S, img);
            }
            // transpose: we need M with (M x)_r = sum M[r][c] x[c] acting on
            // coordinates; S[r] are basis rows, images expressed in coords:
            // A_i (sum_r x_r S_r) = sum_r x_r img_r = sum_c (sum_r x_r M[r][c]) S_c
            // so the matrix acting on coordinate column vectors is M^T.
            Matp Mt(d, Vec(d));
            for (size_t r = 0; r < d; ++r)
                for (size_t c = 0; c < d; ++c) Mt[c][r] = M[r][c];
            auto cp = charpoly_modp(mp, Mt);
            std::vector<uint64_t> roots;
            for (uint64_t lam = 0; lam < mp.p; ++lam) {
                uint64_t val = 0;
                for (int t = (int)cp.size() - 1; t >= 0; --t) val = mp.add(mp.mul(val, lam), cp[t]);
                if (val == 0) roots.push_back(lam);
            }
            for (uint64_t lam : roots) {
                Matp shifted = Mt;
                for (size_t r = 0; r < d; ++r) shifted[r][r] = mp.sub(shifted[r][r], lam);
                Matp kb = kernel_basis_modp(mp, shifted);
                if (kb.empty()) continue;
                Matp sub;
                for (auto& coeff : kb) {
                    Vec v(k, 0);
                    for (size_t r = 0; r < d; ++r)
                        for (uint32_t c = 0; c < k; ++c)
                            v[c] = mp.add(v[c], mp.mul(coeff[r], S[r][c]));
                    sub.push_back(v);
                }
                next.push_back(sub);
            }
        }
        spaces = next;
    }
    for (auto& s : spaces)
        if (s.size() != 1)
            throw std::logic_error("dixon: eigenspace splitting failed");
    if (spaces.size() != k) throw std::logic_error("dixon: wrong number of eigenvectors");

    // identity class must be class 0
    if (cd.cls[0].size != 1 || cd.cls[0].elem_order != 1)
        throw std::logic_error("dixon: class 0 is not the identity");

    std::vector<long long> sizes(k);
    for (uint32_t c = 0; c < k; ++c) sizes[c] = (long long)cd.cls[c].size;

    uint64_t gorder = G.order();
    std::vector<std::vector<uint64_t>> omega;
    for (auto& S : spaces) {
        Vec w = S[0];
        if (w[0] == 0) throw std::logic_error("dixon: eigenvector vanishes at the identity class");
        uint64_t s = mp.inv(w[0]);
        for (auto& x : w) x = mp.mul(x, s);
        omega.push_back(w);
    }

    // degrees
    std::vector<long long> degrees(k);
    std::vector<std::vector<uint64_t>> values_modp(k, std::vector<uint64_t>(k));
    for (uint32_t idx = 0; idx < k; ++idx) {
        const Vec& w = omega[idx];
        uint64_t s = 0;
        for (uint32_t j = 0; j < k; ++j) {
            uint32_t js = cd.inverse_class(j);
            s = mp.add(s, mp.mul(mp.mul(w[j], w[js]), mp.inv(sizes[j] % mp.p)));
        }
        uint64_t d2 = mp.mul(gorder % mp.p, mp.inv(s));
        uint64_t r = mp.sqrt_small(d2);
        uint64_t deg = std::min(r, mp.p - r);
        if (deg == 0 || gorder % deg != 0)
            throw std::logic_error("dixon: invalid degree " + std::to_string(deg));
        degrees[idx] = (long long)deg;
        for (uint32_t j = 0; j < k; ++j)
            values_modp[idx][j] = mp.mul(mp.mul(deg % mp.p, w[j]), mp.inv(sizes[j] % mp.p));
    }
    {
        unsigned long long sum = 0;
        for (uint32_t idx = 0; idx < k; ++idx)
            sum += (unsigned long long)degrees[idx] * degrees[idx];
        if (sum != gorder) throw std::logic_error("dixon: sum of squared degrees mismatch");
    }

    // lift values to Z[zeta_m]
    uint64_t gen = mp.generator();
    std::vector<ClassFunction> irr(k);
    for (uint32_t idx = 0; idx < k; ++idx) {
        ClassFunction cf;
        cf.cd = &cd;
        cf.m = T.m;
        cf.v.resize(k);
        for (uint32_t j = 0; j < k; ++j) {
            uint32_t dj = cd.cls[j].elem_order;
            uint64_t wd = mp.pow(gen, (mp.p - 1) / dj);
            uint64_t dj_inv = mp.inv(dj % mp.p);
            Cyc val;
            std::vector<std::pair<uint32_t, long long>> terms;
            for (uint32_t s2 = 0; s2 < dj; ++s2) {
                uint64_t acc = 0;
                for (uint32_t t = 0; t < dj; ++t) {
                    uint32_t ct = cd.class_of_power(j, t);
                    uint64_t th = values_modp[idx][ct];
                    // omega^{-s t}
                    uint64_t wexp = mp.pow(wd, (uint64_t)(dj - s2 % dj) % dj * t % dj);
                    acc = mp.add(acc, mp.mul(th, wexp));
                }
                uint64_t ms = mp.mul(acc, dj_inv);
                if (ms > (uint64_t)degrees[idx])
                    throw std::logic_error("dixon: eigenvalue multiplicity out of range");
                if (ms) terms.push_back({s2 * (T.m / dj), (long long)ms});
            }
            std::sort(terms.begin(), terms.end());
            val.t = terms;
            cf.v[j] = val;
        }
        // the eigenvalue multiplicities at each class must sum to the degree
        for (uint32_t j = 0; j < k; ++j) {
            long long s = 0;
            for (auto& [e, c] : cf.v[j].t) s += c;
            if (s != degrees[idx])
                throw std::logic_error("dixon: eigenvalue multiplicities do not sum to the degree");
        }
        if (!cf.v[0].equals(Cyc::integer(degrees[idx]), cx))
            throw std::logic_error("dixon: lifted degree mismatch");
        irr[idx] = std::move(cf);
    }

    // deterministic row order: degree, then canonical value vectors
    std::vector<uint32_t> perm(k);
    for (uint32_t i = 0; i < k; ++i) perm[i] = i;
    std::vector<std::vector<long long>> sortkey(k);
    for (uint32_t i = 0; i < k; ++i) {
        std::vector<long long> key;
        for (uint32_t j = 0; j < k; ++j) {
            auto cv = irr[i].v[j].canonical(cx);
            key.insert(key.end(), cv.begin(), cv.end());
        }
        sortkey[i] = std::move(key);
    }
    std::sort(perm.begin(), perm.end(), [&](uint32_t x, uint32_t y) {
        if (degrees[x] != degrees[y]) return degrees[x] < degrees[y];
        return sortkey[x] < sortkey[y];
    });
    for (uint32_t i = 0; i < k; ++i) {
        T.irr.push_back(std::move(irr[perm[i]]));
        T.degrees.push_back(degrees[perm[i]]);
    }

    verify_orthogonality(T);
    for (long long d : T.degrees)
        if (gorder % (uint64_t)d != 0) throw std::logic_error("dixon: degree does not divide |G|");
    return T;
}

void verify_orthogonality(const CharTable& T) {
    const CycCtx& cx = CycCtx::get(T.m);
    uint32_t k = T.k();
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t j = i; j < k; ++j) {
            IPValue ip = inner_product_full(T.irr[i], T.irr[j]);
            auto iv = ip.num.as_integer(cx);
            if (!iv) throw std::logic_error("orthogonality: non-rational inner product");
            long long expect = (i == j) ? (long long)ip.den : 0;
            if (*iv != expect) throw std::logic_error("orthogonality: row relation failed");
        }
    // column orthogonality
    for (uint32_t c1 = 0; c1 < k; ++c1)
        for (uint32_t c2 = c1; c2 < k; ++c2) {
            Cyc acc;
            for (uint32_t i = 0; i < k; ++i)
                acc = acc + T.irr[i].v[c1].mul(T.irr[i].v[c2].conj(T.m), T.m);
            auto iv = acc.as_integer(cx);
            if (!iv) throw std::logic_error("orthogonality: non-rational column product");
            long long expect = (c1 == c2) ? (long long)T.cd->cls[c1].centralizer : 0;
            if (*iv != expect) throw std::logic_error("orthogonality: column relation failed");
        }
}

std::vector<uint32_t> l_regular_classes(const ClassData& cd, uint32_t ell) {
    if (ell == 2) throw std::invalid_argument("l_regular_classes: ell = 2 is outside scope");
    std::vector<uint32_t> out;
    for (uint32_t c = 0; c < cd.k(); ++c)
        if (ell == 0 || cd.cls[c].elem_order % ell != 0) out.push_back(c);
    return out;
}

BrauerCandidate brauer_candidate(const CharTable& T, uint32_t ell,
                                 const std::vector<std::pair<long long, uint32_t>>& combo) {
    BrauerCandidate bc;
    bc.reg_classes = l_regular_classes(*T.cd, ell);
    for (uint32_t c : bc.reg_classes) {
        Cyc acc;
        for (auto& [coeff, idx] : combo) acc = acc + T.irr.at(idx).v[c].scaled(coeff);
        bc.values.push_back(acc);
    }
    for (auto& [coeff, idx] : combo) bc.degree += coeff * T.degrees.at(idx);
    return bc;
}

}  // namespace sw
