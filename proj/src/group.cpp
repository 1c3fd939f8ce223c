#include "sw/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace sw {

namespace {
ExecMode g_mode = ExecMode::Parallel;
}

ExecMode default_exec_mode() { return g_mode; }
void set_default_exec_mode(ExecMode m) { g_mode = m; }

uint64_t PackedCodec::pack(const Mat& m) const {
    uint64_t x = 0;
    for (int i = dim * dim - 1; i >= 0; --i) x = (x << abits) | m.e[i];
    return x;
}

Mat PackedCodec::unpack(uint64_t x) const {
    Mat m;
    m.n = dim;
    uint64_t mask = (1ull << abits) - 1;
    for (int i = 0; i < dim * dim; ++i) {
        m.e[i] = (uint16_t)(x & mask);
        x >>= abits;
    }
    return m;
}

FpKey Fingerprint::key() const {
    FpKey k;
    k.a = order;
    for (uint16_t c : charpoly) k.a = (k.a << 4) ^ (k.a >> 60) ^ c;
    uint64_t b = 0;
    for (uint8_t d : ker_base) b = (b << 4) | d;
    for (uint8_t d : ker_ext) b = (b << 4) | d;
    k.b = b;
    return k;
}

void Group::build_index() {
    uint64_t cap = 16;
    while (cap < 2 * elems.size()) cap <<= 1;
    hmask = cap - 1;
    hkeys.assign(cap, ~0ull);
    hvals.assign(cap, 0);
    for (uint32_t i = 0; i < elems.size(); ++i) {
        uint64_t h = elems[i] * 0x9e3779b97f4a7c15ull;
        uint64_t pos = (h ^ (h >> 29)) & hmask;
        while (hkeys[pos] != ~0ull) pos = (pos + 1) & hmask;
        hkeys[pos] = elems[i];
        hvals[pos] = i;
    }
}

bool Group::contains(uint64_t packed) const {
    uint64_t h = packed * 0x9e3779b97f4a7c15ull;
    uint64_t pos = (h ^ (h >> 29)) & hmask;
    while (hkeys[pos] != ~0ull) {
        if (hkeys[pos] == packed) return true;
        pos = (pos + 1) & hmask;
    }
    return false;
}

uint32_t Group::ord_of(uint64_t packed) const {
    uint64_t h = packed * 0x9e3779b97f4a7c15ull;
    uint64_t pos = (h ^ (h >> 29)) & hmask;
    while (hkeys[pos] != ~0ull) {
        if (hkeys[pos] == packed) return hvals[pos];
        pos = (pos + 1) & hmask;
    }
    throw std::out_of_range(name + ": element not in group");
}

uint64_t Group::mul_packed(uint64_t x, uint64_t y) const {
    int d = codec.dim;
    if (codec.abits == 1) {
        // rows are d-bit fields; product row i xors the rows of y selected
        // by the bits of row i of x
        uint64_t mask = (1ull << d) - 1;
        uint64_t r = 0;
        for (int i = 0; i < d; ++i) {
            uint64_t xrow = (x >> (i * d)) & mask;
            uint64_t acc = 0;
            while (xrow) {
                int j = __builtin_ctzll(xrow);
                xrow &= xrow - 1;
                acc ^= (y >> (j * d)) & mask;
            }
            r |= acc << (i * d);
        }
        return r;
    }
    const Gf& f = F->base;
    int ab = codec.abits;
    uint64_t mask = (1ull << ab) - 1;
    uint64_t r = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            uint16_t acc = 0;
            for (int k = 0; k < d; ++k) {
                uint16_t xa = (uint16_t)((x >> ((i * d + k) * ab)) & mask);
                if (!xa) continue;
                uint16_t yb = (uint16_t)((y >> ((k * d + j) * ab)) & mask);
                if (yb) acc ^= f.expt[f.logt[xa] + f.logt[yb]];
            }
            r |= (uint64_t)acc << ((i * d + j) * ab);
        }
    return r;
}

uint32_t Group::mul_ord(uint32_t x, uint32_t y) const {
    return ord_of(mul_packed(elems[x], elems[y]));
}

uint64_t Group::pow_packed(uint64_t x, uint64_t e) const {
    uint64_t r = codec.pack(Mat::identity(dim));
    while (e) {
        if (e & 1) r = mul_packed(r, x);
        x = mul_packed(x, x);
        e >>= 1;
    }
    return r;
}

uint32_t Group::identity_ord() const { return ord_of(codec.pack(Mat::identity(dim))); }

std::vector<Mat> symplectic_generators(const Field& F, int n) {
    int d = 2 * n;
    std::vector<Mat> gens;
    // long-root transvection: f_1 -> f_1 + e_1
    Mat t = Mat::identity(d);
    t.at(0, n) = 1;
    gens.push_back(t);
    // hyperbolic-pair swap e_1 <-> f_1
    Mat s = Mat::identity(d);
    s.at(0, 0) = 0;
    s.at(n, n) = 0;
    s.at(0, n) = 1;
    s.at(n, 0) = 1;
    gens.push_back(s);
    if (n >= 2) {
        // swap of the first two hyperbolic pairs
        Mat w = Mat::identity(d);
        w.at(0, 0) = w.at(1, 1) = w.at(n, n) = w.at(n + 1, n + 1) = 0;
        w.at(0, 1) = w.at(1, 0) = w.at(n, n + 1) = w.at(n + 1, n) = 1;
        gens.push_back(w);
        // short-root transvection along e_1 + e_2
        Mat u = Mat::identity(d);
        u.at(0, n) = 1;
        u.at(1, n) = 1;
        u.at(0, n + 1) = 1;
        u.at(1, n + 1) = 1;
        gens.push_back(u);
    }
    if (n >= 3) {
        // n-cycle on the pairs
        Mat c = Mat::zero(d);
        for (int i = 0; i < n; ++i) {
            c.at((i + 1) % n, i) = 1;
            c.at(n + (i + 1) % n, n + i) = 1;
        }
        gens.push_back(c);
    }
    if (F.q() > 2) {
        Mat dm = Mat::identity(d);
        dm.at(0, 0) = F.delta;
        dm.at(n, n) = F.base.inv(F.delta);
        gens.push_back(dm);
    }
    for (const Mat& g : gens)
        if (!is_symplectic(F.base, g)) throw std::logic_error("symplectic_generators: generator fails the form");
    return gens;
}

namespace {

uint64_t sp_order_formula(int n, uint64_t q) {
    // q^{n^2} * prod_{i=1..n} (q^{2i} - 1); throws on overflow past 2^63
    long double est = 1;
    uint64_t r = 1;
    for (int i = 0; i < n * n; ++i) {
        est *= (long double)q;
        if (est > 9e18) throw std::overflow_error("group order overflow");
        r *= q;
    }
    for (int i = 1; i <= n; ++i) {
        uint64_t f = 1;
        for (int t = 0; t < 2 * i; ++t) f *= q;
        est *= (long double)(f - 1);
        if (est > 9e18) throw std::overflow_error("group order overflow");
        r *= f - 1;
    }
    return r;
}

Group closure_group(std::shared_ptr<Field> F, int dim, const PackedCodec& codec,
                    const std::vector<Mat>& gens, const std::string& name, uint64_t budget) {
    Group G;
    G.F = std::move(F);
    G.dim = dim;
    G.codec = codec;
    G.name = name;
    G.generators = gens;

    std::unordered_set<uint64_t> seen;
    seen.reserve(budget / 2);
    std::vector<uint64_t> frontier;
    uint64_t id = codec.pack(Mat::identity(dim));
    seen.insert(id);
    frontier.push_back(id);
    std::vector<uint64_t> pg;
    for (const Mat& g : gens) pg.push_back(codec.pack(g));
    for (uint64_t g : pg)
        if (seen.insert(g).second) frontier.push_back(g);

    std::vector<uint64_t> next;
    while (!frontier.empty()) {
        next.clear();
        for (uint64_t x : frontier)
            for (uint64_t g : pg) {
                uint64_t z = G.mul_packed(x, g);
                if (seen.insert(z).second) {
                    next.push_back(z);
                    if (seen.size() > budget)
                        throw std::runtime_error(name + ": enumeration budget exceeded");
                }
            }
        frontier.swap(next);
    }
    G.elems.assign(seen.begin(), seen.end());
    std::sort(G.elems.begin(), G.elems.end());
    G.build_index();
    G.inv_ord.resize(G.elems.size());
    const Gf& f = G.F->base;
    for (uint32_t i = 0; i < G.elems.size(); ++i) {
        Mat inv = inverse(f, G.mat_of(i));
        G.inv_ord[i] = G.ord_of(codec.pack(inv));
    }
    return G;
}

}  // namespace

Group symplectic_group(int n, int q, uint64_t budget) {
    int a = 0;
    while ((1 << a) < q) ++a;
    if ((1 << a) != q || a < 1 || a > 8)
        throw std::invalid_argument("symplectic_group: q must be a power of 2 in [2,256]");
    uint64_t need = sp_order_formula(n, q);
    if (need > budget)
        throw std::runtime_error("symplectic_group: required order " + std::to_string(need) +
                                 " exceeds budget " + std::to_string(budget));
    int dim = 2 * n;
    if (dim * dim * a > 64) throw std::invalid_argument("symplectic_group: packing exceeds 64 bits");
    auto F = std::make_shared<Field>(field_create(a));
    PackedCodec codec{dim, a};
    Group G = closure_group(F, dim, codec, symplectic_generators(*F, n),
                            "Sp_" + std::to_string(dim) + "(" + std::to_string(q) + ")", budget);
    G.half_rank = n;
    if (G.order() != need)
        throw std::logic_error(G.name + ": closure order " + std::to_string(G.order()) +
                               " does not match the order formula " + std::to_string(need));
    return G;
}

Group subgroup_filter(const Group& G, const std::string& name,
                      const std::function<bool(const Mat&)>& pred) {
    Group H;
    H.F = G.F;
    H.half_rank = G.half_rank;
    H.dim = G.dim;
    H.codec = G.codec;
    H.name = name;
    for (uint64_t x : G.elems)
        if (pred(G.codec.unpack(x))) H.elems.push_back(x);
    if (H.elems.empty()) throw std::runtime_error(name + ": empty filter");
    H.build_index();
    const Gf& f = G.F->base;
    H.inv_ord.resize(H.elems.size());
    for (uint32_t i = 0; i < H.elems.size(); ++i) {
        Mat inv = inverse(f, H.mat_of(i));
        H.inv_ord[i] = H.ord_of(H.codec.pack(inv));   // also certifies closure under inverse
    }
    if (G.order() % H.order() != 0)
        throw std::logic_error(name + ": order does not divide |G| (not a subgroup)");
    H.generators = find_generators(H);
    return H;
}

Group subgroup_closure(const Group& G, const std::string& name, const std::vector<Mat>& gens) {
    for (const Mat& g : gens)
        if (!G.contains(G.codec.pack(g)))
            throw std::invalid_argument(name + ": generator outside the ambient group");
    Group H = closure_group(G.F, G.dim, G.codec, gens, name, G.order());
    H.half_rank = G.half_rank;
    if (G.order() % H.order() != 0) throw std::logic_error(name + ": Lagrange check failed");
    return H;
}

std::vector<Mat> find_generators(const Group& G) {
    std::vector<Mat> gens;
    std::unordered_set<uint64_t> closed;
    uint64_t id = G.codec.pack(Mat::identity(G.dim));
    closed.insert(id);
    std::vector<uint64_t> pg;
    for (uint64_t x : G.elems) {
        if (closed.count(x)) continue;
        gens.push_back(G.codec.unpack(x));
        pg.push_back(x);
        // re-close
        std::vector<uint64_t> frontier(closed.begin(), closed.end());
        while (!frontier.empty()) {
            std::vector<uint64_t> next;
            for (uint64_t y : frontier)
                for (uint64_t g : pg) {
                    uint64_t z = G.mul_packed(y, g);
                    if (closed.insert(z).second) next.push_back(z);
                }
            frontier.swap(next);
        }
        if (closed.size() == G.elems.size()) break;
    }
    return gens;
}

Fingerprint fingerprint(const Field& F, const Mat& g) {
    Fingerprint fp;
    const Gf& base = F.base;
    const Gf& ext = F.ext;
    fp.order = mat_order(base, g);
    fp.charpoly = charpoly(base, g);
    uint32_t q = F.q();
    for (uint32_t j = 0; j + 1 < q; ++j) {
        Mat m = g;
        uint16_t lam = base.pow(F.delta, j);
        for (int i = 0; i < g.n; ++i) m.at(i, i) ^= lam;
        fp.ker_base.push_back((uint8_t)kernel_dim(base, m));
    }
    Mat lifted = lift_to_ext(F, g);
    for (uint32_t j = 0; j <= q; ++j) {
        Mat m = lifted;
        uint16_t lam = ext.pow(F.xi, j);
        for (int i = 0; i < g.n; ++i) m.at(i, i) ^= lam;
        fp.ker_ext.push_back((uint8_t)kernel_dim(ext, m));
    }
    return fp;
}

uint64_t ClassData::exponent() const {
    uint64_t e = 1;
    for (const auto& c : cls) e = std::lcm(e, (uint64_t)c.elem_order);
    return e;
}

uint32_t ClassData::class_of_power(uint32_t ci, uint64_t t) const {
    uint64_t x = G->pow_packed(G->elems[cls[ci].rep], t);
    return class_of[G->ord_of(x)];
}

uint32_t ClassData::inverse_class(uint32_t ci) const {
    return class_of[G->inv_ord[cls[ci].rep]];
}

std::vector<std::pair<uint32_t, uint32_t>> ClassData::ambiguous_pairs() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (uint32_t i = 0; i < k(); ++i)
        for (uint32_t j = i + 1; j < k(); ++j)
            if (cls[i].fp == cls[j].fp) out.push_back({i, j});
    return out;
}

ClassData conjugacy_classes(const Group& G) {
    ClassData cd;
    cd.G = &G;
    uint32_t n = (uint32_t)G.order();
    std::vector<FpKey> keys = fingerprint_keys(G, default_exec_mode());

    // bucket ordinals by fingerprint key
    std::vector<uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](uint32_t x, uint32_t y) {
        if (!(keys[x] == keys[y])) return keys[x] < keys[y];
        return x < y;
    });

    cd.class_of.assign(n, UINT32_MAX);
    std::vector<uint64_t> gen_pk, gen_inv_pk;
    for (const Mat& g : G.generators) {
        uint64_t p = G.codec.pack(g);
        gen_pk.push_back(p);
        gen_inv_pk.push_back(G.elems[G.inv_ord[G.ord_of(p)]]);
    }

    struct RawClass {
        uint32_t rep;
        uint64_t size;
        uint64_t min_code;
    };
    std::vector<RawClass> raw;
    std::vector<uint32_t> frontier, next;
    uint32_t b0 = 0;
    while (b0 < n) {
        uint32_t b1 = b0;
        while (b1 < n && keys[idx[b1]] == keys[idx[b0]]) ++b1;
        for (uint32_t t = b0; t < b1; ++t) {
            uint32_t start = idx[t];
            if (cd.class_of[start] != UINT32_MAX) continue;
            uint32_t cid = (uint32_t)raw.size();
            uint64_t size = 1, min_code = G.elems[start];
            cd.class_of[start] = cid;
            frontier.assign(1, start);
            while (!frontier.empty()) {
                next.clear();
                for (uint32_t x : frontier) {
                    uint64_t xm = G.elems[x];
                    for (size_t gi = 0; gi < gen_pk.size(); ++gi) {
                        uint64_t z = G.mul_packed(gen_inv_pk[gi], G.mul_packed(xm, gen_pk[gi]));
                        uint32_t zo = G.ord_of(z);
                        if (cd.class_of[zo] == UINT32_MAX) {
                            cd.class_of[zo] = cid;
                            next.push_back(zo);
                            ++size;
                            if (z < min_code) min_code = z;
                        }
                    }
                }
                frontier.swap(next);
            }
            raw.push_back({start, size, min_code});
        }
        b0 = b1;
    }

    // deterministic class order: element order, size, fingerprint, min code
    std::vector<Fingerprint> fps(raw.size());
    for (uint32_t i = 0; i < raw.size(); ++i)
        fps[i] = fingerprint(*G.F, G.codec.unpack(raw[i].min_code));
    std::vector<uint32_t> perm(raw.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](uint32_t x, uint32_t y) {
        if (fps[x].order != fps[y].order) return fps[x].order < fps[y].order;
        if (raw[x].size != raw[y].size) return raw[x].size < raw[y].size;
        FpKey kx = fps[x].key(), ky = fps[y].key();
        if (!(kx == ky)) return kx < ky;
        return raw[x].min_code < raw[y].min_code;
    });
    std::vector<uint32_t> rank(raw.size());
    for (uint32_t i = 0; i < raw.size(); ++i) rank[perm[i]] = i;
    for (auto& c : cd.class_of) c = rank[c];

    cd.cls.resize(raw.size());
    for (uint32_t i = 0; i < raw.size(); ++i) {
        ClassInfo& ci = cd.cls[rank[i]];
        ci.rep = G.ord_of(raw[i].min_code);   // minimal-encoding representative
        ci.size = raw[i].size;
        ci.min_code = raw[i].min_code;
        if (G.order() % ci.size != 0) throw std::logic_error("class size does not divide |G|");
        ci.centralizer = G.order() / ci.size;
        ci.fp = fps[i];
        ci.elem_order = ci.fp.order;
    }

    uint64_t total = 0;
    for (const auto& c : cd.cls) total += c.size;
    if (total != G.order()) throw std::logic_error("class equation failed");

    // power maps for primes dividing |G|
    std::vector<uint32_t> primes;
    uint64_t o = G.order();
    for (uint64_t p = 2; p * p <= o; ++p)
        if (o % p == 0) {
            primes.push_back((uint32_t)p);
            while (o % p == 0) o /= p;
        }
    if (o > 1) primes.push_back((uint32_t)o);
    for (uint32_t p : primes) {
        std::vector<uint32_t> pm(cd.k());
        for (uint32_t c = 0; c < cd.k(); ++c) pm[c] = cd.class_of_power(c, p);
        cd.power_map[p] = std::move(pm);
    }
    return cd;
}

ParabolicData parabolic_decomposition(const Group& G, int j) {
    int n = G.half_rank;
    if (n == 0) throw std::invalid_argument("parabolic_decomposition: not a symplectic group");
    if (j < 1 || j > n) throw std::invalid_argument("parabolic_decomposition: j out of range");
    int d = G.dim;
    const Field& F = *G.F;
    uint32_t q = F.q();

    auto col_support_in = [&](const Mat& m, int col, auto&& pred) {
        for (int r = 0; r < m.n; ++r)
            if (m.at(r, col) && !pred(r)) return false;
        return true;
    };

    ParabolicData pd;
    pd.j = j;
    // P_j stabilizes span{e_1..e_j} = coordinates [0, j)
    pd.P = subgroup_filter(G, "P_" + std::to_string(j) + " of " + G.name, [&](const Mat& m) {
        for (int c = 0; c < j; ++c)
            if (!col_support_in(m, c, [&](int r) { return r < j; })) return false;
        return true;
    });

    // Q_j: trivial on the flag span < span-perp < V
    // span-perp = {v : v_{n+i} = 0 for i < j}
    pd.Q = subgroup_filter(pd.P, "Q_" + std::to_string(j) + " of " + G.name, [&](const Mat& m) {
        for (int c = 0; c < j; ++c) {
            // e_c fixed exactly
            for (int r = 0; r < d; ++r)
                if (m.at(r, c) != (r == c ? 1 : 0)) return false;
        }
        for (int c = j; c < n; ++c) {
            // middle block columns: difference supported in [0, j)
            for (int r = 0; r < d; ++r) {
                uint16_t want = (r == c) ? 1 : 0;
                if (r < j) continue;
                if (m.at(r, c) != want) return false;
            }
            int c2 = n + c;
            for (int r = 0; r < d; ++r) {
                uint16_t want = (r == c2) ? 1 : 0;
                if (r < j) continue;
                if (m.at(r, c2) != want) return false;
            }
        }
        for (int c = n; c < n + j; ++c) {
            // f-columns: difference avoids coordinates [n, n+j)
            for (int r = n; r < n + j; ++r) {
                uint16_t want = (r == c) ? 1 : 0;
                if (m.at(r, c) != want) return false;
            }
        }
        return true;
    });

    // Z_j built explicitly from symmetric j x j matrices, then verified
    {
        std::vector<Mat> zgens;
        std::vector<uint64_t> zelems;
        int syms = j * (j + 1) / 2;
        uint64_t count = 1;
        for (int t = 0; t < syms; ++t) count *= q;
        for (uint64_t code = 0; code < count; ++code) {
            uint64_t c = code;
            Mat m = Mat::identity(d);
            for (int r = 0; r < j; ++r)
                for (int s = r; s < j; ++s) {
                    uint16_t v = (uint16_t)(c % q);
                    c /= q;
                    m.at(r, n + s) = v;
                    m.at(s, n + r) = v;
                }
            if (!is_symplectic(F.base, m)) throw std::logic_error("Z_j element fails the form");
            zelems.push_back(G.codec.pack(m));
        }
        std::sort(zelems.begin(), zelems.end());
        Group Z;
        Z.F = G.F;
        Z.half_rank = n;
        Z.dim = d;
        Z.codec = G.codec;
        Z.name = "Z_" + std::to_string(j) + " of " + G.name;
        Z.elems = std::move(zelems);
        Z.build_index();
        Z.inv_ord.resize(Z.elems.size());
        for (uint32_t i = 0; i < Z.elems.size(); ++i)
            Z.inv_ord[i] = Z.ord_of(G.codec.pack(inverse(F.base, Z.mat_of(i))));
        Z.generators = find_generators(Z);
        pd.Z = std::move(Z);
    }
    // The block-form Z_j is central in Q_j and normal in P_j.  For j >= 2 it
    // is exactly Z(Q_j); at j = 1 in characteristic 2 the radical Q_1 is
    // elementary abelian, so Z(Q_1) = Q_1 strictly contains the long-root
    // subgroup Z_1 and only containment is required.
    {
        std::vector<Mat> qgens = pd.Q.generators;
        for (uint64_t z : pd.Z.elems) {
            for (const Mat& g : qgens) {
                uint64_t gp = G.codec.pack(g);
                if (pd.Q.mul_packed(z, gp) != pd.Q.mul_packed(gp, z))
                    throw std::logic_error("Z_j element not central in Q_j");
            }
            if (!pd.Q.contains(z)) throw std::logic_error("Z_j not inside Q_j");
        }
        uint64_t central = 0;
        for (uint64_t x : pd.Q.elems) {
            bool c = true;
            for (const Mat& g : qgens) {
                uint64_t gp = G.codec.pack(g);
                if (pd.Q.mul_packed(x, gp) != pd.Q.mul_packed(gp, x)) { c = false; break; }
            }
            if (c) ++central;
        }
        if (j >= 2 && central != pd.Z.order())
            throw std::logic_error("Z(Q_j) differs from the block form");
        if (j == 1 && central != pd.Z.order() && central != pd.Q.order())
            throw std::logic_error("unexpected center of Q_1");
        // normality of Z_j in P_j (what the Clifford arguments use)
        for (uint64_t z : pd.Z.elems)
            for (const Mat& g : pd.P.generators) {
                uint64_t gp = G.codec.pack(g);
                uint64_t gi = pd.P.elems[pd.P.inv_ord[pd.P.ord_of(gp)]];
                if (!pd.Z.contains(pd.P.mul_packed(gi, pd.P.mul_packed(z, gp))))
                    throw std::logic_error("Z_j is not normal in P_j");
            }
    }

    // Levi: preserves span{e_1..e_j}, span{f_1..f_j} and the middle block
    pd.L = subgroup_filter(pd.P, "L_" + std::to_string(j) + " of " + G.name, [&](const Mat& m) {
        for (int c = 0; c < j; ++c)
            if (!col_support_in(m, c, [&](int r) { return r < j; })) return false;
        for (int c = n; c < n + j; ++c)
            if (!col_support_in(m, c, [&](int r) { return r >= n && r < n + j; })) return false;
        for (int c = j; c < n; ++c) {
            auto mid = [&](int r) { return (r >= j && r < n) || (r >= n + j && r < d); };
            if (!col_support_in(m, c, mid)) return false;
            if (!col_support_in(m, n + c, mid)) return false;
        }
        return true;
    });
    return pd;
}

}  // namespace sw
