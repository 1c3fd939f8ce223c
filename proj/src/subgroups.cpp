#include "sw/subgroups.hpp"

#include <algorithm>
#include <stdexcept>

#include "sw/json_io.hpp"

namespace sw {

namespace {

// quadratic form of the requested type whose polar form is the standard J:
// Q(x) = sum_i x_i x_{n+i}  (+ elliptic correction on the last pair)
struct QuadForm {
    int n;            // half rank
    uint16_t c = 0;   // elliptic coefficient, 0 for plus type
    const Gf* f;

    uint16_t eval(const Mat& /*unused*/, const std::vector<uint16_t>& x) const {
        uint16_t s = 0;
        for (int i = 0; i < n; ++i) s ^= f->mul(x[i], x[n + i]);
        if (c) {
            uint16_t a = x[n - 1], b = x[2 * n - 1];
            s ^= f->mul(a, a);
            s ^= f->mul(c, f->mul(b, b));
        }
        return s;
    }
};

uint16_t eval_on_column(const QuadForm& q, const Mat& m, int col) {
    std::vector<uint16_t> x(m.n);
    for (int r = 0; r < m.n; ++r) x[r] = m.at(r, col);
    return q.eval(m, x);
}

}  // namespace

Group orthogonal_subgroup(const Group& G, int type) {
    const Field& F = *G.F;
    int n = G.half_rank;
    QuadForm q{n, 0, &F.base};
    if (type < 0) {
        // need c with absolute trace 1 so that t^2 + t + c is irreducible
        for (uint32_t v = 1; v < F.q(); ++v)
            if (F.base.trace_f2((uint16_t)v) == 1) {
                q.c = (uint16_t)v;
                break;
            }
        if (!q.c) throw std::logic_error("orthogonal_subgroup: no trace-one element");
    }
    // the zero count certifies the type
    {
        uint64_t qq = F.q();
        uint64_t total = 1;
        for (int i = 0; i < 2 * n; ++i) total *= qq;
        uint64_t zeros = 0;
        std::vector<uint16_t> x(2 * n);
        for (uint64_t code = 0; code < total; ++code) {
            uint64_t t = code;
            for (int i = 0; i < 2 * n; ++i) {
                x[i] = (uint16_t)(t % qq);
                t /= qq;
            }
            if (q.eval(Mat{}, x) == 0) ++zeros;
        }
        uint64_t qn = 1, qn1 = 1;
        for (int i = 0; i < n; ++i) qn *= qq;
        for (int i = 0; i + 1 < 2 * n; ++i) qn1 *= qq;
        uint64_t expect = type > 0 ? qn1 + qn - qn / qq : qn1 - qn + qn / qq;
        if (zeros != expect) throw std::logic_error("orthogonal_subgroup: wrong form type");
    }
    std::string nm = "O_" + std::to_string(2 * n) + (type > 0 ? "+" : "-") + "(" +
                     std::to_string(F.q()) + ")";
    // a symplectic g preserves Q iff Q(g e_i) = Q(e_i) on a basis
    std::vector<uint16_t> basis_val(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        std::vector<uint16_t> x(2 * n, 0);
        x[i] = 1;
        basis_val[i] = q.eval(Mat{}, x);
    }
    return subgroup_filter(G, nm, [&, basis_val](const Mat& m) {
        for (int i = 0; i < 2 * n; ++i)
            if (eval_on_column(q, m, i) != basis_val[i]) return false;
        return true;
    });
}

Group nondegenerate_stabilizer(const Group& G, int k) {
    int n = G.half_rank;
    std::string nm = "Sp_" + std::to_string(2 * k) + "xSp_" + std::to_string(2 * (n - k)) + "(" +
                     std::to_string(G.F->q()) + ")";
    // stabilize span{e_1..e_k, f_1..f_k}: columns of that block supported there
    return subgroup_filter(G, nm, [n, k](const Mat& m) {
        auto inside = [&](int r) { return r < k || (r >= n && r < n + k); };
        for (int c = 0; c < k; ++c) {
            for (int r = 0; r < m.n; ++r)
                if (m.at(r, c) && !inside(r)) return false;
            for (int r = 0; r < m.n; ++r)
                if (m.at(r, n + c) && !inside(r)) return false;
        }
        return true;
    });
}

Group sp2_wreath(const Group& G) {
    const Field& F = *G.F;
    int n = G.half_rank;
    int d = G.dim;
    std::vector<Mat> gens;
    // Sp_2 generators in the first block
    Mat t = Mat::identity(d);
    t.at(0, n) = 1;
    gens.push_back(t);
    Mat s = Mat::identity(d);
    s.at(0, 0) = s.at(n, n) = 0;
    s.at(0, n) = s.at(n, 0) = 1;
    gens.push_back(s);
    if (F.q() > 2) {
        Mat dm = Mat::identity(d);
        dm.at(0, 0) = F.delta;
        dm.at(n, n) = F.base.inv(F.delta);
        gens.push_back(dm);
    }
    // block permutations: adjacent swap and full cycle
    Mat w = Mat::identity(d);
    w.at(0, 0) = w.at(1, 1) = w.at(n, n) = w.at(n + 1, n + 1) = 0;
    w.at(0, 1) = w.at(1, 0) = w.at(n, n + 1) = w.at(n + 1, n) = 1;
    gens.push_back(w);
    if (n >= 3) {
        Mat c = Mat::zero(d);
        for (int i = 0; i < n; ++i) {
            c.at((i + 1) % n, i) = 1;
            c.at(n + (i + 1) % n, n + i) = 1;
        }
        gens.push_back(c);
    }
    Group H = subgroup_closure(G, "Sp_2(" + std::to_string(F.q()) + ")wrS_" + std::to_string(n),
                               gens);
    uint64_t sp2 = (uint64_t)F.q() * (F.q() * F.q() - 1);
    uint64_t expect = 1;
    for (int i = 0; i < n; ++i) expect *= sp2;
    for (int i = 2; i <= n; ++i) expect *= i;
    if (H.order() != expect) throw std::logic_error("sp2_wreath: unexpected order");
    return H;
}

Mat s6_perm_matrix(const Group& sp42, const std::vector<int>& perm) {
    // V = even-weight vectors in F_2^6 modulo the all-ones vector, with the
    // dot-product symplectic form; basis u_i = e_i + e_{i+1}, i = 1..4
    if (sp42.dim != 4 || sp42.F->q() != 2)
        throw std::invalid_argument("s6_perm_matrix: needs Sp_4(2)");
    static Mat basis_change = [] {
        // Gram of the dot product on u_1..u_4 is tridiagonal with ones
        Mat gram = Mat::zero(4);
        for (int i = 0; i < 3; ++i) gram.at(i, i + 1) = gram.at(i + 1, i) = 1;
        Gf f2 = gf_from_poly(1, 3);
        return symplectic_basis(f2, gram);
    }();
    auto u_of = [](int i) -> uint8_t { return (uint8_t)((1 << i) | (1 << (i + 1))); };
    // express an even-weight vector (6 bits) in the u-basis modulo 111111
    auto coords = [&](uint8_t w) -> uint8_t {
        for (int mask = 0; mask < 16; ++mask) {
            uint8_t acc = 0;
            for (int i = 0; i < 4; ++i)
                if (mask & (1 << i)) acc ^= u_of(i);
            if (acc == w || (uint8_t)(acc ^ 0x3f) == w) return (uint8_t)mask;
        }
        throw std::logic_error("s6_perm_matrix: vector outside the module");
    };
    Mat m_u = Mat::zero(4);   // action in the u-basis
    for (int i = 0; i < 4; ++i) {
        uint8_t img = (uint8_t)((1 << perm[i]) | (1 << perm[i + 1]));
        uint8_t c = coords(img);
        for (int r = 0; r < 4; ++r) m_u.at(r, i) = (c >> r) & 1;
    }
    const Gf& f = sp42.F->base;
    Mat p = basis_change;
    Mat m_std = mul(f, inverse(f, p), mul(f, m_u, p));
    if (!is_symplectic(f, m_std)) throw std::logic_error("s6_perm_matrix: image not symplectic");
    return m_std;
}

std::vector<Mat> find_subgroup_generators(const Group& G, uint64_t target_order, uint32_t o1,
                                          uint32_t o2) {
    // deterministic scan over pairs (x, y) with |x| = o1, |y| = o2; bounded
    // closure, first hit wins
    const Gf& f = G.F->base;
    std::vector<uint32_t> xs, ys;
    for (uint32_t i = 0; i < G.order(); ++i) {
        uint32_t o = mat_order(f, G.mat_of(i));
        if (o == o1) xs.push_back(i);
        if (o == o2) ys.push_back(i);
        if (xs.size() > 400 && ys.size() > 400) break;
    }
    std::vector<uint64_t> closure;
    closure.reserve(target_order + 8);
    for (uint32_t y : ys) {
        for (uint32_t x : xs) {
            closure.clear();
            uint64_t id = G.codec.pack(Mat::identity(G.dim));
            std::vector<uint64_t> seen{id};
            uint64_t gx = G.elems[x], gy = G.elems[y];
            std::vector<uint64_t> frontier{id};
            bool over = false;
            auto insert = [&](uint64_t z) {
                auto it = std::lower_bound(seen.begin(), seen.end(), z);
                if (it != seen.end() && *it == z) return false;
                seen.insert(it, z);
                return true;
            };
            while (!frontier.empty() && !over) {
                std::vector<uint64_t> next;
                for (uint64_t e : frontier) {
                    for (uint64_t g : {gx, gy}) {
                        uint64_t z = G.mul_packed(e, g);
                        if (insert(z)) {
                            next.push_back(z);
                            if (seen.size() > target_order) {
                                over = true;
                                break;
                            }
                        }
                    }
                    if (over) break;
                }
                frontier.swap(next);
            }
            if (!over && seen.size() == target_order)
                return {G.mat_of(x), G.mat_of(y)};
        }
    }
    throw std::runtime_error("find_subgroup_generators: no pair found");
}

std::vector<Mat> l2_8_3_generators(const Group& sp62) {
    if (sp62.dim != 6 || sp62.F->q() != 2)
        throw std::invalid_argument("l2_8_3_generators: needs Sp_6(2)");
    // F_2^6 as GF(8)^2 with basis (t^i, 0), (0, t^i); symplectic form
    // tr(det(u, v))
    Gf f8 = gf_from_poly(3, conway_poly(3));
    auto tr = [&](uint16_t v) { return (uint16_t)f8.trace_f2(v); };
    // 6x6 F_2 matrix of an additive map given its images of the basis
    auto additive_matrix = [&](auto&& img) {
        Mat m = Mat::zero(6);
        for (int i = 0; i < 6; ++i) {
            uint16_t a = (uint16_t)(i < 3 ? (1 << i) : 0);
            uint16_t b = (uint16_t)(i < 3 ? 0 : (1 << (i - 3)));
            auto [ia, ib] = img(a, b);
            for (int r = 0; r < 3; ++r) {
                m.at(r, i) = (ia >> r) & 1;
                m.at(3 + r, i) = (ib >> r) & 1;
            }
        }
        return m;
    };
    uint16_t t = 2;   // the class of x in GF(8)
    std::vector<Mat> raw;
    // diag(t, t^-1)
    raw.push_back(additive_matrix([&](uint16_t a, uint16_t b) {
        return std::pair<uint16_t, uint16_t>(f8.mul(t, a), f8.mul(f8.inv(t), b));
    }));
    // unipotent [[1,1],[0,1]] acting as (a, b) -> (a + b, b)
    raw.push_back(additive_matrix([&](uint16_t a, uint16_t b) {
        return std::pair<uint16_t, uint16_t>((uint16_t)(a ^ b), b);
    }));
    // Weyl swap (a, b) -> (b, a)
    raw.push_back(additive_matrix([&](uint16_t a, uint16_t b) {
        return std::pair<uint16_t, uint16_t>(b, a);
    }));
    // Frobenius (a, b) -> (a^2, b^2)
    raw.push_back(additive_matrix([&](uint16_t a, uint16_t b) {
        return std::pair<uint16_t, uint16_t>(f8.mul(a, a), f8.mul(b, b));
    }));
    // Gram of tr(det(u, v)) in this basis, then move to the standard frame
    Mat gram = Mat::zero(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            uint16_t ai = (uint16_t)(i < 3 ? (1 << i) : 0), bi = (uint16_t)(i < 3 ? 0 : 1 << (i - 3));
            uint16_t aj = (uint16_t)(j < 3 ? (1 << j) : 0), bj = (uint16_t)(j < 3 ? 0 : 1 << (j - 3));
            // det((ai,bi),(aj,bj)) = ai bj - aj bi
            gram.at(i, j) = tr((uint16_t)(f8.mul(ai, bj) ^ f8.mul(aj, bi)));
        }
    const Gf& f2 = sp62.F->base;
    Mat p = symplectic_basis(f2, gram);
    Mat pinv = inverse(f2, p);
    std::vector<Mat> out;
    for (const Mat& g : raw) {
        Mat m = mul(f2, pinv, mul(f2, g, p));
        if (!is_symplectic(f2, m)) throw std::logic_error("l2_8_3: image not symplectic");
        out.push_back(m);
    }
    return out;
}

namespace {

Group from_file(const Group& G, const std::string& file, const std::string& nm) {
    GeneratorFile gf = read_generator_file(data_dir() + "/gens/" + file, *G.F);
    return subgroup_closure(G, nm, gf.generators);
}

Group perm_subgroup(const Group& G, const std::string& nm,
                    const std::vector<std::vector<int>>& perms, uint64_t expect) {
    std::vector<Mat> gens;
    for (const auto& p : perms) gens.push_back(s6_perm_matrix(G, p));
    Group H = subgroup_closure(G, nm, gens);
    if (H.order() != expect)
        throw std::logic_error(nm + ": unexpected order " + std::to_string(H.order()));
    return H;
}

std::vector<int> cycle_to_perm(const std::vector<std::vector<int>>& cycles) {
    std::vector<int> p(6);
    for (int i = 0; i < 6; ++i) p[i] = i;
    for (const auto& cy : cycles)
        for (size_t i = 0; i < cy.size(); ++i) p[cy[i]] = cy[(i + 1) % cy.size()];
    return p;
}

}  // namespace

Group build_named_subgroup(const Group& G, const std::string& name) {
    int n = G.half_rank;
    uint32_t q = G.F->q();
    if (name.rfind("P", 0) == 0 && name.size() == 2 && isdigit(name[1])) {
        int j = name[1] - '0';
        return parabolic_decomposition(G, j).P;
    }
    if (name == "O+" || name == "O6+" || name == "O4+") return orthogonal_subgroup(G, +1);
    if (name == "O-" || name == "O6-" || name == "O4-") return orthogonal_subgroup(G, -1);
    if (name == "Sp2xSp4") return nondegenerate_stabilizer(G, 1);
    if (name == "Sp2wrS3" || name == "Sp2wrS2") return sp2_wreath(G);
    if (name == "G2") {
        if (n != 3 || q != 2) throw std::invalid_argument("G2 subgroup needs Sp_6(2)");
        return from_file(G, "g2_q2.json", "G_2(2)");
    }
    if (name == "L2_8.3") {
        if (n != 3 || q != 2) throw std::invalid_argument("L2_8.3 needs Sp_6(2)");
        Group H = subgroup_closure(G, "L_2(8).3", l2_8_3_generators(G));
        if (H.order() != 1512) throw std::logic_error("L2_8.3: unexpected order");
        return H;
    }
    if (n == 2 && q == 2) {
        if (name == "A6")
            return perm_subgroup(G, "A_6", {cycle_to_perm({{0, 1, 2}}), cycle_to_perm({{1, 2, 3, 4, 5}})},
                                 360);
        if (name == "S5")
            return perm_subgroup(G, "S_5",
                                 {cycle_to_perm({{0, 1}}), cycle_to_perm({{0, 1, 2, 3, 4}})}, 120);
        if (name == "2xS4")
            return perm_subgroup(G, "S_2xS_4",
                                 {cycle_to_perm({{0, 1}}), cycle_to_perm({{2, 3}}),
                                  cycle_to_perm({{2, 3, 4, 5}})},
                                 48);
        if (name == "S2wrS3")
            return perm_subgroup(G, "S_2wrS_3",
                                 {cycle_to_perm({{0, 1}}), cycle_to_perm({{2, 3}}),
                                  cycle_to_perm({{4, 5}}), cycle_to_perm({{0, 2}, {1, 3}}),
                                  cycle_to_perm({{2, 4}, {3, 5}})},
                                 48);
        if (name == "S3wrS2")
            return perm_subgroup(G, "S_3wrS_2",
                                 {cycle_to_perm({{0, 1}}), cycle_to_perm({{0, 1, 2}}),
                                  cycle_to_perm({{3, 4}}), cycle_to_perm({{3, 4, 5}}),
                                  cycle_to_perm({{0, 3}, {1, 4}, {2, 5}})},
                                 72);
    }
    throw std::invalid_argument("unknown subgroup name: " + name);
}

std::vector<std::string> known_subgroup_names(const Group& G) {
    int n = G.half_rank;
    uint32_t q = G.F->q();
    if (n == 3 && q == 2)
        return {"P1", "P2", "P3", "O6-", "O6+", "G2", "L2_8.3", "Sp2xSp4", "Sp2wrS3"};
    if (n == 2 && q == 2) return {"P1", "P2", "A6", "S5", "O4-", "O4+", "2xS4", "S2wrS3"};
    if (n == 2) return {"P1", "P2"};
    return {"P1", "P2", "P3"};
}

}  // namespace sw
