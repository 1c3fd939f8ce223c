#include "sw/weil.hpp"

#include <algorithm>
#include <stdexcept>

namespace sw {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

Cyc weil_tau_raw(const Field& F, uint32_t m, const Fingerprint& fp, uint32_t i) {
    uint32_t q = F.q();
    if (i > q - 2 && !(q == 2 && i == 0))
        throw std::invalid_argument("weil_tau: index out of range");
    if (q > 2 && m % (q - 1) != 0) throw std::invalid_argument("weil_tau: (q-1) must divide m");
    Cyc acc;
    for (uint32_t j = 0; j + 1 < q; ++j) {
        uint32_t e = (q == 2) ? 0 : (uint64_t)i * j % (q - 1) * (m / (q - 1)) % m;
        acc = acc + Cyc::root(e, m, ipow(q, fp.ker_base.at(j)));
    }
    return acc;
}

Cyc weil_zeta_raw(const Field& F, uint32_t m, const Fingerprint& fp, uint32_t i) {
    uint32_t q = F.q();
    if (i > q) throw std::invalid_argument("weil_zeta: index out of range");
    if (m % (q + 1) != 0) throw std::invalid_argument("weil_zeta: (q+1) must divide m");
    Cyc acc;
    for (uint32_t j = 0; j <= q; ++j) {
        int d = fp.ker_ext.at(j);
        long long coeff = ipow(q, d);
        if (d % 2) coeff = -coeff;   // (-q)^d
        uint32_t e = (uint64_t)i * j % (q + 1) * (m / (q + 1)) % m;
        acc = acc + Cyc::root(e, m, coeff);
    }
    return acc;
}

Cyc weil_tau(const Field& F, uint32_t m, const Fingerprint& fp, uint32_t i) {
    const CycCtx& cx = CycCtx::get(m);
    Cyc v = weil_tau_raw(F, m, fp, i).divided_by_int(F.q() - 1, cx);
    if (i == 0) v = v - Cyc::integer(2);
    return v;
}

Cyc weil_zeta(const Field& F, uint32_t m, const Fingerprint& fp, uint32_t i) {
    const CycCtx& cx = CycCtx::get(m);
    return weil_zeta_raw(F, m, fp, i).divided_by_int(F.q() + 1, cx);
}

ClassFunction weil_tau_fn(const ClassData& cd, uint32_t m, uint32_t i) {
    ClassFunction f;
    f.cd = &cd;
    f.m = m;
    for (const auto& c : cd.cls) f.v.push_back(weil_tau(*cd.G->F, m, c.fp, i));
    return f;
}

ClassFunction weil_zeta_fn(const ClassData& cd, uint32_t m, uint32_t i) {
    ClassFunction f;
    f.cd = &cd;
    f.m = m;
    for (const auto& c : cd.cls) f.v.push_back(weil_zeta(*cd.G->F, m, c.fp, i));
    return f;
}

namespace {

// kernel dimensions only (cheaper than a full fingerprint)
void kernel_dims(const Field& F, const Mat& g, std::vector<uint8_t>& kb, std::vector<uint8_t>& ke) {
    uint32_t q = F.q();
    kb.clear();
    ke.clear();
    for (uint32_t j = 0; j + 1 < q; ++j) {
        Mat m2 = g;
        uint16_t lam = F.base.pow(F.delta, j);
        for (int i = 0; i < g.n; ++i) m2.at(i, i) ^= lam;
        kb.push_back((uint8_t)kernel_dim(F.base, m2));
    }
    Mat lifted = lift_to_ext(F, g);
    for (uint32_t j = 0; j <= q; ++j) {
        Mat m2 = lifted;
        uint16_t lam = F.ext.pow(F.xi, j);
        for (int i = 0; i < g.n; ++i) m2.at(i, i) ^= lam;
        ke.push_back((uint8_t)kernel_dim(F.ext, m2));
    }
}

bool weil_check_element(const Group& G, const ClassData& cd,
                        const std::vector<std::vector<Cyc>>& tau_ref,
                        const std::vector<std::vector<Cyc>>& zeta_ref, uint32_t ord) {
    const Field& F = *G.F;
    uint32_t q = F.q();
    uint32_t m = (uint32_t)cd.exponent();
    Fingerprint fp;
    std::vector<uint8_t> kb, ke;
    kernel_dims(F, G.mat_of(ord), kb, ke);
    fp.ker_base = kb;
    fp.ker_ext = ke;
    uint32_t cls = cd.class_of[ord];
    for (uint32_t i = 0; i + 1 < q || (q == 2 && i == 0); ++i) {
        Cyc v = weil_tau_raw(F, m, fp, i);
        if (!(v.t == tau_ref[cls][i].t)) return false;
        if (i + 1 >= q) break;
    }
    for (uint32_t i = 0; i <= q; ++i) {
        Cyc v = weil_zeta_raw(F, m, fp, i);
        if (!(v.t == zeta_ref[cls][i].t)) return false;
    }
    return true;
}

void build_refs(const Group& G, const ClassData& cd, std::vector<std::vector<Cyc>>& tau_ref,
                std::vector<std::vector<Cyc>>& zeta_ref) {
    const Field& F = *G.F;
    uint32_t q = F.q();
    uint32_t m = (uint32_t)cd.exponent();
    tau_ref.assign(cd.k(), {});
    zeta_ref.assign(cd.k(), {});
    for (uint32_t c = 0; c < cd.k(); ++c) {
        for (uint32_t i = 0; i + 1 < q || (q == 2 && i == 0); ++i) {
            tau_ref[c].push_back(weil_tau_raw(F, m, cd.cls[c].fp, i));
            if (i + 1 >= q) break;
        }
        for (uint32_t i = 0; i <= q; ++i)
            zeta_ref[c].push_back(weil_zeta_raw(F, m, cd.cls[c].fp, i));
    }
}

}  // namespace

bool weil_class_function_check_serial_ref(const Group& G, const ClassData& cd) {
    std::vector<std::vector<Cyc>> tau_ref, zeta_ref;
    build_refs(G, cd, tau_ref, zeta_ref);
    for (uint32_t x = 0; x < G.order(); ++x)
        if (!weil_check_element(G, cd, tau_ref, zeta_ref, x)) return false;
    return true;
}

bool weil_class_function_check(const Group& G, const ClassData& cd, ExecMode mode) {
    if (mode == ExecMode::Serial) return weil_class_function_check_serial_ref(G, cd);
    std::vector<std::vector<Cyc>> tau_ref, zeta_ref;
    build_refs(G, cd, tau_ref, zeta_ref);
    bool ok = true;
    const int64_t n = (int64_t)G.order();
#pragma omp parallel for schedule(dynamic, 1024) reduction(&& : ok)
    for (int64_t x = 0; x < n; ++x)
        ok = ok && weil_check_element(G, cd, tau_ref, zeta_ref, (uint32_t)x);
    return ok;
}

WeilConstituents weil_constituents(const Group& G, const ClassData& cd, const CharTable& T) {
    const CycCtx& cx = CycCtx::get(T.m);
    uint32_t q = G.F->q();
    WeilConstituents wc;
    wc.tau0 = weil_tau_fn(cd, T.m, 0);
    wc.zeta0 = weil_zeta_fn(cd, T.m, 0);

    auto split_pair = [&](const ClassFunction& f, uint32_t& lo, uint32_t& hi,
                          const char* what) {
        std::vector<uint32_t> parts;
        for (uint32_t i = 0; i < T.k(); ++i) {
            Rat r = inner_product(f, T.irr[i]);
            if (r.num == 0 && r.den == 1) continue;
            if (!(r == Rat(1))) throw std::logic_error(std::string(what) + ": multiplicity != 1");
            parts.push_back(i);
        }
        if (parts.size() != 2) throw std::logic_error(std::string(what) + ": not two constituents");
        lo = T.degrees[parts[0]] <= T.degrees[parts[1]] ? parts[0] : parts[1];
        hi = lo == parts[0] ? parts[1] : parts[0];
        // exact decomposition: residual must vanish
        for (uint32_t c = 0; c < cd.k(); ++c) {
            Cyc resid = f.v[c] - T.irr[lo].v[c] - T.irr[hi].v[c];
            if (!resid.is_zero(cx)) throw std::logic_error(std::string(what) + ": inexact split");
        }
    };
    split_pair(wc.zeta0, wc.alpha, wc.beta, "zeta^0 = alpha + beta");
    split_pair(wc.tau0, wc.rho1, wc.rho2, "tau^0 = rho^1 + rho^2");

    auto match_row = [&](const ClassFunction& f, const char* what) -> uint32_t {
        for (uint32_t i = 0; i < T.k(); ++i) {
            bool same = true;
            for (uint32_t c = 0; c < cd.k() && same; ++c)
                if (!f.v[c].equals(T.irr[i].v[c], cx)) same = false;
            if (same) return i;
        }
        throw std::logic_error(std::string(what) + ": no matching irreducible row");
    };
    for (uint32_t i = 1; i <= (q - 2) / 2 && q > 2; ++i)
        wc.tau.push_back(match_row(weil_tau_fn(cd, T.m, i), "tau^i"));
    for (uint32_t i = 1; i <= q / 2; ++i)
        wc.zeta.push_back(match_row(weil_zeta_fn(cd, T.m, i), "zeta^i"));
    return wc;
}

std::string OrbitLabel::str() const {
    if (rank == 0) return "trivial";
    std::string s = "O_" + std::to_string(rank);
    if (type > 0) s += "+";
    if (type < 0) s += "-";
    return s;
}

ZOrbitData z_orbit_classification(const Field& F, int j) {
    uint32_t q = F.q();
    ZOrbitData zo;
    zo.j = j;
    int syms = j * (j + 1) / 2;
    uint64_t count = 1;
    for (int t = 0; t < syms; ++t) count *= q;
    uint64_t qj = 1;
    for (int t = 0; t < j; ++t) qj *= q;

    for (uint64_t code = 0; code < count; ++code) {
        uint64_t c = code;
        Mat y = Mat::zero(j);
        for (int r = 0; r < j; ++r)
            for (int s = r; s < j; ++s) {
                y.at(r, s) = (uint16_t)(c % q);
                c /= q;
            }
        // quadratic form q_Y(x) = x^T Y x, polar form Gram Y + Y^T
        auto qval = [&](uint64_t vec) {
            uint16_t acc = 0;
            for (int r = 0; r < j; ++r) {
                uint16_t xr = (uint16_t)((vec >> (4 * r)) & 15);
                if (!xr) continue;
                for (int s = 0; s < j; ++s) {
                    uint16_t xs = (uint16_t)((vec >> (4 * s)) & 15);
                    if (xs && y.at(r, s)) acc ^= F.base.mul(F.base.mul(xr, y.at(r, s)), xs);
                }
            }
            return acc;
        };
        Mat b = Mat::zero(j);
        for (int r = 0; r < j; ++r)
            for (int s = 0; s < j; ++s) b.at(r, s) = y.at(r, s) ^ y.at(s, r);
        // enumerate vectors: radical of the form and zero count
        uint64_t zeros = 0, rad = 0;
        for (uint64_t v = 0; v < qj; ++v) {
            uint64_t vec = 0;
            uint64_t t = v;
            for (int r = 0; r < j; ++r) {
                vec |= (t % q) << (4 * r);
                t /= q;
            }
            uint16_t qv = qval(vec);
            if (qv == 0) ++zeros;
            bool inradB = true;
            for (int r = 0; r < j && inradB; ++r) {
                uint16_t acc = 0;
                for (int s = 0; s < j; ++s) {
                    uint16_t xs = (uint16_t)((vec >> (4 * s)) & 15);
                    if (xs && b.at(r, s)) acc ^= F.base.mul(b.at(r, s), xs);
                }
                if (acc) inradB = false;
            }
            if (inradB && qv == 0) ++rad;
        }
        int dim_rad = 0;
        while ((uint64_t)ipow(q, dim_rad) < rad) ++dim_rad;
        if ((uint64_t)ipow(q, dim_rad) != rad)
            throw std::logic_error("z_orbit_classification: radical is not a subspace");
        OrbitLabel lab;
        lab.rank = j - dim_rad;
        if (lab.rank > 0 && lab.rank % 2 == 0) {
            // nondegenerate part: compare zero counts with the two types
            uint64_t zq = zeros / rad;   // zeros on the quotient space
            if (zeros % rad) throw std::logic_error("z_orbit_classification: zero count mismatch");
            int r2 = lab.rank / 2;
            uint64_t plus = (uint64_t)ipow(q, lab.rank - 1) + ipow(q, r2) - ipow(q, r2 - 1);
            uint64_t minus = (uint64_t)ipow(q, lab.rank - 1) - ipow(q, r2) + ipow(q, r2 - 1);
            if (zq == plus)
                lab.type = 1;
            else if (zq == minus)
                lab.type = -1;
            else
                throw std::logic_error("z_orbit_classification: zero count matches neither type");
        }
        zo.ys.push_back(y);
        zo.labels.push_back(lab);
        zo.orbit_size[lab] += 1;
    }
    return zo;
}

OrbitProfile orbit_restriction_profile(const ClassFunction& chi, const ClassData& cdG,
                                       const ParabolicData& pd, const ZOrbitData& zo) {
    const Group& G = *cdG.G;
    const Group& Z = pd.Z;
    const Field& F = *G.F;
    const CycCtx& cx = CycCtx::get(chi.m);
    int j = pd.j;
    int n = G.half_rank;
    uint64_t zsize = Z.order();
    if (zo.ys.size() != zsize) throw std::invalid_argument("orbit profile: size mismatch");

    // chi values on Z elements, via the class of each z in G
    std::vector<const Cyc*> chi_on_z(zsize);
    std::vector<Mat> cmat(zsize);
    for (uint32_t zi = 0; zi < zsize; ++zi) {
        Mat zm = Z.mat_of(zi);
        chi_on_z[zi] = &chi.v[cdG.class_of[G.ord_of(Z.elems[zi])]];
        Mat c = Mat::zero(j);
        for (int r = 0; r < j; ++r)
            for (int s = 0; s < j; ++s) c.at(r, s) = zm.at(r, n + s);
        cmat[zi] = c;
    }

    OrbitProfile prof;
    std::map<OrbitLabel, bool> seen;
    for (size_t yi = 0; yi < zo.ys.size(); ++yi) {
        const Mat& y = zo.ys[yi];
        // multiplicity of lambda_Y: (1/|Z|) sum_z lambda_Y(z) chi(z)
        Cyc acc;
        for (uint32_t zi = 0; zi < zsize; ++zi) {
            uint16_t tr = 0;
            const Mat& c = cmat[zi];
            for (int r = 0; r < j; ++r)
                for (int s = 0; s < j; ++s)
                    if (y.at(r, s) && c.at(r, s)) tr ^= F.base.mul(y.at(r, s), c.at(r, s));
            int sign = F.base.trace_f2(tr) ? -1 : 1;
            acc = acc + chi_on_z[zi]->scaled(sign);
        }
        auto iv = acc.as_integer(cx);
        if (!iv || *iv % (long long)zsize != 0 || *iv < 0)
            throw std::logic_error("orbit profile: non-integral multiplicity");
        long long mult = *iv / (long long)zsize;
        const OrbitLabel& lab = zo.labels[yi];
        if (lab.rank == 0) {
            prof.trivial = mult;
        } else if (!seen[lab]) {
            seen[lab] = true;
            prof.mult[lab] = mult;
        } else if (prof.mult[lab] != mult) {
            throw std::logic_error("orbit profile: multiplicity differs inside one orbit");
        }
    }
    // drop zero multiplicities
    for (auto it = prof.mult.begin(); it != prof.mult.end();)
        it = it->second == 0 ? prof.mult.erase(it) : std::next(it);
    return prof;
}

long long profile_degree(const OrbitProfile& p, const ZOrbitData& zo) {
    long long s = p.trivial;
    for (const auto& [lab, m] : p.mult) s += m * (long long)zo.orbit_size.at(lab);
    return s;
}

}  // namespace sw
