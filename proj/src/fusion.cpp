#include "sw/fusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace sw {

FusionMap exact_fusion(const Group& H, const Group& G, const ClassData& cdH,
                       const ClassData& cdG) {
    FusionMap f;
    f.h_to_g.resize(cdH.k());
    for (uint32_t c = 0; c < cdH.k(); ++c) {
        uint64_t rep = H.elems[cdH.cls[c].rep];
        if (!G.contains(rep)) throw std::invalid_argument("exact_fusion: H is not inside G");
        f.h_to_g[c] = cdG.class_of[G.ord_of(rep)];
    }
    // invariants
    for (uint32_t c = 0; c < cdH.k(); ++c) {
        uint32_t d = f.h_to_g[c];
        if (cdH.cls[c].elem_order != cdG.cls[d].elem_order)
            throw std::logic_error("exact_fusion: element order not preserved");
        if (cdG.cls[d].centralizer % cdH.cls[c].centralizer != 0)
            throw std::logic_error("exact_fusion: centralizer divisibility fails");
    }
    for (const auto& [p, pmH] : cdH.power_map) {
        auto it = cdG.power_map.find(p);
        if (it == cdG.power_map.end()) continue;   // p divides |H| but not |G| cannot happen
        for (uint32_t c = 0; c < cdH.k(); ++c)
            if (f.h_to_g[pmH[c]] != it->second[f.h_to_g[c]])
                throw std::logic_error("exact_fusion: power maps do not commute");
    }
    return f;
}

namespace {

// chi values of G lifted to the cyclotomic ring of G, with H-values embedded
// by exponent scaling m_H | m_G
Cyc embed_value(const Cyc& v, uint32_t mH, uint32_t mG) {
    if (mH == mG) return v;
    if (mG % mH) throw std::invalid_argument("embed_value: exponent of H does not divide G's");
    uint32_t s = mG / mH;
    Cyc r;
    for (auto [e, c] : v.t) r.t.push_back({e * s, c});
    std::sort(r.t.begin(), r.t.end());
    return r;
}

}  // namespace

std::vector<std::string> integrality_audit(const FusionMap& f, const CharTable& TG,
                                           const ClassData& cdH, const CharTable* TH) {
    std::vector<std::string> bad;
    const CycCtx& cx = CycCtx::get(TG.m);
    uint64_t horder = cdH.G->order();
    for (uint32_t i = 0; i < TG.k(); ++i) {
        ClassFunction r = restrict_along(TG.irr[i], f.h_to_g, cdH);
        // norm
        Cyc acc;
        for (uint32_t c = 0; c < cdH.k(); ++c)
            acc = acc + r.v[c].mul(r.v[c].conj(TG.m), TG.m).scaled((long long)cdH.cls[c].size);
        auto iv = acc.as_integer(cx);
        if (!iv || *iv % (long long)horder != 0)
            bad.push_back("norm of chi_" + std::to_string(i) + " along f is not an integer");
        if (!TH) continue;
        long long degsum = 0;
        for (uint32_t j = 0; j < TH->k(); ++j) {
            Cyc acc2;
            for (uint32_t c = 0; c < cdH.k(); ++c) {
                Cyc psi = embed_value(TH->irr[j].v[c], TH->m, TG.m);
                acc2 = acc2 + r.v[c].mul(psi.conj(TG.m), TG.m).scaled((long long)cdH.cls[c].size);
            }
            auto mv = acc2.as_integer(cx);
            if (!mv || *mv % (long long)horder != 0) {
                bad.push_back("<chi_" + std::to_string(i) + " o f, psi_" + std::to_string(j) +
                              "> is not a rational integer");
                continue;
            }
            long long mult = *mv / (long long)horder;
            if (mult < 0)
                bad.push_back("<chi_" + std::to_string(i) + " o f, psi_" + std::to_string(j) +
                              "> is negative");
            degsum += mult * TH->degrees[j];
        }
        if (degsum != TG.degrees[i])
            bad.push_back("chi_" + std::to_string(i) +
                          " o f is not a character (degree decomposition fails)");
    }
    return bad;
}

namespace {

struct SearchCtx {
    const ClassData& cdH;
    const CharTable& TH;
    const ClassData& cdG;
    const CharTable& TG;
    std::vector<std::vector<uint32_t>> cand;   // per H-class candidate G-classes
    std::vector<uint32_t> assign;
    std::vector<uint32_t> order;               // H-class processing order
    std::vector<FusionMap> found;
    // precomputed canonical |chi(d)|^2 per (irr, G-class)
    std::vector<std::vector<std::vector<long long>>> norm_vec;
    uint32_t phi;
};

bool powermap_consistent(const SearchCtx& sc, uint32_t c_new) {
    for (const auto& [p, pmH] : sc.cdH.power_map) {
        const auto& pmG = sc.cdG.power_map.at(p);
        for (uint32_t c = 0; c < sc.cdH.k(); ++c) {
            if (sc.assign[c] == UINT32_MAX) continue;
            uint32_t cp = pmH[c];
            if (sc.assign[cp] == UINT32_MAX) continue;
            if ((c == c_new || cp == c_new) && sc.assign[cp] != pmG[sc.assign[c]]) return false;
        }
    }
    return true;
}

bool norm_filter(const SearchCtx& sc) {
    uint64_t horder = sc.cdH.G->order();
    std::vector<long long> acc(sc.phi);
    for (uint32_t i = 0; i < sc.TG.k(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (uint32_t c = 0; c < sc.cdH.k(); ++c) {
            const auto& nv = sc.norm_vec[i][sc.assign[c]];
            long long s = (long long)sc.cdH.cls[c].size;
            for (uint32_t t = 0; t < sc.phi; ++t) acc[t] += s * nv[t];
        }
        if (acc[0] % (long long)horder) return false;
        for (uint32_t t = 1; t < sc.phi; ++t)
            if (acc[t]) return false;
    }
    return true;
}

void dfs(SearchCtx& sc, size_t depth) {
    if (depth == sc.order.size()) {
        if (!norm_filter(sc)) return;
        FusionMap f{sc.assign};
        if (integrality_audit(f, sc.TG, sc.cdH, &sc.TH).empty()) sc.found.push_back(f);
        return;
    }
    uint32_t c = sc.order[depth];
    for (uint32_t d : sc.cand[c]) {
        sc.assign[c] = d;
        if (powermap_consistent(sc, c)) dfs(sc, depth + 1);
        sc.assign[c] = UINT32_MAX;
    }
}

}  // namespace

std::vector<FusionMap> possible_fusions(const ClassData& cdH, const CharTable& TH,
                                        const ClassData& cdG, const CharTable& TG) {
    const CycCtx& cx = CycCtx::get(TG.m);
    SearchCtx sc{cdH, TH, cdG, TG, {}, {}, {}, {}, {}, cx.phi};
    sc.cand.resize(cdH.k());
    for (uint32_t c = 0; c < cdH.k(); ++c) {
        for (uint32_t d = 0; d < cdG.k(); ++d) {
            if (cdH.cls[c].elem_order != cdG.cls[d].elem_order) continue;
            if (cdG.cls[d].centralizer % cdH.cls[c].centralizer != 0) continue;
            sc.cand[c].push_back(d);
        }
        if (sc.cand[c].empty()) return {};
    }
    // arc consistency over the power maps
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [p, pmH] : cdH.power_map) {
            const auto& pmG = cdG.power_map.at(p);
            for (uint32_t c = 0; c < cdH.k(); ++c) {
                uint32_t cp = pmH[c];
                std::vector<uint32_t> keep;
                for (uint32_t d : sc.cand[c]) {
                    uint32_t dp = pmG[d];
                    if (std::find(sc.cand[cp].begin(), sc.cand[cp].end(), dp) !=
                        sc.cand[cp].end())
                        keep.push_back(d);
                }
                if (keep.size() != sc.cand[c].size()) {
                    sc.cand[c] = keep;
                    changed = true;
                    if (keep.empty()) return {};
                }
            }
        }
    }
    // precompute canonical |chi|^2 vectors
    sc.norm_vec.assign(TG.k(), {});
    for (uint32_t i = 0; i < TG.k(); ++i) {
        sc.norm_vec[i].resize(cdG.k());
        for (uint32_t d = 0; d < cdG.k(); ++d)
            sc.norm_vec[i][d] = TG.irr[i].v[d].mul(TG.irr[i].v[d].conj(TG.m), TG.m).canonical(cx);
    }
    sc.assign.assign(cdH.k(), UINT32_MAX);
    sc.order.resize(cdH.k());
    for (uint32_t c = 0; c < cdH.k(); ++c) sc.order[c] = c;
    std::sort(sc.order.begin(), sc.order.end(), [&](uint32_t x, uint32_t y) {
        if (sc.cand[x].size() != sc.cand[y].size()) return sc.cand[x].size() < sc.cand[y].size();
        return x < y;
    });
    dfs(sc, 0);
    std::sort(sc.found.begin(), sc.found.end());
    return sc.found;
}

Rat restriction_norm_by_elements_serial_ref(const Group& H, const Group& G,
                                            const ClassData& cdG, const ClassFunction& chi) {
    const CycCtx& cx = CycCtx::get(chi.m);
    std::vector<long long> counts(cdG.k(), 0);
    for (uint64_t x : H.elems) ++counts[cdG.class_of[G.ord_of(x)]];
    Cyc acc;
    for (uint32_t c = 0; c < cdG.k(); ++c) {
        if (!counts[c]) continue;
        acc = acc + chi.v[c].mul(chi.v[c].conj(chi.m), chi.m).scaled(counts[c]);
    }
    auto iv = acc.as_integer(cx);
    if (!iv) throw std::logic_error("restriction norm is not rational");
    return Rat(*iv, (long long)H.order());
}

Rat restriction_norm_by_elements(const Group& H, const Group& G, const ClassData& cdG,
                                 const ClassFunction& chi, ExecMode mode) {
    if (mode == ExecMode::Serial) return restriction_norm_by_elements_serial_ref(H, G, cdG, chi);
    const CycCtx& cx = CycCtx::get(chi.m);
    int64_t n = (int64_t)H.order();
    // per-class tallies are exact and schedule independent
    std::vector<long long> counts(cdG.k(), 0);
#pragma omp parallel
    {
        std::vector<long long> local(cdG.k(), 0);
#pragma omp for schedule(static)
        for (int64_t i = 0; i < n; ++i) ++local[cdG.class_of[G.ord_of(H.elems[i])]];
#pragma omp critical
        for (uint32_t c = 0; c < cdG.k(); ++c) counts[c] += local[c];
    }
    Cyc acc;
    for (uint32_t c = 0; c < cdG.k(); ++c) {
        if (!counts[c]) continue;
        acc = acc + chi.v[c].mul(chi.v[c].conj(chi.m), chi.m).scaled(counts[c]);
    }
    auto iv = acc.as_integer(cx);
    if (!iv) throw std::logic_error("restriction norm is not rational");
    return Rat(*iv, (long long)H.order());
}

}  // namespace sw
