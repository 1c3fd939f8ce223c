#include "sw/group.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sw {

namespace {
int g_threads = 0;   // 0 = library default
}

void set_thread_count(int k) {
    g_threads = k;
#ifdef _OPENMP
    if (k > 0) omp_set_num_threads(k);
#endif
    set_default_exec_mode(k == 1 ? ExecMode::Serial : ExecMode::Parallel);
}

namespace {

FpKey key_of(const Group& G, uint64_t packed) {
    return fingerprint(*G.F, G.codec.unpack(packed)).key();
}

}  // namespace

std::vector<FpKey> fingerprint_keys_serial_ref(const Group& G) {
    std::vector<FpKey> keys(G.order());
    for (size_t i = 0; i < G.elems.size(); ++i) keys[i] = key_of(G, G.elems[i]);
    return keys;
}

std::vector<FpKey> fingerprint_keys(const Group& G, ExecMode mode) {
    if (mode == ExecMode::Serial) return fingerprint_keys_serial_ref(G);
    std::vector<FpKey> keys(G.order());
    const int64_t n = (int64_t)G.elems.size();
#pragma omp parallel for schedule(dynamic, 1024)
    for (int64_t i = 0; i < n; ++i) keys[i] = key_of(G, G.elems[i]);
    return keys;
}

std::vector<uint64_t> class_matrix_coeffs_serial_ref(const Group& G, const ClassData& cd) {
    uint32_t k = cd.k();
    std::vector<uint64_t> a((size_t)k * k * k, 0);
    for (uint32_t kk = 0; kk < k; ++kk) {
        uint64_t repk = G.elems[cd.cls[kk].rep];
        for (uint32_t x = 0; x < G.order(); ++x) {
            uint32_t i = cd.class_of[x];
            uint64_t y = G.mul_packed(G.elems[G.inv_ord[x]], repk);
            uint32_t j = cd.class_of[G.ord_of(y)];
            ++a[((size_t)i * k + j) * k + kk];
        }
    }
    return a;
}

std::vector<uint64_t> class_matrix_coeffs(const Group& G, const ClassData& cd, ExecMode mode) {
    if (mode == ExecMode::Serial) return class_matrix_coeffs_serial_ref(G, cd);
    uint32_t k = cd.k();
    std::vector<uint64_t> a((size_t)k * k * k, 0);
    const int64_t kk_n = k;
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t kk = 0; kk < kk_n; ++kk) {
        uint64_t repk = G.elems[cd.cls[kk].rep];
        for (uint32_t x = 0; x < G.order(); ++x) {
            uint32_t i = cd.class_of[x];
            uint64_t y = G.mul_packed(G.elems[G.inv_ord[x]], repk);
            uint32_t j = cd.class_of[G.ord_of(y)];
            ++a[((size_t)i * k + j) * k + kk];
        }
    }
    return a;
}

}  // namespace sw
