// Benchmark comparing the OpenMP kernels against their serial reference
// twins on a chosen symplectic group.
#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "sw/classify.hpp"
#include "sw/fusion.hpp"
#include "sw/subgroups.hpp"
#include "sw/weil.hpp"

using namespace sw;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timed(F&& f) {
    auto t0 = Clock::now();
    f();
    return secs(t0, Clock::now());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernel benchmark: parallel vs serial reference"};
    int n = 3, q = 2, threads = 0;
    app.add_option("--n", n);
    app.add_option("--q", q);
    app.add_option("--threads", threads);
    CLI11_PARSE(app, argc, argv);
    if (threads > 0) set_thread_count(threads);

    std::cout << "building Sp_" << 2 * n << "(" << q << ") ...\n";
    Group G = symplectic_group(n, q);
    std::cout << "order " << G.order() << "\n";

    double t_fp_par = 0, t_fp_ser = 0;
    std::vector<FpKey> kp, ks;
    t_fp_par = timed([&] { kp = fingerprint_keys(G, ExecMode::Parallel); });
    t_fp_ser = timed([&] { ks = fingerprint_keys_serial_ref(G); });
    bool fp_same = kp.size() == ks.size();
    for (size_t i = 0; i < kp.size() && fp_same; ++i) fp_same = kp[i] == ks[i];

    ClassData cd = conjugacy_classes(G);
    std::vector<uint64_t> ap, as;
    double t_cm_par = timed([&] { ap = class_matrix_coeffs(G, cd, ExecMode::Parallel); });
    double t_cm_ser = timed([&] { as = class_matrix_coeffs_serial_ref(G, cd); });

    double t_w_par = 0, t_w_ser = 0;
    bool wp = false, wsr = false;
    t_w_par = timed([&] { wp = weil_class_function_check(G, cd, ExecMode::Parallel); });
    t_w_ser = timed([&] { wsr = weil_class_function_check_serial_ref(G, cd); });

    CharTable T = dixon_character_table(G, cd);
    ParabolicData pd = parabolic_decomposition(G, 1);
    const ClassFunction& chi = T.irr[T.k() - 1];
    Rat np(0), nsr(0);
    double t_n_par =
        timed([&] { np = restriction_norm_by_elements(pd.P, G, cd, chi, ExecMode::Parallel); });
    double t_n_ser =
        timed([&] { nsr = restriction_norm_by_elements_serial_ref(pd.P, G, cd, chi); });

    auto line = [](const char* nm, double tp, double ts, bool same) {
        std::printf("%-24s parallel %8.3fs   serial %8.3fs   speedup %5.2fx   match %s\n", nm, tp,
                    ts, ts > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
    };
    std::cout << "\nkernel                   timings\n";
    line("fingerprint sweep", t_fp_par, t_fp_ser, fp_same);
    line("class matrix coeffs", t_cm_par, t_cm_ser, ap == as);
    line("weil formula sweep", t_w_par, t_w_ser, wp == wsr && wp);
    line("restriction norm sweep", t_n_par, t_n_ser, np == nsr);
    bool ok = fp_same && ap == as && wp && wsr && np == nsr;
    return ok ? 0 : 1;
}
