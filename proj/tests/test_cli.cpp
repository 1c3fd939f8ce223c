#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sw/json_io.hpp"

namespace {

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& args) {
    std::string cmd = std::string(SW_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("cli: identities command exits cleanly") {
    CHECK(run("identities") == 0);
}

TEST_CASE("cli: invalid flags give a usage error") {
    CHECK(run("no-such-command") != 0);
    CHECK(run("table --q 3 --n 1") != 0);   // not a power of two
}

TEST_CASE("cli: repeated runs produce byte-identical artifacts") {
    namespace fs = std::filesystem;
    fs::path d1 = fs::temp_directory_path() / "sw_cli_a";
    fs::path d2 = fs::temp_directory_path() / "sw_cli_b";
    fs::remove_all(d1);
    fs::remove_all(d2);
    REQUIRE(run("table --n 1 --q 2 --out " + d1.string()) == 0);
    REQUIRE(run("table --n 1 --q 2 --out " + d2.string()) == 0);
    std::string a = slurp((d1 / "table.json").string());
    std::string b = slurp((d2 / "table.json").string());
    CHECK(!a.empty());
    CHECK(a == b);

    REQUIRE(run("identities --out " + d1.string()) == 0);
    REQUIRE(run("identities --out " + d2.string()) == 0);
    CHECK(slurp((d1 / "identities.json").string()) == slurp((d2 / "identities.json").string()));
}

TEST_CASE("the shipped catalog file matches the built-in catalog") {
    std::string path = sw::data_dir() + "/catalog.json";
    CHECK(sw::catalog_json_matches(sw::read_text_file(path)));
}

TEST_CASE("the shipped generator files load and carry provenance") {
    sw::Field F = sw::field_create(1);
    for (const char* f : {"gens/g2_q2.json", "gens/l2_8_3_q2.json"}) {
        auto gf = sw::read_generator_file(sw::data_dir() + "/" + f, F);
        CHECK(gf.q == 2);
        CHECK(gf.n == 3);
        CHECK(!gf.provenance.empty());
        CHECK(!gf.generators.empty());
    }
}
