#pragma once

#include <string>
#include <vector>

#include "sw/chartab.hpp"
#include "sw/fusion.hpp"
#include "sw/group.hpp"
#include "sw/qpoly.hpp"

namespace sw {

// compiled-in default, overridable via SW_DATA_DIR environment variable
std::string data_dir();

// ---- generator files: {q, n, name, provenance, generators} with entries
// encoded as log indices (-1 for zero) ----
void write_generator_file(const std::string& path, const Field& F, int half_rank,
                          const std::string& name, const std::string& provenance,
                          const std::vector<Mat>& gens);
struct GeneratorFile {
    int q = 0;
    int n = 0;
    std::string name;
    std::string provenance;
    std::vector<Mat> generators;
};
GeneratorFile read_generator_file(const std::string& path, const Field& F);

// ---- character table JSON (bit-exact round trip) ----
std::string char_table_to_json(const Group& G, const ClassData& cd, const CharTable& T);
void write_char_table(const std::string& path, const Group& G, const ClassData& cd,
                      const CharTable& T);
// parses the JSON back into canonical coefficient vectors for comparison
bool char_table_json_roundtrip_equal(const std::string& json, const CharTable& T);

// ---- fusion map JSON ----
std::string fusion_to_json(const FusionMap& f, const std::string& h_name,
                           const std::string& g_name);

// ---- catalog data file ----
std::string catalog_to_json(const Catalog& cat);
void write_catalog(const std::string& path);
bool catalog_json_matches(const std::string& json);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace sw
