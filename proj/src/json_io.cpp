#include "sw/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sw {

using nlohmann::json;

std::string data_dir() {
    if (const char* env = std::getenv("SW_DATA_DIR")) return env;
#ifdef SW_DATA_DIR
    return SW_DATA_DIR;
#else
    return "data";
#endif
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_generator_file(const std::string& path, const Field& F, int half_rank,
                          const std::string& name, const std::string& provenance,
                          const std::vector<Mat>& gens) {
    json j;
    j["q"] = F.q();
    j["n"] = half_rank;
    j["name"] = name;
    j["provenance"] = provenance;
    json gl = json::array();
    for (const Mat& g : gens) {
        json rows = json::array();
        for (int r = 0; r < g.n; ++r) {
            json row = json::array();
            for (int c = 0; c < g.n; ++c) {
                uint16_t v = g.at(r, c);
                row.push_back(v == 0 ? -1 : (int)F.base.logt[v]);
            }
            rows.push_back(row);
        }
        gl.push_back(rows);
    }
    j["generators"] = gl;
    write_text_file(path, j.dump(1) + "\n");
}

GeneratorFile read_generator_file(const std::string& path, const Field& F) {
    json j = json::parse(read_text_file(path));
    GeneratorFile gf;
    gf.q = j.at("q").get<int>();
    gf.n = j.at("n").get<int>();
    gf.name = j.at("name").get<std::string>();
    gf.provenance = j.value("provenance", "");
    if ((uint32_t)gf.q != F.q())
        throw std::runtime_error(path + ": field size mismatch");
    for (const auto& rows : j.at("generators")) {
        Mat g;
        g.n = 2 * gf.n;
        int r = 0;
        for (const auto& row : rows) {
            int c = 0;
            for (const auto& cell : row) {
                int v = cell.get<int>();
                g.at(r, c) = v < 0 ? 0 : F.base.expt[v % (F.q() - 1 ? F.q() - 1 : 1)];
                ++c;
            }
            ++r;
        }
        gf.generators.push_back(g);
    }
    return gf;
}

std::string char_table_to_json(const Group& G, const ClassData& cd, const CharTable& T) {
    const CycCtx& cx = CycCtx::get(T.m);
    json j;
    j["group"] = G.name;
    j["order"] = G.order();
    j["m"] = T.m;
    j["dixon_prime"] = T.dixon_prime;
    json classes = json::array();
    for (const auto& c : cd.cls) {
        json cj;
        cj["order"] = c.elem_order;
        cj["size"] = c.size;
        cj["centralizer"] = c.centralizer;
        json pm;
        for (const auto& [p, v] : cd.power_map) pm[std::to_string(p)] = v[&c - cd.cls.data()];
        cj["powermaps"] = pm;
        classes.push_back(cj);
    }
    j["classes"] = classes;
    json irr = json::array();
    for (const auto& chi : T.irr) {
        json row = json::array();
        for (const auto& v : chi.v) row.push_back(v.canonical(cx));
        irr.push_back(row);
    }
    j["irreducibles"] = irr;
    return j.dump(1) + "\n";
}

void write_char_table(const std::string& path, const Group& G, const ClassData& cd,
                      const CharTable& T) {
    write_text_file(path, char_table_to_json(G, cd, T));
}

bool char_table_json_roundtrip_equal(const std::string& text, const CharTable& T) {
    const CycCtx& cx = CycCtx::get(T.m);
    json j = json::parse(text);
    if (j.at("m").get<uint32_t>() != T.m) return false;
    const auto& irr = j.at("irreducibles");
    if (irr.size() != T.k()) return false;
    for (uint32_t i = 0; i < T.k(); ++i) {
        const auto& row = irr[i];
        if (row.size() != T.irr[i].v.size()) return false;
        for (size_t c = 0; c < row.size(); ++c) {
            auto got = row[c].get<std::vector<long long>>();
            if (got != T.irr[i].v[c].canonical(cx)) return false;
        }
    }
    return true;
}

std::string fusion_to_json(const FusionMap& f, const std::string& h_name,
                           const std::string& g_name) {
    json j;
    j["subgroup"] = h_name;
    j["group"] = g_name;
    j["h_class_to_g_class"] = f.h_to_g;
    return j.dump(1) + "\n";
}

std::string catalog_to_json(const Catalog& cat) {
    json entries = json::array();
    for (const auto& [name, e] : cat.entries) {
        json ej;
        ej["name"] = name;
        ej["num"] = e.poly.num;
        ej["den"] = e.poly.den;
        if (e.radicand) {
            ej["radicand_num"] = e.radicand->num;
            ej["radicand_den"] = e.radicand->den;
        }
        ej["provenance"] = e.provenance;
        entries.push_back(ej);
    }
    json j;
    j["format"] = "sympweil-catalog";
    j["version"] = 1;
    j["entries"] = entries;
    return j.dump(1) + "\n";
}

void write_catalog(const std::string& path) {
    write_text_file(path, catalog_to_json(Catalog::instance()));
}

bool catalog_json_matches(const std::string& text) {
    return text == catalog_to_json(Catalog::instance());
}

}  // namespace sw
