#include "capset/io.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace capset {

nlohmann::json pointset_to_json(const PointSet& s) {
    return nlohmann::json(s.to_indices());
}

PointSet pointset_from_json(const Geometry& g, const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("point set must be a JSON array");
    PointSet s;
    for (const auto& v : j) {
        int p = v.get<int>();
        if (p < 0 || p >= g.num_points())
            throw std::invalid_argument("point index outside the universe");
        s.set(p);
    }
    return s;
}

nlohmann::json cap_to_json(const Geometry& g, const PointSet& s) {
    return {{"n", g.n()}, {"points", pointset_to_json(s)}};
}

PointSet cap_from_json(const Geometry& g, const nlohmann::json& j) {
    if (j.is_array()) return pointset_from_json(g, j);
    if (!j.is_object() || !j.contains("points"))
        throw std::invalid_argument("cap file needs a points array");
    if (j.contains("n") && j["n"].get<int>() != g.n())
        throw std::invalid_argument("cap file dimension does not match");
    return pointset_from_json(g, j["points"]);
}

PointSet load_cap_file(const Geometry& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cap file: " + path);
    nlohmann::json j;
    in >> j;
    return cap_from_json(g, j);
}

nlohmann::json partition_to_json(const Geometry& g, const Partition4& p) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : p.blocks) blocks.push_back(pointset_to_json(b));
    auto ps = pair_structure(g, p);
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [x, y] : ps.pairs) pairs.push_back({x, y});
    const char* cls = ps.counts[0] == 1 ? "E1" : "E2";
    nlohmann::json pair_types = nlohmann::json::array();
    for (int c : ps.counts) pair_types.push_back(c == 1 ? "one" : "two");
    return {{"anchor", p.anchor}, {"blocks", blocks},     {"class", cls},
            {"pairs", pairs},     {"pair_types", pair_types}};
}

Partition4 partition_from_json(const Geometry& g, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("anchor") || !j.contains("blocks"))
        throw std::invalid_argument("partition file needs anchor and blocks");
    Partition4 p;
    p.anchor = j["anchor"].get<int>();
    const auto& blocks = j["blocks"];
    if (!blocks.is_array() || blocks.size() != 4)
        throw std::invalid_argument("partition needs exactly 4 blocks");
    for (int i = 0; i < 4; ++i) p.blocks[i] = pointset_from_json(g, blocks[i]);
    p.canonicalize();
    if (!p.well_formed(g)) throw std::invalid_argument("blocks do not partition the universe");
    return p;
}

Partition4 load_partition_file(const Geometry& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open partition file: " + path);
    nlohmann::json j;
    in >> j;
    return partition_from_json(g, j);
}

nlohmann::json fingerprint_to_json(const GroupFingerprint& fp) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [k, v] : fp.element_order_histogram) hist[std::to_string(k)] = v;
    nlohmann::json det = nlohmann::json::object();
    for (const auto& [k, v] : fp.determinant_split) det[std::to_string(k)] = v;
    return {{"order", fp.order},
            {"abelian", fp.abelian},
            {"center_order", fp.center_order},
            {"element_order_histogram", hist},
            {"determinant_split", det},
            {"derived_subgroup_order", fp.derived_subgroup_order}};
}

nlohmann::json group_to_json(const Geometry& g, const MatrixGroup& grp, bool with_fingerprint) {
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& m : grp.elems)
        elems.push_back(grp.all_linear() ? to_trits(g, m.lin) : to_trits(g, m));
    nlohmann::json out = {{"n", g.n()}, {"order", grp.order()}, {"elements", elems}};
    if (with_fingerprint) out["fingerprint"] = fingerprint_to_json(fingerprint(grp));
    return out;
}

void write_caps_jsonl(std::ostream& os, const std::vector<PointSet>& caps) {
    for (const auto& c : caps) os << pointset_to_json(c).dump() << '\n';
}

std::vector<PointSet> read_caps_jsonl(std::istream& is) {
    std::vector<PointSet> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        PointSet s;
        for (const auto& v : j) s.set(v.get<int>());
        out.push_back(s);
    }
    return out;
}

static constexpr char kMagic[4] = {'C', 'A', 'P', '3'};

void write_caps_binary(std::ostream& os, const Geometry& g, int cap_size,
                       const std::vector<PointSet>& caps) {
    os.write(kMagic, 4);
    uint8_t version = 1, n = static_cast<uint8_t>(g.n());
    uint16_t reserved = 0;
    uint64_t count = caps.size();
    os.write(reinterpret_cast<const char*>(&version), 1);
    os.write(reinterpret_cast<const char*>(&n), 1);
    os.write(reinterpret_cast<const char*>(&reserved), 2);
    os.write(reinterpret_cast<const char*>(&count), 8);
    for (const auto& c : caps) {
        auto idx = c.to_indices();
        if (static_cast<int>(idx.size()) != cap_size)
            throw std::invalid_argument("cap size does not match the record width");
        for (int p : idx) {
            uint8_t b = static_cast<uint8_t>(p);
            os.write(reinterpret_cast<const char*>(&b), 1);
        }
    }
}

std::vector<PointSet> read_caps_binary(std::istream& is, int* n_out) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::invalid_argument("bad cap database magic");
    uint8_t version = 0, n = 0;
    uint16_t reserved = 0;
    uint64_t count = 0;
    is.read(reinterpret_cast<char*>(&version), 1);
    is.read(reinterpret_cast<char*>(&n), 1);
    is.read(reinterpret_cast<char*>(&reserved), 2);
    is.read(reinterpret_cast<char*>(&count), 8);
    if (!is || version != 1 || n < 1 || n > 4)
        throw std::invalid_argument("bad cap database header");
    if (n_out) *n_out = n;
    int width = 0;
    switch (n) {
        case 1: width = 2; break;
        case 2: width = 4; break;
        case 3: width = 9; break;
        default: width = 20; break;
    }
    std::vector<PointSet> out;
    out.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
        PointSet s;
        for (int k = 0; k < width; ++k) {
            uint8_t b = 0;
            is.read(reinterpret_cast<char*>(&b), 1);
            s.set(b);
        }
        if (!is) throw std::invalid_argument("truncated cap database");
        out.push_back(s);
    }
    return out;
}

}  // namespace capset
