#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "capset/gf3.hpp"
#include "capset/groups.hpp"
#include "capset/partitions.hpp"
#include "capset/pointset.hpp"

namespace capset {

// Point sets serialize as sorted index arrays; cap files carry the dimension.
nlohmann::json pointset_to_json(const PointSet& s);
PointSet pointset_from_json(const Geometry& g, const nlohmann::json& j);

nlohmann::json cap_to_json(const Geometry& g, const PointSet& s);
// Reads {"n": ..., "points": [...]} or a bare index array (dimension from g).
PointSet cap_from_json(const Geometry& g, const nlohmann::json& j);
PointSet load_cap_file(const Geometry& g, const std::string& path);

nlohmann::json partition_to_json(const Geometry& g, const Partition4& p);
Partition4 partition_from_json(const Geometry& g, const nlohmann::json& j);
Partition4 load_partition_file(const Geometry& g, const std::string& path);

nlohmann::json group_to_json(const Geometry& g, const MatrixGroup& grp,
                             bool with_fingerprint = true);
nlohmann::json fingerprint_to_json(const GroupFingerprint& fp);

// Cap database, JSON-lines: one sorted index array per line.
void write_caps_jsonl(std::ostream& os, const std::vector<PointSet>& caps);
std::vector<PointSet> read_caps_jsonl(std::istream& is);

// Compact binary: 16-byte header (magic "CAP3", u8 version, u8 n, u16
// reserved, u64 count little-endian), then max_cap_size(n) bytes per cap.
void write_caps_binary(std::ostream& os, const Geometry& g, int cap_size,
                       const std::vector<PointSet>& caps);
std::vector<PointSet> read_caps_binary(std::istream& is, int* n_out);

}  // namespace capset
