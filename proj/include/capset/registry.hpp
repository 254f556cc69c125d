#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace capset {

enum class Depth { quick, full, deep };

// Single source of truth for every expected count the verification suite
// asserts, keyed by the anchor names used in reports.
struct AnchorFact {
    std::string key;
    long long expected;
    Depth depth;  // shallowest depth at which the fact is checked
    std::string description;
};

const std::vector<AnchorFact>& anchor_facts();
long long expected_value(const std::string& key);

Depth depth_from_string(const std::string& s);
std::string depth_to_string(Depth d);

}  // namespace capset
