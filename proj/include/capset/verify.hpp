#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "capset/registry.hpp"
#include "capset/report.hpp"

namespace capset {

struct VerifyOutcome {
    Report report;
    std::vector<std::string> mismatches;
    bool pass() const { return mismatches.empty(); }
};

// Runs every registry fact at or below the requested depth and records the
// computed value next to the expected one. The seed drives only the sampled
// checks (transports, equivariance samples); exhaustive sweeps ignore it.
VerifyOutcome verify_all(Depth depth, int jobs, uint64_t seed);

// The frozen canonical-cap fixture (sorted point indices).
const std::vector<int>& canonical_cap_fixture();

}  // namespace capset
