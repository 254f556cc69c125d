#include "capset/report.hpp"

#include <iomanip>
#include <sstream>

namespace capset {

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Report::digest() const {
    nlohmann::json core = {
        {"command", command}, {"parameters", parameters}, {"results", results}};
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(core.dump());
    return os.str();
}

nlohmann::json Report::to_json() const {
    return {{"command", command},  {"parameters", parameters}, {"results", results},
            {"timing", timing},    {"worker_count", worker_count},
            {"digest", digest()}};
}

}  // namespace capset
