#include "capset/parallel.hpp"

#include <string>

namespace capset {

int default_jobs() {
    if (const char* env = std::getenv("CAPSET_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

}  // namespace capset
