#pragma once

#include <stdexcept>

namespace capset {

// Raised when a computation would exceed an explicit size budget
// (oversized stabilizer collection, fingerprint of a too-large group, ...).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace capset
