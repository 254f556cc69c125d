#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace capset {

// Canonical command report. The digest covers command, parameters and
// results only; timing and worker_count vary run to run and stay outside.
struct Report {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    nlohmann::json timing = nlohmann::json::object();
    int worker_count = 1;

    std::string digest() const;
    nlohmann::json to_json() const;
};

uint64_t fnv1a64(const std::string& bytes);

}  // namespace capset
