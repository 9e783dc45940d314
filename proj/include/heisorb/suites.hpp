#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace heisorb {

inline constexpr std::uint64_t default_seed = 0x3353;

struct CheckRow {
    std::string id;
    std::string about;
    std::string status;  // pass, fail, erratum, vacuous
    bool pass = false;
    nlohmann::json detail = nlohmann::json::object();
};

struct SuiteReport {
    std::string name;
    std::vector<CheckRow> rows;
    bool pass() const;
    std::size_t failures() const;
};

// s3-relations, z3-relations, classical, axioms, primaries
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, std::uint64_t seed = default_seed);

nlohmann::json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace heisorb
