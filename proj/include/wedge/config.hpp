#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wedge/core.hpp"
#include "wedge/solver.hpp"

namespace wedge {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_no, std::string key_name)
        : std::runtime_error(msg), line(line_no), key(std::move(key_name)) {}
    int line;
    std::string key;
};

struct RunConfig {
    ProblemParams params;
    GridSpec grid;
    Tolerances tolerances;
    uint64_t seed = 1;
    std::string out_field = "field.csv";
    std::string out_report = "report.json";
    std::string out_kernel = "kernel.csv";
};

// Flat "key = value" lines; '#' starts a comment. Unknown keys, duplicates and
// malformed numbers raise ParseError; invalid parameters raise DomainError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace wedge
