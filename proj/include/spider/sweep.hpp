#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spider/certificate.hpp"

namespace spider {

// name -> inclusive range, e.g. "n=1..5,m=0..4" or "k=3".
using Grid = std::map<std::string, std::pair<int, int>>;

// Throws std::invalid_argument on malformed text.
Grid parse_grid(const std::string& text);

struct SweepConstructor {
    std::string name;
    std::vector<std::string> params;
};

// Constructors reachable by sweep, including "dispatch" over legs (a, b, c) and
// "leg1" / "all_even" over generated signatures.
const std::vector<SweepConstructor>& sweep_constructors();

struct SweepReport {
    std::string constructor;
    long instances = 0;       // certificates built and checked
    long out_of_domain = 0;   // grid points rejected by the constructor's domain
    long failures = 0;
    std::optional<std::string> first_failure;
};

// Builds every certificate on the grid, re-verifies it, checks the claimed count and the
// JSON round trip. Stops at the first failure. Points with q > max_q are skipped.
// Throws std::invalid_argument for unknown constructors or missing grid parameters.
SweepReport run_sweep(const std::string& constructor, const Grid& grid, int max_q = 400);

}  // namespace spider
