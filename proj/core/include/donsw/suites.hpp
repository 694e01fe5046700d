#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace donsw::suites {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;  // counterexample dump or summary counts
};

struct Result {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0.0;
    bool passed() const;
};

/// All runnable suite names, in a stable order.
std::vector<std::string> names();

/// Runs one named suite. trials <= 0 selects each suite's default volume.
/// Throws input_error for unknown names.
Result run(const std::string& name, std::uint64_t seed, int trials);

}  // namespace donsw::suites
