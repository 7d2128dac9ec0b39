#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace svf::suite {

struct SuiteResult {
    std::string name;
    int instances = 0;
    int passes = 0;
    std::string counterexample;  // first failing instance, when any

    bool passed() const { return passes == instances; }
};

std::vector<std::string> suite_names();

// Runs one named suite (or every suite for "all") with `instances` seeded
// random instances each; instance t of a suite uses the stream derived from
// (seed, suite name, t), so results are reproducible and order-independent.
std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed, int instances);

}  // namespace svf::suite
