#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cluster {

struct AcceptanceResult {
    std::string name;
    bool passed = false;
    std::string detail;  // counts, timings-free evidence, or the failure
};

// Runs the full acceptance checklist.  Deterministic for a fixed seed;
// jobs controls worker threads for the graph explorations.
std::vector<AcceptanceResult> runAcceptance(std::uint64_t randSeed = 0,
                                            unsigned jobs = 1);

// "PASS name - detail" / "FAIL name - detail", one line per criterion.
std::string acceptanceTable(const std::vector<AcceptanceResult>& results);

}  // namespace cluster
