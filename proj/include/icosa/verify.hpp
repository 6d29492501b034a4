#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace icosa {

struct SectionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<SectionResult> sections;
    bool all_pass = false;
};

// Runs every module's self-checks in dependency order, stopping at the first
// failing section. The simulation section uses the given cutoff and seed.
VerifyReport verify_all(std::uint64_t x = 1000000, std::uint64_t seed = 42,
                        unsigned threads = 0);

}  // namespace icosa
