#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patcount {

struct VerifyCase {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;

    bool all_passed() const;
};

/// eustace, thomas, imogene, oliver, mary, jacob, katherine
std::span<std::string_view const> suite_names();

/// Runs one suite. `max_n` caps the sizes each suite sweeps (0 keeps the
/// suite default). Throws Error(InvalidArgument) for unknown suites.
VerifyReport run_suite(std::string_view suite, std::int64_t max_n = 0, unsigned jobs = 1);

}  // namespace patcount
