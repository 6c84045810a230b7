#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dentedhex {

/// Outcome of one property suite. Cases run in increasing size order, so the
/// recorded counterexample is the first (smallest) failure.
struct SuiteReport {
    std::string suite;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string counterexample;

    bool passed() const { return failures == 0; }
};

/// "ring", "paths", "ratio", "lgv", "tilings".
const std::vector<std::string>& verify_suite_names();

/// Runs one named suite at size bound max with a deterministic seed.
/// Throws InvalidArgument for an unknown suite name.
SuiteReport run_verify_suite(std::string_view suite, std::int32_t max, std::uint64_t seed);

}  // namespace dentedhex
