#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permlab/matrix.hpp"

namespace permlab::verify {

struct SuiteResult {
    std::string suite;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> failure_notes;
    std::optional<MatD> witness; // first failing matrix, when one exists
    double seconds = 0;
    bool pass() const { return failures == 0; }
};

// Property suites behind `permlab verify`; each drives the identities
// of one area over `samples` seeded random inputs.
SuiteResult run_symf4(long samples, std::uint64_t seed);
SuiteResult run_lihwang4(long samples, std::uint64_t seed);
SuiteResult run_lihwang6(long samples, std::uint64_t seed);
SuiteResult run_dittert(long samples, std::uint64_t seed);
std::vector<SuiteResult> run_suite(const std::string& name, long samples, std::uint64_t seed);

} // namespace permlab::verify
