#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spt/instances.hpp"

namespace spt {

struct FuzzFailure {
    std::uint64_t seed = 0;
    std::string kind;  // "verifier:<flag>", "value_mismatch", ...
};

struct FuzzReport {
    std::string class_name;
    int trials = 0;
    std::vector<FuzzFailure> failures;
    // first_type is asserted only for classes that promise it; for the
    // others its empirical rate is reported here and asserted nowhere.
    int first_type_pass = 0;
    int first_type_checked = 0;

    bool ok() const { return failures.empty(); }
};

// Per trial: generate an instance of the class (n in [1, n_max]), build it,
// run the full verifier with cover checking, then solve with fresh random
// weights in [0, 100] and compare against the exact oracle; the member set
// must be independent and sum to the reported value. Failures carry the
// trial seed. Deterministic for fixed arguments; with parallel set, trials
// run on several threads and are merged by trial index, so the report is
// identical either way.
FuzzReport fuzz_compare(ClassKind cls, int trials, int n_max, std::uint64_t seed,
                        bool parallel = false);

} // namespace spt
