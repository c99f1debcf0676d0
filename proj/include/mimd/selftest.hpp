#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mimd/multiview.hpp"
#include "mimd/pushforward.hpp"

namespace mimd {

/// Bidegrees used for verification: {0..3}^2 without (0,0).
std::vector<Congruence> bidegree_grid();

/// Camera tuples of length n: every tuple over bidegree_grid() when n <= 3,
/// otherwise `samples` tuples drawn with a fixed seed.
std::vector<std::vector<Congruence>> camera_cases(std::size_t n, std::size_t samples = 500,
                                                  std::uint64_t seed = 20170822);

struct SelftestOptions {
    std::size_t max_n = 6;
    std::size_t samples = 500;
    std::uint64_t seed = 20170822;
    /// Replaces the Plucker table in the pipeline checks (negative controls).
    std::optional<PushTable> push_table;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    /// First counterexample, empty when passed.
    std::string failure;

    std::string summary() const;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts);

}  // namespace mimd
