#pragma once

#include "logcy/periods.hpp"

namespace logcy {

struct SweepTrial {
    size_t index = 0;
    std::string fan_name;
    std::vector<size_t> pattern;  // blowups per ray
    long long charge = 0;
    long long s_rank = 0;
    long long dperp_rank = 0;
    long long winding_rank = 0;
    size_t occupied_rays = 0;
    size_t total_blowups = 0;
    bool compare_pass = false;
    bool seed_stable = true;
    bool rank_identity = false;  // dperp_rank == charge - 2 + s_rank == winding_rank
};

struct SweepSummary {
    std::vector<SweepTrial> trials;
    size_t passed = 0;
    bool all_pass = false;
};

// The fixed fan catalogue used by the randomized sweep.
const std::vector<std::pair<std::string, std::vector<Vec2>>>& fan_catalogue();

// Runs `count` deterministic random trials; trial t uses seed `seed + t`.
SweepSummary run_sweep(size_t count, uint64_t seed);

}  // namespace logcy
