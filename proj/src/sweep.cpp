#include "logcy/sweep.hpp"

#include "logcy/rng.hpp"

namespace logcy {

const std::vector<std::pair<std::string, std::vector<Vec2>>>& fan_catalogue() {
    static const std::vector<std::pair<std::string, std::vector<Vec2>>> cat = {
        {"P2", {{1, 0}, {0, 1}, {-1, -1}}},
        {"F0", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}},
        {"F1", {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}},
        {"F2", {{1, 0}, {0, 1}, {-1, 2}, {0, -1}}},
        {"dP_5ray", {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}}},
    };
    return cat;
}

namespace {

LaurentScalar random_unit(SplitMix64& rng) {
    // a + b*t with random rationals, a != 0.
    long long an = 1 + static_cast<long long>(rng.below(9));
    if (rng.below(2)) an = -an;
    long long ad = 1 + static_cast<long long>(rng.below(9));
    long long bn = static_cast<long long>(rng.below(19)) - 9;
    long long bd = 1 + static_cast<long long>(rng.below(9));
    // (an/ad) + (bn/bd) t = (an*bd + bn*ad t) / (ad*bd)
    Poly num(std::vector<Int>{Int(an) * bd, Int(bn) * ad});
    Poly den(Int(ad) * bd);
    return LaurentScalar(num, den);
}

}  // namespace

SweepSummary run_sweep(size_t count, uint64_t seed) {
    SweepSummary sum;
    const auto& cat = fan_catalogue();
    for (size_t t = 0; t < count; ++t) {
        uint64_t trial_seed = seed + t;
        SplitMix64 rng(trial_seed * 0x100000001b3ULL + 0xcbf29ce484222325ULL);
        const auto& [name, rays] = cat[t % cat.size()];
        Fan2D fan = Fan2D::validate(rays);

        SweepTrial trial;
        trial.index = t;
        trial.fan_name = name;

        std::vector<std::vector<LaurentScalar>> mus(fan.size());
        bool toric_trial = (t % 7 == 0);  // keep Q = 0 instances in the mix
        for (size_t i = 0; i < fan.size() && !toric_trial; ++i) {
            size_t k = rng.below(3);
            for (size_t j = 0; j < k; ++j) {
                for (int tries = 0;; ++tries) {
                    if (tries > 64) throw PeriodError("sweep could not draw distinct scalars");
                    LaurentScalar m = random_unit(rng);
                    bool clash = false;
                    for (const LaurentScalar& prev : mus[i])
                        if (prev.reduce_at_zero() == m.reduce_at_zero()) clash = true;
                    if (!clash) {
                        mus[i].push_back(m);
                        break;
                    }
                }
            }
        }
        LooijengaPair pair(fan, std::move(mus));

        for (size_t i = 1; i <= pair.rays(); ++i) {
            trial.pattern.push_back(pair.blowup_count(i));
            if (pair.blowup_count(i) > 0) ++trial.occupied_rays;
        }
        trial.total_blowups = pair.total_blowups();
        trial.charge = pair.charge();
        trial.s_rank = pair.s_rank();
        trial.dperp_rank = static_cast<long long>(pair.dperp_basis().size());
        trial.winding_rank = h1_compute(pair, false).free_rank;
        trial.rank_identity = trial.dperp_rank == trial.charge - 2 + trial.s_rank &&
                              trial.dperp_rank == trial.winding_rank;

        CompareReport rep = compare_periods(pair, trial_seed);
        trial.compare_pass = rep.pass;
        trial.seed_stable = rep.seed_stable;
        if (trial.compare_pass && trial.rank_identity) ++sum.passed;
        sum.trials.push_back(std::move(trial));
    }
    sum.all_pass = sum.passed == count;
    return sum;
}

}  // namespace logcy
