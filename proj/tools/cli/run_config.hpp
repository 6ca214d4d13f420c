#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "homeguard/data_forge.hpp"
#include "homeguard/log_ingest.hpp"
#include "homeguard/pattern_miner.hpp"
#include "homeguard/simgen.hpp"
#include "homeguard/trainer.hpp"

namespace homeguard::cli {

/// Per-activity instance counts for the train and test splits.
struct SplitSizes {
    std::size_t normal = 0;
    std::size_t anomaly_seq = 0;
    std::size_t anomaly_ti = 0;

    std::size_t total() const noexcept { return normal + anomaly_seq + anomaly_ti; }
};

/// Every tunable of a run. One seed drives all randomness.
struct RunConfig {
    std::uint64_t seed = 42;
    IngestConfig ingest;
    MinerConfig miner;
    ForgeConfig forge;
    TrainConfig train;
    SimConfig sim;
    double noise_sigma_frac = 0.10;
    SplitSizes train_split{40, 10, 10};
    SplitSizes test_split{60, 20, 20};

    /// Copies `seed` into the stage configs that consume randomness.
    void propagate_seed();
    void validate() const;
};

/// Applies keys present in a flat JSON object onto `cfg`; unknown keys are
/// rejected so typos fail loudly.
void apply_config_json(RunConfig& cfg, std::string_view text);
std::string config_to_json(const RunConfig& cfg);

}  // namespace homeguard::cli
