#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "homeguard/event.hpp"
#include "homeguard/random.hpp"

namespace homeguard {

struct ForgeConfig {
    std::uint64_t seed = 42;
    double ti_multiplier = 50.0;

    /// Throws ConfigError unless ti_multiplier > 1.
    void validate() const;
};

/// Midpoint oversampling of two instances with the same key sequence:
/// intervals become p_i + 0.5 * (p_j - p_i), rounded toward p_i at ms
/// resolution. Starts at p_i's first timestamp.
ActivityInstance smote_midpoint(const ActivityInstance& p_i, const ActivityInstance& p_j);

/// Removes the event at `index`; surviving timestamps are untouched.
ActivityInstance delete_event(const ActivityInstance& x, std::size_t index);
/// Multiplies interval `index` and shifts every later event by the growth.
ActivityInstance stretch_interval(const ActivityInstance& x, std::size_t index, double multiplier);

/// Anomaly(seq): one uniformly chosen event deleted.
ActivityInstance make_anomaly_seq(const ActivityInstance& x, Rng& rng);
/// Anomaly(ti): one uniformly chosen interval stretched by cfg.ti_multiplier.
ActivityInstance make_anomaly_ti(const ActivityInstance& x, const ForgeConfig& cfg, Rng& rng);

/// target_count midpoints of random distinct pool pairs.
std::vector<ActivityInstance> augment_normals(std::span<const ActivityInstance> pool,
                                              std::size_t target_count, Rng& rng);

}  // namespace homeguard
