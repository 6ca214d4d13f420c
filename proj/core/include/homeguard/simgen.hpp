#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homeguard/event.hpp"

namespace homeguard {

struct ActivityStep {
    EventKey key;
    /// Gap from the previous step; unset for the first step only.
    std::optional<DurationMs> base_interval_ms;
    /// Set when the event is an automation-rule consequence.
    bool automated = false;
};

struct ActivitySpec {
    std::string name;
    std::vector<ActivityStep> steps;
    double noise_sigma_frac = 0.10;

    void validate() const;
    std::vector<EventKey> keys() const;
};

struct SimConfig {
    std::uint64_t seed = 42;
    std::size_t instances_per_activity = 50;
    DurationMs inter_instance_gap_ms = 600'000;
    TimestampMs start_ms = 1'633'093'200'000;  ///< 2021-10-01T13:00:00Z

    /// Throws ConfigError for zero instances or a gap not above ingest_gap_ms.
    void validate(DurationMs ingest_gap_ms = 120'000) const;
};

/// The three testbed activities: "Come back home", "Use toilet",
/// "Go to work". Automation consequences follow their trigger by 1 s;
/// human-step gaps are generator defaults, not measured values.
std::vector<ActivitySpec> builtin_specs();

/// Emits instances_per_activity runs of each spec in turn, with
/// multiplicative gaussian jitter on every interval (clamped to >= 1 ms).
std::vector<Event> generate(const std::vector<ActivitySpec>& specs, const SimConfig& cfg = {});

}  // namespace homeguard
