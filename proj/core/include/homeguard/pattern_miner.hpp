#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "homeguard/event.hpp"

namespace homeguard {

struct MinerConfig {
    std::size_t min_support = 5;
    std::size_t min_len = 2;

    void validate() const;
};

/// Optional names for known key sequences; unmatched patterns get
/// "pattern-<rank>".
using PatternLabels = std::map<std::vector<EventKey>, std::string>;

struct MiningResult {
    std::vector<ActivityPattern> patterns;
    /// Events dropped because their state was numeric.
    std::size_t numeric_events_ignored = 0;
};

/// True when a state string reads as a number ("56.0", "-3", "1e2").
bool is_numeric_state(std::string_view state);

/// Groups instances by exact key sequence and averages each frequent
/// group's intervals. Result is ordered by support descending, then by key
/// sequence, so input order never matters.
MiningResult mine(std::span<const ActivityInstance> instances, const MinerConfig& cfg = {},
                  const PatternLabels& labels = {});

inline std::vector<ActivityPattern> mine_patterns(std::span<const ActivityInstance> instances,
                                                  const MinerConfig& cfg = {},
                                                  const PatternLabels& labels = {}) {
    return mine(instances, cfg, labels).patterns;
}

/// Builds the ground-truth pattern of a homogeneous group. Throws DataError
/// ("mismatch at <i>") when key sequences differ.
ActivityPattern build_pattern(std::string name, std::span<const ActivityInstance> group);

}  // namespace homeguard
