#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "homeguard/event.hpp"

namespace homeguard {

/// Order-preserving correspondence between pattern and instance events.
struct Alignment {
    struct Pair {
        std::size_t pattern_index;
        std::size_t instance_index;
        friend bool operator==(const Pair&, const Pair&) = default;
    };
    std::vector<Pair> pairs;

    std::size_t matched() const noexcept { return pairs.size(); }
};

/// Longest common subsequence of the two key lists. Among maximal
/// alignments the one with the lexicographically smallest pattern-index
/// sequence is returned, each pattern index paired with its earliest
/// admissible instance index.
Alignment align(std::span<const EventKey> pattern, std::span<const EventKey> instance);
Alignment align(const ActivityPattern& pattern, const ActivityInstance& instance);

struct MergedIntervals {
    std::vector<double> test;     ///< ti_t
    std::vector<double> pattern;  ///< ti_g', pattern means summed across gaps
};

/// Interval vectors between consecutive matched events. Pattern means
/// spanning skipped pattern events are summed, as are instance intervals
/// spanning unmatched instance events.
MergedIntervals merged_intervals(const ActivityPattern& pattern, const ActivityInstance& instance,
                                 const Alignment& alignment);

/// Angle between two equal-length vectors, arccos(u.v / (|u| |v|)), in [0, pi].
/// Both empty or both zero -> 0; exactly one zero -> pi/2.
/// Throws std::invalid_argument on length mismatch.
double angle(std::span<const double> u, std::span<const double> v);

struct ScoreBreakdown {
    double score_n = 0.0;  ///< matched / pattern length
    double score_c = 0.0;  ///< 1 - theta / pi
    double theta_rad = 0.0;
    double total = 0.0;
    std::size_t matched = 0;
    std::size_t unmatched_test_events = 0;

    /// score_n + alpha * score_c, for re-weighting without re-aligning.
    double total_at(double alpha) const noexcept { return score_n + alpha * score_c; }
};

/// score = score_n + alpha * score_c.
///
/// score_c is 1 for a fully-matched single-key pattern and 0 when a
/// multi-key pattern has fewer than two matched events.
ScoreBreakdown score(const ActivityPattern& pattern, const ActivityInstance& instance, double alpha);

}  // namespace homeguard
