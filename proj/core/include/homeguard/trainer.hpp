#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "homeguard/event.hpp"

namespace homeguard {

/// Accepted score section for one activity: normal iff lo <= score <= hi.
struct ScoreModel {
    std::string activity;
    double alpha = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double training_accuracy = 0.0;

    bool accepts(double total) const noexcept { return lo <= total && total <= hi; }

    friend bool operator==(const ScoreModel&, const ScoreModel&) = default;
};

struct TrainConfig {
    double alpha_min = 0.0;
    double alpha_max = 5.0;
    double alpha_step = 0.1;
    double boundary_epsilon = 1e-9;

    void validate() const;
    /// alpha_min + k * alpha_step for k = 0 .. floor((max - min) / step).
    std::vector<double> alpha_grid() const;
};

struct ScoredRow {
    Label label;
    double score;
};

/// Scores every labeled instance at `alpha`. Throws DataError on an
/// unlabeled instance or an empty set.
std::vector<ScoredRow> score_table(const ActivityPattern& pattern,
                                   std::span<const ActivityInstance> labeled, double alpha);

struct ScoreInterval {
    double lo = 0.0;
    double hi = 0.0;
    double accuracy = 0.0;
};

/// Fraction of rows classified correctly by the closed interval [lo, hi].
double interval_accuracy(std::span<const ScoredRow> rows, double lo, double hi);

/// Best closed interval [s_a - eps, s_b + eps] over distinct observed
/// scores s_a <= s_b. Ties: widest, then smallest lo.
ScoreInterval best_interval(std::span<const ScoredRow> rows, double boundary_epsilon = 1e-9);

/// Sweeps the alpha grid; keeps the most accurate (alpha, interval), ties
/// going to the smaller alpha and then the wider interval.
ScoreModel train(const ActivityPattern& pattern, std::span<const ActivityInstance> labeled,
                 const TrainConfig& cfg = {});

}  // namespace homeguard
