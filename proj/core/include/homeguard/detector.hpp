#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "homeguard/event.hpp"
#include "homeguard/scorer.hpp"
#include "homeguard/trainer.hpp"

namespace homeguard {

/// Counts with anomaly as the positive class.
struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fn = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;

    std::size_t total() const noexcept { return tp + fn + fp + tn; }
    /// (TP + TN) / total; 0 for an empty matrix.
    double accuracy() const noexcept;

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

enum class Classification { Normal, Anomaly };

struct Verdict {
    Classification classification;
    ScoreBreakdown breakdown;
    std::string pattern;
};

Verdict classify(const ScoreModel& model, const ActivityPattern& pattern, const ActivityInstance& instance);

/// Routes an instance to the pattern it covers best: highest matched/n,
/// then highest total at that pattern's model alpha (1 when no model is
/// given), then smallest name.
const ActivityPattern& select_pattern(std::span<const ActivityPattern> patterns,
                                      const ActivityInstance& instance,
                                      std::span<const ScoreModel> models = {});

/// One row of the per-class result table.
struct ClassRow {
    std::string name;  ///< "Anomaly(seq)", "Anomaly(ti)", "Normal", "Total"
    std::size_t amount = 0;
    std::size_t correct = 0;
    std::size_t wrong = 0;
    double accuracy = 0.0;

    friend bool operator==(const ClassRow&, const ClassRow&) = default;
};

struct EvaluationReport {
    std::string activity;
    ConfusionMatrix matrix;
    double accuracy = 0.0;
    std::vector<ClassRow> rows;  ///< per class, classes with no instances omitted
    ClassRow total;
};

EvaluationReport evaluate(const ScoreModel& model, const ActivityPattern& pattern,
                          std::span<const ActivityInstance> labeled);

/// Fixed-width table with Amount / TP+TN / FN+FP / Accuracy columns.
std::string format_report_text(const EvaluationReport& report);

}  // namespace homeguard
