#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "homeguard/detector.hpp"
#include "homeguard/event.hpp"
#include "homeguard/simgen.hpp"
#include "homeguard/trainer.hpp"
#include "run_config.hpp"

namespace homeguard::cli {

struct ActivityRun {
    std::string name;
    ActivityPattern pattern;
    std::vector<ActivityInstance> train_set;
    std::vector<ActivityInstance> test_set;
    ScoreModel model;
    EvaluationReport report;
};

struct PipelineResult {
    std::vector<Event> log;
    std::vector<ActivityInstance> segments;
    std::vector<ActivityPattern> patterns;
    std::vector<ActivityRun> activities;

    std::vector<ScoreModel> models() const;
    std::vector<EvaluationReport> reports() const;
};

/// simulate -> ingest -> segment -> mine -> augment -> forge -> train -> evaluate.
///
/// Each activity's collected instances are shuffled and halved; the first
/// half feeds mining, augmentation, forging and training, the second half
/// only the test set.
PipelineResult run_pipeline(const RunConfig& cfg, const std::vector<ActivitySpec>& specs = builtin_specs());

/// File-system safe lower-case name ("Come back home" -> "come-back-home").
std::string slug(std::string_view name);

/// Writes log.csv, segments.json, patterns.json, models.json,
/// train-<slug>.json, test-<slug>.json, report.txt and report.json.
void write_artifacts(const PipelineResult& result, const RunConfig& cfg, const std::filesystem::path& dir);

std::string pipeline_report_text(const PipelineResult& result);

}  // namespace homeguard::cli
