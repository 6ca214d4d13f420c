#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homeguard/detector.hpp"
#include "homeguard/event.hpp"
#include "homeguard/trainer.hpp"

/// JSON file formats. Readers throw DataError on malformed documents.
namespace homeguard::io {

std::string patterns_to_json(std::span<const ActivityPattern> patterns);
std::vector<ActivityPattern> patterns_from_json(std::string_view text);

/// A single model serializes as an object; a list as an array of them.
std::string model_to_json(const ScoreModel& model);
std::string models_to_json(std::span<const ScoreModel> models);
/// Accepts either an object or an array.
std::vector<ScoreModel> models_from_json(std::string_view text);

std::string instances_to_json(std::span<const ActivityInstance> instances);
std::vector<ActivityInstance> instances_from_json(std::string_view text);

/// {"activity", "rows": [...], "total": {...}, "accuracy", "confusion"}
std::string report_to_json(const EvaluationReport& report);
/// {"reports": [...]} for multi-activity runs.
std::string reports_to_json(std::span<const EvaluationReport> reports);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace homeguard::io
