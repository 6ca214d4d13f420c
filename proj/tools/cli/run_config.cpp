#include "run_config.hpp"

#include <cmath>

#include <json.hpp>

#include "homeguard/error.hpp"

namespace homeguard::cli {

using nlohmann::json;

void RunConfig::propagate_seed() {
    sim.seed = seed;
    // Distinct stream for splitting/forging so it does not replay the generator's draws.
    forge.seed = seed + 1;
}

void RunConfig::validate() const {
    ingest.validate();
    miner.validate();
    forge.validate();
    train.validate();
    sim.validate(ingest.gap_ms);
    if (!(noise_sigma_frac >= 0.0)) throw ConfigError("noise_sigma_frac must be >= 0");
    if (train_split.normal == 0 || test_split.normal == 0) throw ConfigError("splits need at least one normal");
}

namespace {

DurationMs seconds_to_ms(double s) { return static_cast<DurationMs>(std::llround(s * 1000.0)); }

}  // namespace

void apply_config_json(RunConfig& cfg, std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("config file: ") + e.what());
    }
    if (!doc.is_object()) throw DataError("config file: expected a JSON object");
    try {
        for (const auto& [key, v] : doc.items()) {
            if (key == "seed") cfg.seed = v.get<std::uint64_t>();
            else if (key == "gap_seconds") cfg.ingest.gap_ms = seconds_to_ms(v.get<double>());
            else if (key == "min_segment_len") cfg.ingest.min_segment_len = v.get<std::size_t>();
            else if (key == "min_support") cfg.miner.min_support = v.get<std::size_t>();
            else if (key == "min_len") cfg.miner.min_len = v.get<std::size_t>();
            else if (key == "ti_multiplier") cfg.forge.ti_multiplier = v.get<double>();
            else if (key == "alpha_min") cfg.train.alpha_min = v.get<double>();
            else if (key == "alpha_max") cfg.train.alpha_max = v.get<double>();
            else if (key == "alpha_step") cfg.train.alpha_step = v.get<double>();
            else if (key == "boundary_epsilon") cfg.train.boundary_epsilon = v.get<double>();
            else if (key == "instances_per_activity") cfg.sim.instances_per_activity = v.get<std::size_t>();
            else if (key == "inter_instance_gap_seconds") cfg.sim.inter_instance_gap_ms = seconds_to_ms(v.get<double>());
            else if (key == "noise_sigma_frac") cfg.noise_sigma_frac = v.get<double>();
            else if (key == "train_normal") cfg.train_split.normal = v.get<std::size_t>();
            else if (key == "train_seq") cfg.train_split.anomaly_seq = v.get<std::size_t>();
            else if (key == "train_ti") cfg.train_split.anomaly_ti = v.get<std::size_t>();
            else if (key == "test_normal") cfg.test_split.normal = v.get<std::size_t>();
            else if (key == "test_seq") cfg.test_split.anomaly_seq = v.get<std::size_t>();
            else if (key == "test_ti") cfg.test_split.anomaly_ti = v.get<std::size_t>();
            else throw DataError("config file: unknown key '" + key + "'");
        }
    } catch (const json::exception& e) {
        throw DataError(std::string("config file: ") + e.what());
    }
}

std::string config_to_json(const RunConfig& cfg) {
    nlohmann::ordered_json j = {
        {"seed", cfg.seed},
        {"gap_seconds", static_cast<double>(cfg.ingest.gap_ms) / 1000.0},
        {"min_segment_len", cfg.ingest.min_segment_len},
        {"min_support", cfg.miner.min_support},
        {"min_len", cfg.miner.min_len},
        {"ti_multiplier", cfg.forge.ti_multiplier},
        {"alpha_min", cfg.train.alpha_min},
        {"alpha_max", cfg.train.alpha_max},
        {"alpha_step", cfg.train.alpha_step},
        {"boundary_epsilon", cfg.train.boundary_epsilon},
        {"instances_per_activity", cfg.sim.instances_per_activity},
        {"inter_instance_gap_seconds", static_cast<double>(cfg.sim.inter_instance_gap_ms) / 1000.0},
        {"noise_sigma_frac", cfg.noise_sigma_frac},
        {"train_normal", cfg.train_split.normal},
        {"train_seq", cfg.train_split.anomaly_seq},
        {"train_ti", cfg.train_split.anomaly_ti},
        {"test_normal", cfg.test_split.normal},
        {"test_seq", cfg.test_split.anomaly_seq},
        {"test_ti", cfg.test_split.anomaly_ti},
    };
    return j.dump(2) + "\n";
}

}  // namespace homeguard::cli
