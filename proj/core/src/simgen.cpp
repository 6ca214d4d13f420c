#include "homeguard/simgen.hpp"

#include <algorithm>
#include <cmath>

#include "homeguard/error.hpp"
#include "homeguard/random.hpp"

namespace homeguard {

void ActivitySpec::validate() const {
    if (steps.empty()) throw ConfigError("activity '" + name + "' has no steps");
    if (steps.front().base_interval_ms) throw ConfigError("activity '" + name + "': first step takes no interval");
    for (std::size_t i = 1; i < steps.size(); ++i)
        if (!steps[i].base_interval_ms || *steps[i].base_interval_ms <= 0)
            throw ConfigError("activity '" + name + "': step " + std::to_string(i) + " needs a positive interval");
    if (!(noise_sigma_frac >= 0.0)) throw ConfigError("activity '" + name + "': noise_sigma_frac must be >= 0");
}

std::vector<EventKey> ActivitySpec::keys() const {
    std::vector<EventKey> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.key);
    return out;
}

void SimConfig::validate(DurationMs ingest_gap_ms) const {
    if (instances_per_activity < 1) throw ConfigError("instances_per_activity must be >= 1");
    if (inter_instance_gap_ms <= ingest_gap_ms)
        throw ConfigError("inter_instance_gap_ms must exceed the ingest gap threshold");
    if (start_ms < 0) throw ConfigError("start_ms must be >= 0");
}

namespace {

constexpr DurationMs kAutomationLatencyMs = 1000;

ActivityStep human(std::string device, std::string attribute, std::string state, std::optional<DurationMs> gap) {
    return {EventKey(std::move(device), std::move(attribute), std::move(state)), gap, false};
}

ActivityStep automated(std::string device, std::string attribute, std::string state,
                       DurationMs gap = kAutomationLatencyMs) {
    return {EventKey(std::move(device), std::move(attribute), std::move(state)), gap, true};
}

}  // namespace

std::vector<ActivitySpec> builtin_specs() {
    std::vector<ActivitySpec> specs;

    // Opens and closes the front door, enters the kitchen.
    // M2 active -> L1 on, M1 active -> L2 on.
    specs.push_back({"Come back home",
                     {human("C1", "contact", "open", std::nullopt),
                      human("M2", "motion", "active", 3000),
                      automated("L1", "switch", "on"),
                      human("C1", "contact", "closed", 4000),
                      human("M1", "motion", "active", 6000),
                      automated("L2", "switch", "on")}});

    // Enters the bathroom, closes the door, uses the toilet, walks out.
    // M5 active -> L5 on, C5 closed -> V on; door open >20 s and no motion >20 s
    // -> L5 off, V off.
    specs.push_back({"Use toilet",
                     {human("C5", "contact", "open", std::nullopt),
                      human("M5", "motion", "active", 3000),
                      automated("L5", "switch", "on"),
                      human("C5", "contact", "closed", 4000),
                      automated("V", "switch", "on"),
                      human("C5", "contact", "open", 15000),
                      human("M5", "motion", "inactive", 5000),
                      automated("L5", "switch", "off", 20000 + kAutomationLatencyMs),
                      automated("V", "switch", "off")}});

    // Opens the study door, walks in, sits at the desk.
    // C2 open -> L4 on, M3 active -> L3 on.
    specs.push_back({"Go to work",
                     {human("C2", "contact", "open", std::nullopt),
                      automated("L4", "switch", "on"),
                      human("M4", "motion", "active", 4000),
                      human("M3", "motion", "active", 7000),
                      automated("L3", "switch", "on")}});
    return specs;
}

std::vector<Event> generate(const std::vector<ActivitySpec>& specs, const SimConfig& cfg) {
    cfg.validate(0);
    for (const auto& s : specs) s.validate();

    Rng rng(cfg.seed);
    std::vector<Event> log;
    TimestampMs t = cfg.start_ms;
    bool first_run = true;
    for (const auto& spec : specs) {
        for (std::size_t run = 0; run < cfg.instances_per_activity; ++run) {
            if (!first_run) t += cfg.inter_instance_gap_ms;
            first_run = false;
            for (const auto& step : spec.steps) {
                if (step.base_interval_ms) {
                    const double base = static_cast<double>(*step.base_interval_ms);
                    // Automation latency is fixed; only human steps jitter.
                    const double jitter =
                        !step.automated && spec.noise_sigma_frac > 0.0 ? rng.gaussian() * spec.noise_sigma_frac : 0.0;
                    t += std::max<DurationMs>(1, std::llround(base * (1.0 + jitter)));
                }
                log.emplace_back(t, step.key, step.key.state());
            }
        }
    }
    return log;
}

}  // namespace homeguard
