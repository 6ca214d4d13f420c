#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "homeguard/error.hpp"
#include "homeguard/log_ingest.hpp"
#include "homeguard/simgen.hpp"

namespace homeguard {
namespace {

TEST(BuiltinSpecs, ThreeActivities) {
    const auto specs = builtin_specs();
    ASSERT_EQ(specs.size(), 3u);
    EXPECT_EQ(specs[0].name, "Come back home");
    EXPECT_EQ(specs[1].name, "Use toilet");
    EXPECT_EQ(specs[2].name, "Go to work");
    for (const auto& s : specs) EXPECT_NO_THROW(s.validate());
}

TEST(BuiltinSpecs, DevicesFollowTheTestbed) {
    const std::vector<std::set<std::string>> allowed{
        {"M2", "C1", "L1", "M1", "L2"}, {"M5", "C5", "L5", "V"}, {"C2", "M4", "L4", "M3", "L3"}};
    const auto specs = builtin_specs();
    for (std::size_t a = 0; a < specs.size(); ++a)
        for (const auto& step : specs[a].steps) EXPECT_TRUE(allowed[a].count(step.key.device())) << step.key.str();
}

TEST(BuiltinSpecs, ComeBackHomeSequence) {
    const auto keys = builtin_specs()[0].keys();
    const std::vector<EventKey> expected{{"C1", "contact", "open"}, {"M2", "motion", "active"},
                                         {"L1", "switch", "on"},    {"C1", "contact", "closed"},
                                         {"M1", "motion", "active"}, {"L2", "switch", "on"}};
    EXPECT_EQ(keys, expected);
}

TEST(BuiltinSpecs, AutomationFollowsItsTrigger) {
    // trigger -> consequence pairs from the automation rules
    const std::vector<std::pair<EventKey, EventKey>> rules{
        {{"M2", "motion", "active"}, {"L1", "switch", "on"}},
        {{"M1", "motion", "active"}, {"L2", "switch", "on"}},
        {{"M5", "motion", "active"}, {"L5", "switch", "on"}},
        {{"C5", "contact", "closed"}, {"V", "switch", "on"}},
        {{"C2", "contact", "open"}, {"L4", "switch", "on"}},
        {{"M3", "motion", "active"}, {"L3", "switch", "on"}},
    };
    SimConfig cfg;
    cfg.instances_per_activity = 20;
    for (const auto& inst : segment(generate(builtin_specs(), cfg))) {
        const auto keys = inst.keys();
        for (const auto& [trigger, consequence] : rules) {
            const auto c = std::find(keys.begin(), keys.end(), consequence);
            if (c == keys.end()) continue;
            const auto t = std::find(keys.begin(), keys.end(), trigger);
            ASSERT_NE(t, keys.end());
            EXPECT_LT(t - keys.begin(), c - keys.begin());
            const auto ti = static_cast<std::size_t>(t - keys.begin()), ci = static_cast<std::size_t>(c - keys.begin());
            EXPECT_LT(inst.events()[ti].timestamp_ms, inst.events()[ci].timestamp_ms);
        }
    }
}

TEST(Generate, ZeroNoiseRepeatsBaseIntervals) {
    auto specs = builtin_specs();
    specs.resize(1);
    specs[0].noise_sigma_frac = 0.0;
    SimConfig cfg;
    cfg.instances_per_activity = 2;
    const auto segs = segment(generate(specs, cfg));
    ASSERT_EQ(segs.size(), 2u);
    EXPECT_EQ(intervals(segs[0]), intervals(segs[1]));
    EXPECT_EQ(intervals(segs[0]), (std::vector<DurationMs>{3000, 1000, 4000, 6000, 1000}));
}

TEST(Generate, SameSeedSameBytes) {
    SimConfig cfg;
    EXPECT_EQ(serialize_log(generate(builtin_specs(), cfg)), serialize_log(generate(builtin_specs(), cfg)));
    SimConfig other = cfg;
    other.seed = 43;
    EXPECT_NE(serialize_log(generate(builtin_specs(), cfg)), serialize_log(generate(builtin_specs(), other)));
}

TEST(Generate, DefaultRunSegmentsIntoFiftyPerActivity) {
    const auto specs = builtin_specs();
    const auto segs = segment(generate(specs, {}));
    ASSERT_EQ(segs.size(), 150u);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        EXPECT_EQ(segs[i].keys(), specs[i / 50].keys());
        for (auto d : intervals(segs[i])) EXPECT_GT(d, 0);
    }
}

TEST(Generate, RoundTripsThroughCsv) {
    const auto log = generate(builtin_specs(), {});
    EXPECT_EQ(parse_log(serialize_log(log)), log);
    EXPECT_EQ(parse_log_jsonl(serialize_log_jsonl(log)), log);
}

TEST(SimConfig, Validates) {
    SimConfig cfg;
    cfg.instances_per_activity = 0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = {};
    cfg.inter_instance_gap_ms = 60'000;
    EXPECT_THROW(cfg.validate(120'000), ConfigError);
}

TEST(ActivitySpec, Validates) {
    ActivitySpec bad{"x", {{EventKey("A", "contact", "open"), 1000, false}}};
    EXPECT_THROW(bad.validate(), ConfigError);
    ActivitySpec empty{"y", {}};
    EXPECT_THROW(empty.validate(), ConfigError);
}

}  // namespace
}  // namespace homeguard
