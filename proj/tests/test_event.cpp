#include <gtest/gtest.h>

#include <numeric>

#include "homeguard/error.hpp"
#include "homeguard/event.hpp"
#include "homeguard/log_ingest.hpp"
#include "homeguard/random.hpp"
#include "test_support.hpp"

namespace homeguard {
namespace {

using test::instance;
using test::key;
using test::letters;

TEST(EventKey, RejectsEmptyFields) {
    EXPECT_THROW(EventKey("", "motion", "active"), DataError);
    EXPECT_THROW(EventKey("M1", "", "active"), DataError);
    EXPECT_THROW(EventKey("M1", "motion", ""), DataError);
}

TEST(EventKey, StateIsPartOfIdentity) {
    EXPECT_EQ(EventKey("M1", "motion", "active"), EventKey("M1", "motion", "active"));
    EXPECT_NE(EventKey("M1", "motion", "active"), EventKey("M1", "motion", "inactive"));
}

TEST(Event, RejectsNegativeTimestamp) { EXPECT_THROW(Event(-1, key("C1"), "open"), DataError); }

TEST(ActivityInstance, RequiresEventsInTimeOrder) {
    EXPECT_THROW(ActivityInstance({}), DataError);
    std::vector<Event> backwards{Event(10, key("A"), "open"), Event(5, key("B"), "open")};
    EXPECT_THROW(ActivityInstance{backwards}, DataError);
    std::vector<Event> tied{Event(5, key("A"), "open"), Event(5, key("B"), "open")};
    EXPECT_NO_THROW(ActivityInstance{tied});
}

TEST(Intervals, SubtractsConsecutiveTimestamps) {
    const auto x = instance(letters("ABC"), {10000, 20000}, Label::Normal, 0);
    EXPECT_EQ(intervals(x), (std::vector<DurationMs>{10000, 20000}));
}

TEST(Intervals, SingleEventHasNone) {
    EXPECT_TRUE(intervals(instance(letters("A"), {})).empty());
}

TEST(Intervals, LogRowsAtSecondResolution) {
    // 13:00:01, 13:00:02, 13:01:00
    std::vector<Event> ev{Event(parse_timestamp("10/1/2021 13:00:01"), key("motionSensor", "motion", "active"), "active"),
                          Event(parse_timestamp("10/1/2021 13:00:02"), key("light", "switch", "on"), "on"),
                          Event(parse_timestamp("10/1/2021 13:01:00"), key("light", "switch", "off"), "off")};
    EXPECT_EQ(intervals(ActivityInstance(ev)), (std::vector<DurationMs>{1000, 58000}));
}

TEST(Intervals, SumTelescopesAndIgnoresTranslation) {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.index(12);
        std::vector<DurationMs> gaps;
        for (std::size_t i = 1; i < n; ++i) gaps.push_back(static_cast<DurationMs>(rng.index(100000)));
        const std::string names = std::string("ABCDEFGHIJKL").substr(0, n);
        const auto x = instance(letters(names), gaps, Label::Normal, 5000);
        const auto y = instance(letters(names), gaps, Label::Normal, 5000 + static_cast<TimestampMs>(rng.index(1u << 30)));
        const auto iv = intervals(x);
        ASSERT_EQ(iv.size(), n - 1);
        EXPECT_EQ(std::accumulate(iv.begin(), iv.end(), DurationMs{0}),
                  x.events().back().timestamp_ms - x.events().front().timestamp_ms);
        EXPECT_EQ(iv, intervals(y));
    }
}

TEST(ActivityPattern, EnforcesShape) {
    EXPECT_THROW(ActivityPattern("p", {}, {}, 1), DataError);
    EXPECT_THROW(ActivityPattern("p", letters("AB"), {}, 1), DataError);
    EXPECT_THROW(ActivityPattern("p", letters("AB"), {-1.0}, 1), DataError);
    EXPECT_THROW(ActivityPattern("p", letters("AB"), {1.0}, 0), DataError);
    EXPECT_NO_THROW(ActivityPattern("p", letters("A"), {}, 1));
}

TEST(Label, NamesRoundTrip) {
    for (Label l : {Label::Normal, Label::AnomalySeq, Label::AnomalyTi, Label::Unlabeled})
        EXPECT_EQ(label_from_string(to_string(l)), l);
    EXPECT_THROW(label_from_string("weird"), DataError);
}

TEST(Rng, SameSeedSameStream) {
    Rng a(99), b(99);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(a.index(17), b.index(17));
        EXPECT_EQ(a.gaussian(), b.gaussian());
    }
}

TEST(Rng, IndexStaysInRange) {
    Rng rng(3);
    std::vector<int> seen(5, 0);
    for (int i = 0; i < 5000; ++i) ++seen.at(rng.index(5));
    for (int c : seen) EXPECT_GT(c, 800);
    EXPECT_THROW(rng.index(0), std::invalid_argument);
}

}  // namespace
}  // namespace homeguard
