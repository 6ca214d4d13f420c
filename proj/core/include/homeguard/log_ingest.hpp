#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "homeguard/event.hpp"

namespace homeguard {

enum class TimestampFormat {
    EpochMillis,  ///< "1633093201000"
    Iso8601,      ///< "2021-10-01T13:00:01Z", optional ".mmm" and "+hh:mm"
    UsDateTime,   ///< "10/1/2021 13:00:01", read as UTC
};

struct IngestConfig {
    DurationMs gap_ms = 120'000;
    std::vector<TimestampFormat> timestamp_formats = {
        TimestampFormat::EpochMillis, TimestampFormat::Iso8601, TimestampFormat::UsDateTime};
    std::size_t min_segment_len = 2;

    /// Throws ConfigError if gap_ms <= 0 or min_segment_len == 0.
    void validate() const;
};

/// Parses one timestamp token using the first matching format.
/// Throws ParseError naming the token when nothing matches.
TimestampMs parse_timestamp(std::string_view token,
                            const std::vector<TimestampFormat>& formats = IngestConfig{}.timestamp_formats);

/// "2021-10-01T13:00:01.000Z"
std::string format_timestamp(TimestampMs t);

/// Parses a CSV event log.
///
/// The header must be `timestamp,device,attribute,value` or the legacy
/// `timestamp,device,value`; in the legacy form the attribute is inferred
/// from the value (active/inactive -> motion, open/closed -> contact,
/// on/off -> switch, anything else -> state). Rows are returned sorted by
/// timestamp, stable with respect to file order.
std::vector<Event> parse_log(std::string_view text, const IngestConfig& cfg = {});

/// Writes events in the 4-column CSV form read by parse_log.
std::string serialize_log(const std::vector<Event>& events);

/// JSON-lines twin of the CSV form: one
/// {"timestamp","device","attribute","value"} object per line.
std::vector<Event> parse_log_jsonl(std::string_view text, const IngestConfig& cfg = {});
std::string serialize_log_jsonl(const std::vector<Event>& events);

/// Splits a time-ordered event list wherever the gap to the previous event
/// reaches cfg.gap_ms. Segments shorter than cfg.min_segment_len are dropped.
std::vector<ActivityInstance> segment(const std::vector<Event>& events, const IngestConfig& cfg = {});

}  // namespace homeguard
