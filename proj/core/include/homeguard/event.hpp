#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homeguard {

/// Milliseconds since the Unix epoch, UTC.
using TimestampMs = std::int64_t;
/// Non-negative elapsed time in milliseconds.
using DurationMs = std::int64_t;

/// Identity of a device event: which device, which attribute, which state.
/// Written E^state_attr(device) in the usual notation.
class EventKey {
public:
    EventKey(std::string device, std::string attribute, std::string state);

    const std::string& device() const noexcept { return device_; }
    const std::string& attribute() const noexcept { return attribute_; }
    const std::string& state() const noexcept { return state_; }

    /// "device/attribute/state"
    std::string str() const;

    friend bool operator==(const EventKey&, const EventKey&) = default;
    friend auto operator<=>(const EventKey&, const EventKey&) = default;

private:
    std::string device_;
    std::string attribute_;
    std::string state_;
};

struct Event {
    Event(TimestampMs timestamp_ms, EventKey key, std::string raw_value);

    TimestampMs timestamp_ms;
    EventKey key;
    std::string raw_value;

    friend bool operator==(const Event&, const Event&) = default;
};

enum class Label { Normal, AnomalySeq, AnomalyTi, Unlabeled };

std::string_view to_string(Label label) noexcept;
/// Inverse of to_string; throws DataError on an unknown name.
Label label_from_string(std::string_view name);
inline bool is_anomaly(Label label) noexcept {
    return label == Label::AnomalySeq || label == Label::AnomalyTi;
}

/// One contiguous run of events attributed to a single activity.
///
/// Events are non-empty and time-ordered on construction; equal
/// timestamps keep the order they were given in.
class ActivityInstance {
public:
    ActivityInstance(std::vector<Event> events, Label label = Label::Unlabeled,
                     std::string source_id = {});

    const std::vector<Event>& events() const noexcept { return events_; }
    Label label() const noexcept { return label_; }
    const std::string& source_id() const noexcept { return source_id_; }
    std::size_t size() const noexcept { return events_.size(); }

    std::vector<EventKey> keys() const;

    ActivityInstance with_label(Label label) const;
    ActivityInstance with_source(std::string source_id) const;

    friend bool operator==(const ActivityInstance&, const ActivityInstance&) = default;

private:
    std::vector<Event> events_;
    Label label_;
    std::string source_id_;
};

/// Gaps between consecutive events; empty for a single-event instance.
std::vector<DurationMs> intervals(const ActivityInstance& instance);

/// Ground-truth pattern: a frequent key sequence and the mean gap between
/// each adjacent pair of its events.
class ActivityPattern {
public:
    ActivityPattern(std::string name, std::vector<EventKey> keys,
                    std::vector<double> mean_intervals_ms, std::size_t support);

    const std::string& name() const noexcept { return name_; }
    const std::vector<EventKey>& keys() const noexcept { return keys_; }
    const std::vector<double>& mean_intervals_ms() const noexcept { return mean_intervals_ms_; }
    std::size_t support() const noexcept { return support_; }
    std::size_t size() const noexcept { return keys_.size(); }

    ActivityPattern renamed(std::string name) const;

    friend bool operator==(const ActivityPattern&, const ActivityPattern&) = default;

private:
    std::string name_;
    std::vector<EventKey> keys_;
    std::vector<double> mean_intervals_ms_;
    std::size_t support_;
};

}  // namespace homeguard
