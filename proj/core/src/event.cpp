#include "homeguard/event.hpp"

#include <algorithm>
#include <stdexcept>

#include "homeguard/error.hpp"

namespace homeguard {

EventKey::EventKey(std::string device, std::string attribute, std::string state)
    : device_(std::move(device)), attribute_(std::move(attribute)), state_(std::move(state)) {
    if (device_.empty() || attribute_.empty() || state_.empty())
        throw DataError("event key fields must be non-empty (got '" + str() + "')");
}

std::string EventKey::str() const { return device_ + "/" + attribute_ + "/" + state_; }

Event::Event(TimestampMs t, EventKey k, std::string raw)
    : timestamp_ms(t), key(std::move(k)), raw_value(std::move(raw)) {
    if (timestamp_ms < 0) throw DataError("negative timestamp " + std::to_string(timestamp_ms));
}

std::string_view to_string(Label label) noexcept {
    switch (label) {
        case Label::Normal: return "normal";
        case Label::AnomalySeq: return "anomaly_seq";
        case Label::AnomalyTi: return "anomaly_ti";
        case Label::Unlabeled: return "unlabeled";
    }
    return "unlabeled";
}

Label label_from_string(std::string_view name) {
    for (Label l : {Label::Normal, Label::AnomalySeq, Label::AnomalyTi, Label::Unlabeled})
        if (to_string(l) == name) return l;
    throw DataError("unknown label '" + std::string(name) + "'");
}

ActivityInstance::ActivityInstance(std::vector<Event> events, Label label, std::string source_id)
    : events_(std::move(events)), label_(label), source_id_(std::move(source_id)) {
    if (events_.empty()) throw DataError("activity instance must contain at least one event");
    for (std::size_t i = 1; i < events_.size(); ++i) {
        if (events_[i].timestamp_ms < events_[i - 1].timestamp_ms)
            throw DataError("activity instance timestamps decrease at event " + std::to_string(i));
    }
}

std::vector<EventKey> ActivityInstance::keys() const {
    std::vector<EventKey> out;
    out.reserve(events_.size());
    for (const auto& e : events_) out.push_back(e.key);
    return out;
}

ActivityInstance ActivityInstance::with_label(Label label) const {
    ActivityInstance copy = *this;
    copy.label_ = label;
    return copy;
}

ActivityInstance ActivityInstance::with_source(std::string source_id) const {
    ActivityInstance copy = *this;
    copy.source_id_ = std::move(source_id);
    return copy;
}

std::vector<DurationMs> intervals(const ActivityInstance& instance) {
    const auto& ev = instance.events();
    std::vector<DurationMs> out;
    out.reserve(ev.size() - 1);
    for (std::size_t i = 1; i < ev.size(); ++i)
        out.push_back(ev[i].timestamp_ms - ev[i - 1].timestamp_ms);
    return out;
}

ActivityPattern::ActivityPattern(std::string name, std::vector<EventKey> keys,
                                 std::vector<double> mean_intervals_ms, std::size_t support)
    : name_(std::move(name)),
      keys_(std::move(keys)),
      mean_intervals_ms_(std::move(mean_intervals_ms)),
      support_(support) {
    if (keys_.empty()) throw DataError("pattern '" + name_ + "' has no keys");
    if (mean_intervals_ms_.size() != keys_.size() - 1)
        throw DataError("pattern '" + name_ + "' needs " + std::to_string(keys_.size() - 1) +
                        " mean intervals, got " + std::to_string(mean_intervals_ms_.size()));
    if (support_ < 1) throw DataError("pattern '" + name_ + "' support must be >= 1");
    // Negated comparison also rejects NaN.
    if (!std::all_of(mean_intervals_ms_.begin(), mean_intervals_ms_.end(),
                     [](double d) { return d >= 0.0; }))
        throw DataError("pattern '" + name_ + "' has a negative mean interval");
}

ActivityPattern ActivityPattern::renamed(std::string name) const {
    ActivityPattern copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

}  // namespace homeguard
