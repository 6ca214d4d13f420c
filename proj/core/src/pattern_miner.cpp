#include "homeguard/pattern_miner.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>

#include "homeguard/error.hpp"

namespace homeguard {

void MinerConfig::validate() const {
    if (min_support < 1) throw ConfigError("min_support must be >= 1");
    if (min_len < 1) throw ConfigError("min_len must be >= 1");
}

bool is_numeric_state(std::string_view state) {
    if (state.empty()) return false;
    const std::string s(state);
    char* end = nullptr;
    errno = 0;
    std::strtod(s.c_str(), &end);
    // strtod accepts "inf"/"nan"; those are never device states worth excluding.
    const bool alpha_only = std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c); });
    return end == s.c_str() + s.size() && !alpha_only;
}

ActivityPattern build_pattern(std::string name, std::span<const ActivityInstance> group) {
    if (group.empty()) throw DataError("build_pattern: empty group for '" + name + "'");
    const auto keys = group.front().keys();
    const std::size_t n = keys.size();
    for (const auto& inst : group) {
        const auto& ev = inst.events();
        const std::size_t common = std::min(n, ev.size());
        for (std::size_t i = 0; i < common; ++i)
            if (!(ev[i].key == keys[i])) throw DataError("heterogeneous key sequences: mismatch at " + std::to_string(i));
        if (ev.size() != n) throw DataError("heterogeneous key sequences: mismatch at " + std::to_string(common));
    }

    // Integer sums keep the mean independent of group order.
    std::vector<DurationMs> sums(n - 1, 0);
    for (const auto& inst : group) {
        const auto iv = intervals(inst);
        for (std::size_t i = 0; i < iv.size(); ++i) sums[i] += iv[i];
    }
    std::vector<double> means(n - 1);
    const auto count = static_cast<double>(group.size());
    for (std::size_t i = 0; i < sums.size(); ++i) means[i] = static_cast<double>(sums[i]) / count;
    return ActivityPattern(std::move(name), keys, std::move(means), group.size());
}

MiningResult mine(std::span<const ActivityInstance> instances, const MinerConfig& cfg,
                  const PatternLabels& labels) {
    cfg.validate();
    MiningResult result;

    std::map<std::vector<EventKey>, std::vector<ActivityInstance>> groups;
    for (const auto& inst : instances) {
        std::vector<Event> kept;
        kept.reserve(inst.size());
        for (const auto& e : inst.events()) {
            if (is_numeric_state(e.key.state()))
                ++result.numeric_events_ignored;
            else
                kept.push_back(e);
        }
        if (kept.empty()) continue;
        ActivityInstance cleaned(std::move(kept), inst.label(), inst.source_id());
        auto keys = cleaned.keys();
        groups[std::move(keys)].push_back(std::move(cleaned));
    }

    std::vector<std::pair<const std::vector<EventKey>*, const std::vector<ActivityInstance>*>> frequent;
    for (const auto& [keys, members] : groups)
        if (members.size() >= cfg.min_support && keys.size() >= cfg.min_len) frequent.emplace_back(&keys, &members);
    // Map iteration already orders by key sequence; stable sort keeps that as the tie-break.
    std::stable_sort(frequent.begin(), frequent.end(),
                     [](const auto& a, const auto& b) { return a.second->size() > b.second->size(); });

    std::size_t rank = 0;
    for (const auto& [keys, members] : frequent) {
        ++rank;
        const auto label = labels.find(*keys);
        std::string name = label != labels.end() ? label->second : "pattern-" + std::to_string(rank);
        result.patterns.push_back(build_pattern(std::move(name), *members));
    }
    return result;
}

}  // namespace homeguard
