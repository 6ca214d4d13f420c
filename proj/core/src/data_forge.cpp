#include "homeguard/data_forge.hpp"

#include <cmath>
#include <numeric>

#include "homeguard/error.hpp"

namespace homeguard {

void ForgeConfig::validate() const {
    if (!(ti_multiplier > 1.0)) throw ConfigError("ti_multiplier must be > 1");
}

ActivityInstance smote_midpoint(const ActivityInstance& p_i, const ActivityInstance& p_j) {
    const auto& a = p_i.events();
    const auto& b = p_j.events();
    if (a.size() != b.size()) throw DataError("smote_midpoint: instances differ in length");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!(a[k].key == b[k].key)) throw DataError("smote_midpoint: key mismatch at " + std::to_string(k));

    const auto ia = intervals(p_i);
    const auto ib = intervals(p_j);
    std::vector<Event> events;
    events.reserve(a.size());
    events.push_back(a.front());
    TimestampMs t = a.front().timestamp_ms;
    for (std::size_t k = 0; k < ia.size(); ++k) {
        t += std::midpoint(ia[k], ib[k]);
        events.emplace_back(t, a[k + 1].key, a[k + 1].raw_value);
    }
    return ActivityInstance(std::move(events), Label::Normal,
                            "smote(" + p_i.source_id() + "," + p_j.source_id() + ")");
}

ActivityInstance delete_event(const ActivityInstance& x, std::size_t index) {
    if (x.size() < 2) throw DataError("delete_event: instance needs at least 2 events");
    if (index >= x.size()) throw std::out_of_range("delete_event: index out of range");
    std::vector<Event> events = x.events();
    events.erase(events.begin() + static_cast<std::ptrdiff_t>(index));
    return ActivityInstance(std::move(events), Label::AnomalySeq,
                            x.source_id() + ":del" + std::to_string(index));
}

ActivityInstance stretch_interval(const ActivityInstance& x, std::size_t index, double multiplier) {
    if (x.size() < 2) throw DataError("stretch_interval: instance needs at least 2 events");
    if (index + 1 >= x.size()) throw std::out_of_range("stretch_interval: index out of range");
    const auto iv = intervals(x);
    const auto stretched = static_cast<DurationMs>(std::llround(static_cast<double>(iv[index]) * multiplier));
    const DurationMs shift = stretched - iv[index];
    std::vector<Event> events = x.events();
    for (std::size_t k = index + 1; k < events.size(); ++k) events[k].timestamp_ms += shift;
    return ActivityInstance(std::move(events), Label::AnomalyTi,
                            x.source_id() + ":ti" + std::to_string(index));
}

ActivityInstance make_anomaly_seq(const ActivityInstance& x, Rng& rng) {
    if (x.size() < 2) throw DataError("make_anomaly_seq: instance needs at least 2 events");
    return delete_event(x, rng.index(x.size()));
}

ActivityInstance make_anomaly_ti(const ActivityInstance& x, const ForgeConfig& cfg, Rng& rng) {
    cfg.validate();
    if (x.size() < 2) throw DataError("make_anomaly_ti: instance needs at least 2 events");
    return stretch_interval(x, rng.index(x.size() - 1), cfg.ti_multiplier);
}

std::vector<ActivityInstance> augment_normals(std::span<const ActivityInstance> pool, std::size_t target_count,
                                              Rng& rng) {
    std::vector<ActivityInstance> out;
    if (target_count == 0) return out;
    if (pool.size() < 2) throw DataError("augment_normals: need at least two pool instances to interpolate");
    const auto keys = pool.front().keys();
    for (const auto& p : pool)
        if (p.keys() != keys) throw DataError("augment_normals: pool mixes key sequences");

    out.reserve(target_count);
    while (out.size() < target_count) {
        const std::size_t i = rng.index(pool.size());
        std::size_t j = rng.index(pool.size() - 1);
        if (j >= i) ++j;
        out.push_back(smote_midpoint(pool[i], pool[j]));
    }
    return out;
}

}  // namespace homeguard
