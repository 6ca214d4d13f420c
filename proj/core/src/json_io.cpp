#include "homeguard/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "homeguard/error.hpp"

namespace homeguard::io {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string(what) + ": " + e.what());
    }
}

template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw DataError(std::string(what) + ": " + e.what());
    }
}

ordered key_json(const EventKey& k) {
    return {{"device", k.device()}, {"attribute", k.attribute()}, {"state", k.state()}};
}

EventKey key_from(const json& j) {
    return EventKey(j.at("device").get<std::string>(), j.at("attribute").get<std::string>(),
                    j.at("state").get<std::string>());
}

ordered pattern_json(const ActivityPattern& p) {
    ordered keys = ordered::array();
    for (const auto& k : p.keys()) keys.push_back(key_json(k));
    return {{"name", p.name()}, {"keys", keys}, {"mean_intervals_ms", p.mean_intervals_ms()}, {"support", p.support()}};
}

ordered model_json(const ScoreModel& m) {
    return {{"activity", m.activity},
            {"alpha", m.alpha},
            {"lo", m.lo},
            {"hi", m.hi},
            {"training_accuracy", m.training_accuracy}};
}

ScoreModel model_from(const json& j) {
    return ScoreModel{j.at("activity").get<std::string>(), j.at("alpha").get<double>(), j.at("lo").get<double>(),
                      j.at("hi").get<double>(), j.at("training_accuracy").get<double>()};
}

ordered row_json(const ClassRow& r) {
    return {{"class", r.name}, {"amount", r.amount}, {"correct", r.correct}, {"wrong", r.wrong}, {"accuracy", r.accuracy}};
}

ordered report_json(const EvaluationReport& r) {
    ordered rows = ordered::array();
    for (const auto& row : r.rows) rows.push_back(row_json(row));
    return {{"activity", r.activity},
            {"rows", rows},
            {"total", row_json(r.total)},
            {"accuracy", r.accuracy},
            {"confusion", {{"tp", r.matrix.tp}, {"fn", r.matrix.fn}, {"fp", r.matrix.fp}, {"tn", r.matrix.tn}}}};
}

}  // namespace

std::string patterns_to_json(std::span<const ActivityPattern> patterns) {
    ordered arr = ordered::array();
    for (const auto& p : patterns) arr.push_back(pattern_json(p));
    return arr.dump(2) + "\n";
}

std::vector<ActivityPattern> patterns_from_json(std::string_view text) {
    const json doc = parse(text, "pattern file");
    return guarded("pattern file", [&] {
        if (!doc.is_array()) throw DataError("pattern file: expected an array of patterns");
        std::vector<ActivityPattern> out;
        for (const auto& j : doc) {
            std::vector<EventKey> keys;
            for (const auto& k : j.at("keys")) keys.push_back(key_from(k));
            out.emplace_back(j.at("name").get<std::string>(), std::move(keys),
                             j.at("mean_intervals_ms").get<std::vector<double>>(), j.at("support").get<std::size_t>());
        }
        return out;
    });
}

std::string model_to_json(const ScoreModel& model) { return model_json(model).dump(2) + "\n"; }

std::string models_to_json(std::span<const ScoreModel> models) {
    ordered arr = ordered::array();
    for (const auto& m : models) arr.push_back(model_json(m));
    return arr.dump(2) + "\n";
}

std::vector<ScoreModel> models_from_json(std::string_view text) {
    const json doc = parse(text, "model file");
    return guarded("model file", [&] {
        std::vector<ScoreModel> out;
        if (doc.is_object()) {
            out.push_back(model_from(doc));
        } else if (doc.is_array()) {
            for (const auto& j : doc) out.push_back(model_from(j));
        } else {
            throw DataError("model file: expected an object or array");
        }
        for (const auto& m : out)
            if (!(m.lo <= m.hi)) throw DataError("model file: '" + m.activity + "' has lo > hi");
        return out;
    });
}

std::string instances_to_json(std::span<const ActivityInstance> instances) {
    ordered arr = ordered::array();
    for (const auto& inst : instances) {
        ordered events = ordered::array();
        for (const auto& e : inst.events())
            events.push_back({{"timestamp_ms", e.timestamp_ms},
                              {"device", e.key.device()},
                              {"attribute", e.key.attribute()},
                              {"state", e.key.state()},
                              {"raw_value", e.raw_value}});
        arr.push_back({{"source_id", inst.source_id()}, {"label", to_string(inst.label())}, {"events", events}});
    }
    return arr.dump(2) + "\n";
}

std::vector<ActivityInstance> instances_from_json(std::string_view text) {
    const json doc = parse(text, "instance file");
    return guarded("instance file", [&] {
        if (!doc.is_array()) throw DataError("instance file: expected an array of instances");
        std::vector<ActivityInstance> out;
        for (const auto& j : doc) {
            std::vector<Event> events;
            for (const auto& e : j.at("events")) {
                const auto state = e.at("state").get<std::string>();
                events.emplace_back(e.at("timestamp_ms").get<TimestampMs>(),
                                    EventKey(e.at("device").get<std::string>(), e.at("attribute").get<std::string>(),
                                             state),
                                    e.value("raw_value", state));
            }
            out.emplace_back(std::move(events), label_from_string(j.value("label", "unlabeled")),
                             j.value("source_id", std::string{}));
        }
        return out;
    });
}

std::string report_to_json(const EvaluationReport& report) { return report_json(report).dump(2) + "\n"; }

std::string reports_to_json(std::span<const EvaluationReport> reports) {
    ordered arr = ordered::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return ordered{{"reports", arr}}.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw DataError("failed writing '" + path.string() + "'");
}

}  // namespace homeguard::io
