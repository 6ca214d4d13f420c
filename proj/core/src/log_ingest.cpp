#include "homeguard/log_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <optional>

#include <json.hpp>

#include "homeguard/error.hpp"

namespace homeguard {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

// Small cursor over a timestamp token; every reader returns nullopt on mismatch.
struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos == s.size(); }
    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::optional<int> digits(std::size_t min_len, std::size_t max_len) {
        std::size_t n = 0;
        int value = 0;
        while (pos + n < s.size() && n < max_len && std::isdigit(static_cast<unsigned char>(s[pos + n]))) {
            value = value * 10 + (s[pos + n] - '0');
            ++n;
        }
        if (n < min_len) return std::nullopt;
        pos += n;
        return value;
    }
};

std::optional<TimestampMs> civil_to_ms(int y, int mo, int d, int h, int mi, int sec, int ms) {
    using namespace std::chrono;
    const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h > 23 || mi > 59 || sec > 60) return std::nullopt;
    const auto day_ms = duration_cast<milliseconds>(sys_days{ymd}.time_since_epoch()).count();
    return day_ms + ((h * 60LL + mi) * 60LL + sec) * 1000LL + ms;
}

std::optional<TimestampMs> parse_epoch(std::string_view t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
        return std::nullopt;
    TimestampMs v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) return std::nullopt;
    return v;
}

std::optional<TimestampMs> parse_iso(std::string_view t) {
    Cursor c{t};
    const auto y = c.digits(4, 4);
    if (!y || !c.eat('-')) return std::nullopt;
    const auto mo = c.digits(2, 2);
    if (!mo || !c.eat('-')) return std::nullopt;
    const auto d = c.digits(2, 2);
    if (!d || !(c.eat('T') || c.eat(' '))) return std::nullopt;
    const auto h = c.digits(2, 2);
    if (!h || !c.eat(':')) return std::nullopt;
    const auto mi = c.digits(2, 2);
    if (!mi || !c.eat(':')) return std::nullopt;
    const auto sec = c.digits(2, 2);
    if (!sec) return std::nullopt;
    int ms = 0;
    if (c.eat('.')) {
        const std::size_t start = c.pos;
        const auto frac = c.digits(1, 9);
        if (!frac) return std::nullopt;
        // Keep millisecond resolution; extra digits truncate.
        std::size_t len = c.pos - start;
        int v = 0;
        for (std::size_t i = 0; i < 3; ++i) v = v * 10 + (i < len ? t[start + i] - '0' : 0);
        ms = v;
    }
    long offset_min = 0;
    if (c.eat('Z')) {
    } else if (c.pos < t.size() && (t[c.pos] == '+' || t[c.pos] == '-')) {
        const bool negative = t[c.pos] == '-';
        ++c.pos;
        const auto oh = c.digits(2, 2);
        if (!oh) return std::nullopt;
        c.eat(':');
        const auto om = c.digits(2, 2);
        if (!om) return std::nullopt;
        offset_min = (*oh * 60L + *om) * (negative ? -1 : 1);
    }
    if (!c.done()) return std::nullopt;
    const auto local = civil_to_ms(*y, *mo, *d, *h, *mi, *sec, ms);
    if (!local) return std::nullopt;
    return *local - offset_min * 60'000LL;
}

std::optional<TimestampMs> parse_us(std::string_view t) {
    Cursor c{t};
    const auto mo = c.digits(1, 2);
    if (!mo || !c.eat('/')) return std::nullopt;
    const auto d = c.digits(1, 2);
    if (!d || !c.eat('/')) return std::nullopt;
    const auto y = c.digits(4, 4);
    if (!y || !c.eat(' ')) return std::nullopt;
    while (c.eat(' ')) {
    }
    const auto h = c.digits(1, 2);
    if (!h || !c.eat(':')) return std::nullopt;
    const auto mi = c.digits(2, 2);
    if (!mi || !c.eat(':')) return std::nullopt;
    const auto sec = c.digits(2, 2);
    if (!sec || !c.done()) return std::nullopt;
    return civil_to_ms(*y, *mo, *d, *h, *mi, *sec, 0);
}

std::string infer_attribute(std::string_view value) {
    const std::string v = lower(value);
    if (v == "active" || v == "inactive") return "motion";
    if (v == "open" || v == "closed" || v == "close") return "contact";
    if (v == "on" || v == "off") return "switch";
    return "state";
}

void stable_sort_by_time(std::vector<Event>& events) {
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.timestamp_ms < b.timestamp_ms; });
}

}  // namespace

void IngestConfig::validate() const {
    if (gap_ms <= 0) throw ConfigError("gap_ms must be positive");
    if (min_segment_len < 1) throw ConfigError("min_segment_len must be >= 1");
    if (timestamp_formats.empty()) throw ConfigError("at least one timestamp format is required");
}

TimestampMs parse_timestamp(std::string_view token, const std::vector<TimestampFormat>& formats) {
    const auto t = trim(token);
    for (const auto f : formats) {
        std::optional<TimestampMs> v;
        switch (f) {
            case TimestampFormat::EpochMillis: v = parse_epoch(t); break;
            case TimestampFormat::Iso8601: v = parse_iso(t); break;
            case TimestampFormat::UsDateTime: v = parse_us(t); break;
        }
        if (v && *v >= 0) return *v;
    }
    throw ParseError("unparseable timestamp '" + std::string(t) + "'");
}

std::string format_timestamp(TimestampMs t) {
    using namespace std::chrono;
    const sys_days day = floor<days>(sys_time<milliseconds>{milliseconds{t}});
    const year_month_day ymd{day};
    const auto rest = t - duration_cast<milliseconds>(day.time_since_epoch()).count();
    const long long h = rest / 3'600'000, mi = rest / 60'000 % 60, s = rest / 1000 % 60, ms = rest % 1000;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02lld:%02lld:%02lld.%03lldZ", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), h, mi, s, ms);
    return buf;
}

std::vector<Event> parse_log(std::string_view text, const IngestConfig& cfg) {
    cfg.validate();
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<Event> events;
    std::optional<std::size_t> columns;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;

        const auto fields = split(line, ',');
        if (!columns) {
            std::vector<std::string> names;
            for (auto f : fields) names.push_back(lower(f));
            if (names == std::vector<std::string>{"timestamp", "device", "attribute", "value"})
                columns = 4;
            else if (names == std::vector<std::string>{"timestamp", "device", "value"})
                columns = 3;
            else
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected header 'timestamp,device,attribute,value' or 'timestamp,device,value'");
            continue;
        }
        if (fields.size() != *columns)
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(*columns) +
                             " fields, found " + std::to_string(fields.size()));
        for (auto f : fields)
            if (f.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty field");

        const TimestampMs t = [&] {
            try {
                return parse_timestamp(fields[0], cfg.timestamp_formats);
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }();
        const std::string value(fields.back());
        const std::string attribute = *columns == 4 ? std::string(fields[2]) : infer_attribute(value);
        events.emplace_back(t, EventKey(std::string(fields[1]), attribute, value), value);
    }
    if (!columns) throw ParseError("line 1: missing header");
    stable_sort_by_time(events);
    return events;
}

std::string serialize_log(const std::vector<Event>& events) {
    std::string out = "timestamp,device,attribute,value\n";
    for (const auto& e : events) {
        out += format_timestamp(e.timestamp_ms);
        out += ',';
        out += e.key.device();
        out += ',';
        out += e.key.attribute();
        out += ',';
        out += e.key.state();
        out += '\n';
    }
    return out;
}

std::vector<Event> parse_log_jsonl(std::string_view text, const IngestConfig& cfg) {
    cfg.validate();
    std::vector<Event> events;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        json row;
        try {
            row = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(where + e.what());
        }
        if (!row.is_object()) throw ParseError(where + "expected a JSON object");
        auto field = [&](const char* name) -> std::string {
            const auto it = row.find(name);
            if (it == row.end()) throw ParseError(where + "missing field '" + name + "'");
            if (it->is_number_integer()) return std::to_string(it->get<long long>());
            if (!it->is_string()) throw ParseError(where + "field '" + name + "' must be a string");
            return it->get<std::string>();
        };
        const std::string ts = field("timestamp");
        TimestampMs t = 0;
        try {
            t = parse_timestamp(ts, cfg.timestamp_formats);
        } catch (const ParseError& e) {
            throw ParseError(where + e.what());
        }
        std::string value = field("value");
        const std::string attribute = row.contains("attribute") ? field("attribute") : infer_attribute(value);
        events.emplace_back(t, EventKey(field("device"), attribute, value), value);
    }
    stable_sort_by_time(events);
    return events;
}

std::string serialize_log_jsonl(const std::vector<Event>& events) {
    std::string out;
    for (const auto& e : events) {
        json row = {{"timestamp", format_timestamp(e.timestamp_ms)},
                    {"device", e.key.device()},
                    {"attribute", e.key.attribute()},
                    {"value", e.key.state()}};
        out += row.dump();
        out += '\n';
    }
    return out;
}

std::vector<ActivityInstance> segment(const std::vector<Event>& events, const IngestConfig& cfg) {
    cfg.validate();
    std::vector<ActivityInstance> out;
    std::size_t begin = 0;
    auto flush = [&](std::size_t end) {
        if (end - begin >= cfg.min_segment_len) {
            std::vector<Event> run(events.begin() + static_cast<std::ptrdiff_t>(begin),
                                   events.begin() + static_cast<std::ptrdiff_t>(end));
            out.emplace_back(std::move(run), Label::Unlabeled, "segment-" + std::to_string(out.size() + 1));
        }
        begin = end;
    };
    for (std::size_t i = 1; i < events.size(); ++i) {
        if (events[i].timestamp_ms - events[i - 1].timestamp_ms >= cfg.gap_ms) flush(i);
    }
    if (!events.empty()) flush(events.size());
    return out;
}

}  // namespace homeguard
