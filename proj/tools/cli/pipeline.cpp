#include "pipeline.hpp"

#include <algorithm>
#include <cctype>

#include "homeguard/data_forge.hpp"
#include "homeguard/error.hpp"
#include "homeguard/json_io.hpp"
#include "homeguard/log_ingest.hpp"
#include "homeguard/pattern_miner.hpp"
#include "homeguard/random.hpp"

namespace homeguard::cli {

std::vector<ScoreModel> PipelineResult::models() const {
    std::vector<ScoreModel> out;
    for (const auto& a : activities) out.push_back(a.model);
    return out;
}

std::vector<EvaluationReport> PipelineResult::reports() const {
    std::vector<EvaluationReport> out;
    for (const auto& a : activities) out.push_back(a.report);
    return out;
}

std::string slug(std::string_view name) {
    std::string out;
    for (unsigned char c : name) {
        if (std::isalnum(c))
            out += static_cast<char>(std::tolower(c));
        else if (!out.empty() && out.back() != '-')
            out += '-';
    }
    while (!out.empty() && out.back() == '-') out.pop_back();
    return out;
}

namespace {

void shuffle(std::vector<ActivityInstance>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.index(i)]);
}

/// Real normals first, topped up with midpoints of the real pool, then forged anomalies.
std::vector<ActivityInstance> build_split(const std::vector<ActivityInstance>& real, const SplitSizes& sizes,
                                          const ForgeConfig& forge, Rng& rng) {
    std::vector<ActivityInstance> out;
    out.reserve(sizes.total());
    const std::size_t take = std::min(real.size(), sizes.normal);
    for (std::size_t i = 0; i < take; ++i) out.push_back(real[i].with_label(Label::Normal));
    for (auto& s : augment_normals(real, sizes.normal - take, rng)) out.push_back(std::move(s));
    for (std::size_t i = 0; i < sizes.anomaly_seq; ++i) out.push_back(make_anomaly_seq(real[rng.index(real.size())], rng));
    for (std::size_t i = 0; i < sizes.anomaly_ti; ++i)
        out.push_back(make_anomaly_ti(real[rng.index(real.size())], forge, rng));
    return out;
}

}  // namespace

PipelineResult run_pipeline(const RunConfig& cfg_in, const std::vector<ActivitySpec>& specs_in) {
    RunConfig cfg = cfg_in;
    cfg.propagate_seed();
    cfg.validate();

    std::vector<ActivitySpec> specs = specs_in;
    for (auto& s : specs) s.noise_sigma_frac = cfg.noise_sigma_frac;

    PipelineResult result;
    // Round-trip through the CSV text so the pipeline exercises the same ingest path as a real log.
    result.log = parse_log(serialize_log(generate(specs, cfg.sim)), cfg.ingest);
    result.segments = segment(result.log, cfg.ingest);

    Rng rng(cfg.forge.seed);
    PatternLabels labels;
    std::vector<std::vector<ActivityInstance>> train_real(specs.size()), test_real(specs.size());
    std::vector<ActivityInstance> mining_input;
    for (std::size_t a = 0; a < specs.size(); ++a) {
        const auto keys = specs[a].keys();
        labels[keys] = specs[a].name;
        std::vector<ActivityInstance> real;
        for (const auto& seg : result.segments)
            if (seg.keys() == keys) real.push_back(seg.with_label(Label::Normal));
        if (real.size() < 2)
            throw DataError("activity '" + specs[a].name + "': need at least 2 segmented instances, found " +
                            std::to_string(real.size()));
        shuffle(real, rng);
        const std::size_t half = (real.size() + 1) / 2;
        train_real[a].assign(real.begin(), real.begin() + static_cast<std::ptrdiff_t>(half));
        test_real[a].assign(real.begin() + static_cast<std::ptrdiff_t>(half), real.end());
        if (test_real[a].size() < 2) throw DataError("activity '" + specs[a].name + "': test half too small");
        mining_input.insert(mining_input.end(), train_real[a].begin(), train_real[a].end());
    }

    result.patterns = mine_patterns(mining_input, cfg.miner, labels);

    for (std::size_t a = 0; a < specs.size(); ++a) {
        const auto& name = specs[a].name;
        const auto it = std::find_if(result.patterns.begin(), result.patterns.end(),
                                     [&](const ActivityPattern& p) { return p.name() == name; });
        if (it == result.patterns.end())
            throw DataError("activity '" + name + "' produced no frequent pattern (min_support " +
                            std::to_string(cfg.miner.min_support) + ")");
        auto train_set = build_split(train_real[a], cfg.train_split, cfg.forge, rng);
        auto test_set = build_split(test_real[a], cfg.test_split, cfg.forge, rng);
        ScoreModel model = train(*it, train_set, cfg.train);
        EvaluationReport report = evaluate(model, *it, test_set);
        result.activities.push_back(
            {name, *it, std::move(train_set), std::move(test_set), std::move(model), std::move(report)});
    }
    return result;
}

std::string pipeline_report_text(const PipelineResult& result) {
    std::string out;
    for (const auto& a : result.activities) {
        char head[160];
        std::snprintf(head, sizeof head, "alpha=%.2f  section=[%.4f, %.4f]  training accuracy=%.1f%%\n",
                      a.model.alpha, a.model.lo, a.model.hi, a.model.training_accuracy * 100.0);
        out += format_report_text(a.report);
        out += head;
        out += '\n';
    }
    return out;
}

void write_artifacts(const PipelineResult& result, const RunConfig& cfg, const std::filesystem::path& dir) {
    io::write_file(dir / "config.json", config_to_json(cfg));
    io::write_file(dir / "log.csv", serialize_log(result.log));
    io::write_file(dir / "segments.json", io::instances_to_json(result.segments));
    io::write_file(dir / "patterns.json", io::patterns_to_json(result.patterns));
    const auto models = result.models();
    io::write_file(dir / "models.json", io::models_to_json(models));
    for (const auto& a : result.activities) {
        io::write_file(dir / ("train-" + slug(a.name) + ".json"), io::instances_to_json(a.train_set));
        io::write_file(dir / ("test-" + slug(a.name) + ".json"), io::instances_to_json(a.test_set));
    }
    const auto reports = result.reports();
    io::write_file(dir / "report.json", io::reports_to_json(reports));
    io::write_file(dir / "report.txt", pipeline_report_text(result));
}

}  // namespace homeguard::cli
