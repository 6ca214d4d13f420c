#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "homeguard/data_forge.hpp"
#include "homeguard/detector.hpp"
#include "homeguard/error.hpp"
#include "homeguard/json_io.hpp"
#include "homeguard/log_ingest.hpp"
#include "homeguard/pattern_miner.hpp"
#include "homeguard/scorer.hpp"
#include "homeguard/simgen.hpp"
#include "homeguard/trainer.hpp"
#include "pipeline.hpp"
#include "run_config.hpp"

namespace homeguard::cli {

namespace {

namespace fs = std::filesystem;

/// Values of the shared tuning flags; unset ones leave the config untouched.
struct CommonFlags {
    std::optional<std::string> config_path;
    std::optional<double> gap_seconds;
    std::optional<std::size_t> min_support;
    std::optional<double> alpha_min, alpha_max, alpha_step;
    std::optional<double> ti_multiplier;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::string format = "csv";

    void attach(CLI::App& app) {
        app.add_option("--config", config_path, "JSON run configuration; flags override its values");
        app.add_option("--gap-seconds", gap_seconds, "Idle gap that splits activity instances (default 120)");
        app.add_option("--min-support", min_support, "Minimum identical-sequence count for a pattern (default 5)");
        app.add_option("--alpha-min", alpha_min, "Lower end of the alpha sweep (default 0)");
        app.add_option("--alpha-max", alpha_max, "Upper end of the alpha sweep (default 5)");
        app.add_option("--alpha-step", alpha_step, "Alpha sweep step (default 0.1)");
        app.add_option("--ti-multiplier", ti_multiplier, "Interval stretch for anomaly(ti) (default 50)");
        app.add_option("--seed", seed, "Seed for every random choice (default 42)");
        app.add_option("--out", out, "Output file (default: standard output)");
        app.add_option("--format", format, "Log format: csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    }

    RunConfig resolve() const {
        RunConfig cfg;
        if (config_path) apply_config_json(cfg, io::read_file(*config_path));
        if (gap_seconds) cfg.ingest.gap_ms = static_cast<DurationMs>(std::llround(*gap_seconds * 1000.0));
        if (min_support) cfg.miner.min_support = *min_support;
        if (alpha_min) cfg.train.alpha_min = *alpha_min;
        if (alpha_max) cfg.train.alpha_max = *alpha_max;
        if (alpha_step) cfg.train.alpha_step = *alpha_step;
        if (ti_multiplier) cfg.forge.ti_multiplier = *ti_multiplier;
        if (seed) cfg.seed = *seed;
        cfg.propagate_seed();
        return cfg;
    }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    CommonFlags flags;
};

void emit(Context& ctx, const std::string& content) {
    if (ctx.flags.out)
        io::write_file(*ctx.flags.out, content);
    else
        ctx.out << content;
}

void require_distinct(const std::optional<std::string>& out, std::initializer_list<std::string> inputs) {
    if (!out) return;
    std::error_code ec;
    for (const auto& in : inputs) {
        if (in.empty()) continue;
        if (*out == in || (fs::exists(in) && fs::exists(*out) && fs::equivalent(in, *out, ec)))
            throw UsageError("--out would overwrite input '" + in + "'");
    }
}

bool is_jsonl(const std::string& path, const std::string& format) {
    return format == "jsonl" || path.ends_with(".jsonl");
}

std::vector<Event> load_log(const std::string& path, const CommonFlags& flags, const IngestConfig& ingest) {
    const std::string text = io::read_file(path);
    try {
        return is_jsonl(path, flags.format) ? parse_log_jsonl(text, ingest) : parse_log(text, ingest);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::vector<ActivityInstance> load_instances_or_log(const std::string& instances_path, const std::string& log_path,
                                                    const CommonFlags& flags, const RunConfig& cfg) {
    if (!instances_path.empty()) return io::instances_from_json(io::read_file(instances_path));
    if (!log_path.empty()) return segment(load_log(log_path, flags, cfg.ingest), cfg.ingest);
    throw UsageError("one of --instances or --log is required");
}

const ActivityPattern& pick_pattern(const std::vector<ActivityPattern>& patterns, const std::string& activity) {
    if (patterns.empty()) throw DataError("pattern file holds no patterns");
    if (activity.empty()) {
        if (patterns.size() > 1) throw UsageError("pattern file holds several patterns; pass --activity");
        return patterns.front();
    }
    const auto it = std::find_if(patterns.begin(), patterns.end(),
                                 [&](const ActivityPattern& p) { return p.name() == activity; });
    if (it == patterns.end()) throw DataError("no pattern named '" + activity + "'");
    return *it;
}

const ScoreModel& pick_model(const std::vector<ScoreModel>& models, const std::string& activity) {
    const auto it = std::find_if(models.begin(), models.end(), [&](const ScoreModel& m) { return m.activity == activity; });
    if (it == models.end()) throw DataError("no model for activity '" + activity + "'");
    return *it;
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string breakdown_line(const std::string& source, const std::string& pattern, std::size_t n,
                           const ScoreBreakdown& s) {
    return source + "\tpattern=" + pattern + "\tmatched=" + std::to_string(s.matched) + "/" + std::to_string(n) +
           "\tscore_n=" + fmt("%.6f", s.score_n) + "\tscore_c=" + fmt("%.6f", s.score_c) +
           "\ttheta=" + fmt("%.6f", s.theta_rad) + "\ttotal=" + fmt("%.6f", s.total);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interval-aware anomaly detection for smart-home event logs", "homeguard"};
    app.require_subcommand(1);
    Context ctx{out, err, {}};
    std::function<void()> action;

    auto add = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        ctx.flags.attach(*sub);
        return sub;
    };

    // simulate
    std::size_t sim_instances = SimConfig{}.instances_per_activity;
    double sim_noise = 0.10;
    auto* simulate = add("simulate", "Generate a synthetic testbed log for the built-in activities");
    simulate->add_option("--instances", sim_instances, "Instances per activity (default 50)");
    simulate->add_option("--noise", sim_noise, "Relative std-dev of interval jitter (default 0.10)");
    simulate->callback([&] {
        action = [&] {
            RunConfig cfg = ctx.flags.resolve();
            cfg.sim.instances_per_activity = sim_instances;
            auto specs = builtin_specs();
            for (auto& s : specs) s.noise_sigma_frac = sim_noise;
            cfg.sim.validate(cfg.ingest.gap_ms);
            const auto log = generate(specs, cfg.sim);
            emit(ctx, ctx.flags.format == "jsonl" ? serialize_log_jsonl(log) : serialize_log(log));
        };
    });

    // ingest
    std::string ingest_path;
    std::size_t min_segment_len = IngestConfig{}.min_segment_len;
    auto* ingest = add("ingest", "Parse a log and segment it into activity instances (JSON)");
    ingest->add_option("log", ingest_path, "Event log (CSV or JSON lines)")->required();
    ingest->add_option("--min-segment-len", min_segment_len, "Drop segments with fewer events (default 2)");
    ingest->callback([&] {
        action = [&] {
            require_distinct(ctx.flags.out, {ingest_path});
            RunConfig cfg = ctx.flags.resolve();
            cfg.ingest.min_segment_len = min_segment_len;
            const auto segments = segment(load_log(ingest_path, ctx.flags, cfg.ingest), cfg.ingest);
            emit(ctx, io::instances_to_json(segments));
        };
    });

    // mine
    std::string mine_instances, mine_log;
    std::size_t min_len = MinerConfig{}.min_len;
    auto* mine_cmd = add("mine", "Mine frequent patterns with mean intervals");
    mine_cmd->add_option("--instances", mine_instances, "Instance file from `ingest`");
    mine_cmd->add_option("--log", mine_log, "Event log to ingest first");
    mine_cmd->add_option("--min-len", min_len, "Minimum pattern length (default 2)");
    mine_cmd->callback([&] {
        action = [&] {
            require_distinct(ctx.flags.out, {mine_instances, mine_log});
            RunConfig cfg = ctx.flags.resolve();
            cfg.miner.min_len = min_len;
            const auto instances = load_instances_or_log(mine_instances, mine_log, ctx.flags, cfg);
            const MiningResult mined = mine(instances, cfg.miner);
            if (mined.numeric_events_ignored > 0)
                ctx.err << "ignored " << mined.numeric_events_ignored << " numeric-valued events\n";
            emit(ctx, io::patterns_to_json(mined.patterns));
        };
    });

    // augment
    std::string augment_instances;
    std::size_t augment_target = 0;
    auto* augment = add("augment", "Oversample normal instances by midpoint interpolation");
    augment->add_option("--instances", augment_instances, "Normal instances sharing one key sequence")->required();
    augment->add_option("--target", augment_target, "Number of synthetic instances to create")->required();
    augment->callback([&] {
        action = [&] {
            require_distinct(ctx.flags.out, {augment_instances});
            const RunConfig cfg = ctx.flags.resolve();
            const auto pool = io::instances_from_json(io::read_file(augment_instances));
            Rng rng(cfg.forge.seed);
            emit(ctx, io::instances_to_json(augment_normals(pool, augment_target, rng)));
        };
    });

    // forge
    std::string forge_instances, forge_kind = "both";
    std::size_t forge_count = 0;
    auto* forge = add("forge", "Synthesize anomaly(seq) and anomaly(ti) instances from normals");
    forge->add_option("--instances", forge_instances, "Normal source instances")->required();
    forge->add_option("--kind", forge_kind, "seq, ti or both")->check(CLI::IsMember({"seq", "ti", "both"}));
    forge->add_option("--count", forge_count, "Anomalies per kind, sources drawn at random (default: one per source)");
    forge->callback([&] {
        action = [&] {
            require_distinct(ctx.flags.out, {forge_instances});
            const RunConfig cfg = ctx.flags.resolve();
            cfg.forge.validate();
            const auto sources = io::instances_from_json(io::read_file(forge_instances));
            if (sources.empty()) throw DataError("forge: no source instances");
            Rng rng(cfg.forge.seed);
            std::vector<ActivityInstance> forged;
            auto produce = [&](auto&& make) {
                if (forge_count == 0)
                    for (const auto& s : sources) forged.push_back(make(s));
                else
                    for (std::size_t i = 0; i < forge_count; ++i) forged.push_back(make(sources[rng.index(sources.size())]));
            };
            if (forge_kind != "ti") produce([&](const ActivityInstance& s) { return make_anomaly_seq(s, rng); });
            if (forge_kind != "seq")
                produce([&](const ActivityInstance& s) { return make_anomaly_ti(s, cfg.forge, rng); });
            emit(ctx, io::instances_to_json(forged));
        };
    });

    // train
    std::string train_patterns, train_labeled, train_activity;
    auto* train_cmd = add("train", "Sweep alpha and select the accepted score section");
    train_cmd->add_option("--patterns,--pattern", train_patterns, "Pattern file")->required();
    train_cmd->add_option("--labeled", train_labeled, "Labeled training instances")->required();
    train_cmd->add_option("--activity", train_activity, "Pattern name (required if the file holds several)");
    train_cmd->callback([&] {
        action = [&] {
            require_distinct(ctx.flags.out, {train_patterns, train_labeled});
            const RunConfig cfg = ctx.flags.resolve();
            const auto patterns = io::patterns_from_json(io::read_file(train_patterns));
            const auto& pattern = pick_pattern(patterns, train_activity);
            const auto labeled = io::instances_from_json(io::read_file(train_labeled));
            emit(ctx, io::model_to_json(train(pattern, labeled, cfg.train)));
        };
    });

    // score
    std::string score_patterns, score_log, score_instances, score_activity;
    double score_alpha = 1.0;
    auto* score_cmd = add("score", "Score instances against a pattern");
    score_cmd->add_option("--patterns,--pattern", score_patterns, "Pattern file")->required();
    score_cmd->add_option("--log", score_log, "Event log to segment and score");
    score_cmd->add_option("--instances", score_instances, "Instance file to score");
    score_cmd->add_option("--activity", score_activity, "Pattern name (default: best-covering pattern)");
    score_cmd->add_option("--alpha", score_alpha, "Weight of the temporal term (default 1)")->check(CLI::NonNegativeNumber);
    score_cmd->callback([&] {
        action = [&] {
            require_distinct(ctx.flags.out, {score_patterns, score_log, score_instances});
            const RunConfig cfg = ctx.flags.resolve();
            const auto patterns = io::patterns_from_json(io::read_file(score_patterns));
            const auto instances = load_instances_or_log(score_instances, score_log, ctx.flags, cfg);
            std::string text;
            for (const auto& inst : instances) {
                const auto& p = score_activity.empty() ? select_pattern(patterns, inst) : pick_pattern(patterns, score_activity);
                text += breakdown_line(inst.source_id(), p.name(), p.size(), score(p, inst, score_alpha)) + "\n";
            }
            emit(ctx, text);
        };
    });

    // detect
    std::string detect_patterns, detect_models, detect_log, detect_instances;
    auto* detect = add("detect", "Classify instances as normal or anomalous");
    detect->add_option("--patterns,--pattern", detect_patterns, "Pattern file")->required();
    detect->add_option("--models,--model", detect_models, "Model file")->required();
    detect->add_option("--log", detect_log, "Event log to segment and classify");
    detect->add_option("--instances", detect_instances, "Instance file to classify");
    detect->callback([&] {
        action = [&] {
            require_distinct(ctx.flags.out, {detect_patterns, detect_models, detect_log, detect_instances});
            const RunConfig cfg = ctx.flags.resolve();
            const auto patterns = io::patterns_from_json(io::read_file(detect_patterns));
            const auto models = io::models_from_json(io::read_file(detect_models));
            const auto instances = load_instances_or_log(detect_instances, detect_log, ctx.flags, cfg);
            std::string text;
            for (const auto& inst : instances) {
                const auto& p = select_pattern(patterns, inst, models);
                const Verdict v = classify(pick_model(models, p.name()), p, inst);
                text += std::string(v.classification == Classification::Normal ? "normal" : "anomaly") + "\t" +
                        breakdown_line(inst.source_id(), p.name(), p.size(), v.breakdown) + "\n";
            }
            emit(ctx, text);
        };
    });

    // evaluate
    std::string eval_patterns, eval_models, eval_labeled, eval_activity;
    auto* evaluate_cmd = add("evaluate", "Confusion matrix and per-class accuracy on a labeled set");
    evaluate_cmd->add_option("--patterns,--pattern", eval_patterns, "Pattern file")->required();
    evaluate_cmd->add_option("--models,--model", eval_models, "Model file")->required();
    evaluate_cmd->add_option("--labeled", eval_labeled, "Labeled test instances")->required();
    evaluate_cmd->add_option("--activity", eval_activity, "Activity name (default: the model's, if only one)");
    evaluate_cmd->callback([&] {
        action = [&] {
            require_distinct(ctx.flags.out, {eval_patterns, eval_models, eval_labeled});
            ctx.flags.resolve();
            const auto patterns = io::patterns_from_json(io::read_file(eval_patterns));
            const auto models = io::models_from_json(io::read_file(eval_models));
            std::string activity = eval_activity;
            if (activity.empty()) {
                if (models.size() != 1) throw UsageError("model file holds several models; pass --activity");
                activity = models.front().activity;
            }
            const auto labeled = io::instances_from_json(io::read_file(eval_labeled));
            const auto report = evaluate(pick_model(models, activity), pick_pattern(patterns, activity), labeled);
            ctx.out << format_report_text(report);
            if (ctx.flags.out) io::write_file(*ctx.flags.out, io::report_to_json(report));
        };
    });

    // pipeline
    std::string work_dir;
    auto* pipeline = add("pipeline", "Run simulate -> ingest -> mine -> augment -> forge -> train -> evaluate");
    pipeline->add_option("--work-dir", work_dir, "Directory for intermediate artifacts (default: next to --out)");
    pipeline->callback([&] {
        action = [&] {
            const RunConfig cfg = ctx.flags.resolve();
            const PipelineResult result = run_pipeline(cfg);
            fs::path dir = work_dir;
            if (dir.empty())
                dir = ctx.flags.out ? fs::path(*ctx.flags.out).parent_path() / "artifacts" : fs::path("pipeline-artifacts");
            write_artifacts(result, cfg, dir);
            const auto reports = result.reports();
            ctx.out << pipeline_report_text(result);
            if (ctx.flags.out) io::write_file(*ctx.flags.out, io::reports_to_json(reports));
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (action) action();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: invalid configuration: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    }
}

}  // namespace homeguard::cli
