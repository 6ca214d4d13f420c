#include "homeguard/detector.hpp"

#include <algorithm>
#include <cstdio>

#include "homeguard/error.hpp"

namespace homeguard {

double ConfusionMatrix::accuracy() const noexcept {
    const std::size_t n = total();
    return n == 0 ? 0.0 : static_cast<double>(tp + tn) / static_cast<double>(n);
}

Verdict classify(const ScoreModel& model, const ActivityPattern& pattern, const ActivityInstance& instance) {
    if (model.activity != pattern.name())
        throw DataError("model '" + model.activity + "' does not belong to pattern '" + pattern.name() + "'");
    Verdict v{Classification::Anomaly, score(pattern, instance, model.alpha), pattern.name()};
    if (model.accepts(v.breakdown.total)) v.classification = Classification::Normal;
    return v;
}

const ActivityPattern& select_pattern(std::span<const ActivityPattern> patterns, const ActivityInstance& instance,
                                      std::span<const ScoreModel> models) {
    if (patterns.empty()) throw DataError("select_pattern: no patterns");

    auto alpha_for = [&](const ActivityPattern& p) {
        const auto it = std::find_if(models.begin(), models.end(),
                                     [&](const ScoreModel& m) { return m.activity == p.name(); });
        return it != models.end() ? it->alpha : 1.0;
    };

    const ActivityPattern* best = nullptr;
    ScoreBreakdown best_score;
    for (const auto& p : patterns) {
        const ScoreBreakdown s = score(p, instance, alpha_for(p));
        bool better = best == nullptr;
        if (!better) {
            // Compare matched/n as cross-multiplied integers to avoid rounding ties apart.
            const auto lhs = s.matched * best->size();
            const auto rhs = best_score.matched * p.size();
            if (lhs != rhs)
                better = lhs > rhs;
            else if (s.total != best_score.total)
                better = s.total > best_score.total;
            else
                better = p.name() < best->name();
        }
        if (better) {
            best = &p;
            best_score = s;
        }
    }
    return *best;
}

namespace {

ClassRow make_row(std::string name, std::size_t correct, std::size_t wrong) {
    ClassRow row{std::move(name), correct + wrong, correct, wrong, 0.0};
    if (row.amount > 0) row.accuracy = static_cast<double>(correct) / static_cast<double>(row.amount);
    return row;
}

}  // namespace

EvaluationReport evaluate(const ScoreModel& model, const ActivityPattern& pattern,
                          std::span<const ActivityInstance> labeled) {
    struct Tally {
        std::size_t correct = 0, wrong = 0;
    };
    Tally seq, ti, normal;
    EvaluationReport report;
    report.activity = pattern.name();

    for (std::size_t i = 0; i < labeled.size(); ++i) {
        const auto& inst = labeled[i];
        if (inst.label() == Label::Unlabeled)
            throw DataError("instance " + std::to_string(i) + " ('" + inst.source_id() + "') is unlabeled");
        const bool flagged = classify(model, pattern, inst).classification == Classification::Anomaly;
        auto& m = report.matrix;
        if (is_anomaly(inst.label())) {
            flagged ? ++m.tp : ++m.fn;
            auto& t = inst.label() == Label::AnomalySeq ? seq : ti;
            flagged ? ++t.correct : ++t.wrong;
        } else {
            flagged ? ++m.fp : ++m.tn;
            flagged ? ++normal.wrong : ++normal.correct;
        }
    }

    for (auto [name, t] : {std::pair{"Anomaly(seq)", seq}, std::pair{"Anomaly(ti)", ti}, std::pair{"Normal", normal}})
        if (t.correct + t.wrong > 0) report.rows.push_back(make_row(name, t.correct, t.wrong));
    report.total = make_row("Total", report.matrix.tp + report.matrix.tn, report.matrix.fn + report.matrix.fp);
    report.accuracy = report.matrix.accuracy();
    return report;
}

std::string format_report_text(const EvaluationReport& report) {
    std::string out = "Testing results of activity \"" + report.activity + "\"\n";
    char line[128];
    std::snprintf(line, sizeof line, "%-14s %8s %8s %8s %9s\n", "", "Amount", "TP+TN", "FN+FP", "Accuracy");
    out += line;
    auto emit = [&](const ClassRow& r) {
        std::snprintf(line, sizeof line, "%-14s %8zu %8zu %8zu %8.1f%%\n", r.name.c_str(), r.amount, r.correct,
                      r.wrong, r.accuracy * 100.0);
        out += line;
    };
    for (const auto& r : report.rows) emit(r);
    emit(report.total);
    const auto& m = report.matrix;
    std::snprintf(line, sizeof line, "TP=%zu FN=%zu FP=%zu TN=%zu\n", m.tp, m.fn, m.fp, m.tn);
    out += line;
    return out;
}

}  // namespace homeguard
