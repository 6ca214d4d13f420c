#include "homeguard/trainer.hpp"

#include <algorithm>
#include <cmath>

#include "homeguard/error.hpp"
#include "homeguard/scorer.hpp"

namespace homeguard {

void TrainConfig::validate() const {
    if (!(alpha_min <= alpha_max)) throw ConfigError("alpha_min must be <= alpha_max");
    if (!(alpha_step > 0.0)) throw ConfigError("alpha_step must be > 0");
    if (!(alpha_min >= 0.0)) throw ConfigError("alpha_min must be >= 0");
    if (!(boundary_epsilon >= 0.0)) throw ConfigError("boundary_epsilon must be >= 0");
}

std::vector<double> TrainConfig::alpha_grid() const {
    validate();
    // The slack absorbs representation error in e.g. 5.0 / 0.1.
    const auto steps = static_cast<std::size_t>(std::floor((alpha_max - alpha_min) / alpha_step + 1e-9));
    std::vector<double> grid;
    grid.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
        grid.push_back(std::min(alpha_max, alpha_min + static_cast<double>(k) * alpha_step));
    return grid;
}

namespace {

void require_labeled(std::span<const ActivityInstance> labeled) {
    if (labeled.empty()) throw DataError("training set is empty");
    for (std::size_t i = 0; i < labeled.size(); ++i)
        if (labeled[i].label() == Label::Unlabeled)
            throw DataError("instance " + std::to_string(i) + " ('" + labeled[i].source_id() + "') is unlabeled");
}

}  // namespace

std::vector<ScoredRow> score_table(const ActivityPattern& pattern, std::span<const ActivityInstance> labeled,
                                   double alpha) {
    require_labeled(labeled);
    std::vector<ScoredRow> rows;
    rows.reserve(labeled.size());
    for (const auto& inst : labeled) rows.push_back({inst.label(), score(pattern, inst, alpha).total});
    return rows;
}

double interval_accuracy(std::span<const ScoredRow> rows, double lo, double hi) {
    if (rows.empty()) return 0.0;
    std::size_t correct = 0;
    for (const auto& r : rows) {
        const bool inside = lo <= r.score && r.score <= hi;
        if (inside == (r.label == Label::Normal)) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(rows.size());
}

ScoreInterval best_interval(std::span<const ScoredRow> rows, double boundary_epsilon) {
    if (rows.empty()) throw DataError("best_interval: no rows");

    struct Point {
        double score;
        bool normal;
    };
    std::vector<Point> points;
    points.reserve(rows.size());
    for (const auto& r : rows) points.push_back({r.score, r.label == Label::Normal});
    std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.score < b.score; });

    // Prefix counts over sorted scores, so membership of [lo, hi] is two binary searches.
    std::vector<std::size_t> normals_before(points.size() + 1, 0);
    for (std::size_t k = 0; k < points.size(); ++k)
        normals_before[k + 1] = normals_before[k] + (points[k].normal ? 1 : 0);
    const std::size_t total_anomalies = points.size() - normals_before.back();

    std::vector<double> distinct;
    for (const auto& p : points)
        if (distinct.empty() || distinct.back() != p.score) distinct.push_back(p.score);

    auto first_at_or_above = [&](double lo) {
        return static_cast<std::size_t>(
            std::lower_bound(points.begin(), points.end(), lo, [](const Point& p, double v) { return p.score < v; }) -
            points.begin());
    };
    auto first_above = [&](double hi) {
        return static_cast<std::size_t>(
            std::upper_bound(points.begin(), points.end(), hi, [](double v, const Point& p) { return v < p.score; }) -
            points.begin());
    };

    ScoreInterval best{0.0, 0.0, -1.0};
    std::size_t best_correct = 0;
    // Width is compared on the observed scores; the +-eps padding would reintroduce rounding.
    double best_width = 0.0;
    for (std::size_t a = 0; a < distinct.size(); ++a) {
        const double lo = distinct[a] - boundary_epsilon;
        const std::size_t begin = first_at_or_above(lo);
        for (std::size_t b = a; b < distinct.size(); ++b) {
            const double hi = distinct[b] + boundary_epsilon;
            const std::size_t end = first_above(hi);
            const std::size_t inside = end - begin;
            const std::size_t normals_inside = normals_before[end] - normals_before[begin];
            const std::size_t anomalies_outside = total_anomalies - (inside - normals_inside);
            const std::size_t correct = normals_inside + anomalies_outside;

            const double width = distinct[b] - distinct[a];
            const bool better = best.accuracy < 0.0 || correct > best_correct ||
                                (correct == best_correct && width > best_width);
            if (better) {
                best_correct = correct;
                best_width = width;
                best.lo = lo;
                best.hi = hi;
                best.accuracy = 0.0;
            }
        }
    }
    best.accuracy = interval_accuracy(rows, best.lo, best.hi);
    return best;
}

ScoreModel train(const ActivityPattern& pattern, std::span<const ActivityInstance> labeled, const TrainConfig& cfg) {
    cfg.validate();
    require_labeled(labeled);

    // Alignment is alpha-independent; score once and re-weight per grid point.
    std::vector<ScoreBreakdown> breakdowns;
    breakdowns.reserve(labeled.size());
    for (const auto& inst : labeled) breakdowns.push_back(score(pattern, inst, 0.0));

    ScoreModel best;
    best.activity = pattern.name();
    bool have = false;
    std::vector<ScoredRow> rows(labeled.size());
    for (const double alpha : cfg.alpha_grid()) {
        for (std::size_t i = 0; i < labeled.size(); ++i) rows[i] = {labeled[i].label(), breakdowns[i].total_at(alpha)};
        const ScoreInterval iv = best_interval(rows, cfg.boundary_epsilon);
        // Strict improvement only: the grid ascends, so ties keep the smaller alpha.
        if (!have || iv.accuracy > best.training_accuracy) {
            best.alpha = alpha;
            best.lo = iv.lo;
            best.hi = iv.hi;
            best.training_accuracy = iv.accuracy;
            have = true;
        }
    }
    return best;
}

}  // namespace homeguard
