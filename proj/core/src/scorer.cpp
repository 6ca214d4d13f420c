#include "homeguard/scorer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "homeguard/error.hpp"

namespace homeguard {

Alignment align(std::span<const EventKey> pattern, std::span<const EventKey> instance) {
    const std::size_t n = pattern.size(), m = instance.size();
    // suffix[i][j] = LCS length of pattern[i..] and instance[j..].
    std::vector<std::size_t> suffix((n + 1) * (m + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return suffix[i * (m + 1) + j]; };
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = m; j-- > 0;) {
            at(i, j) = pattern[i] == instance[j] ? at(i + 1, j + 1) + 1 : std::max(at(i + 1, j), at(i, j + 1));
        }
    }

    Alignment out;
    std::size_t i = 0, j = 0;
    for (std::size_t remaining = at(0, 0); remaining > 0; --remaining) {
        // Smallest pattern index that still admits a maximal completion.
        bool found = false;
        for (std::size_t pi = i; pi < n && !found; ++pi) {
            if (at(pi, j) < remaining) break;
            for (std::size_t tj = j; tj < m; ++tj) {
                if (at(pi, tj) < remaining) break;
                if (pattern[pi] == instance[tj] && at(pi + 1, tj + 1) == remaining - 1) {
                    out.pairs.push_back({pi, tj});
                    i = pi + 1;
                    j = tj + 1;
                    found = true;
                    break;
                }
            }
        }
    }
    return out;
}

Alignment align(const ActivityPattern& pattern, const ActivityInstance& instance) {
    const auto keys = instance.keys();
    return align(pattern.keys(), keys);
}

MergedIntervals merged_intervals(const ActivityPattern& pattern, const ActivityInstance& instance,
                                 const Alignment& alignment) {
    MergedIntervals out;
    const auto& pairs = alignment.pairs;
    if (pairs.size() < 2) return out;

    const auto& means = pattern.mean_intervals_ms();
    const auto& ev = instance.events();
    out.test.reserve(pairs.size() - 1);
    out.pattern.reserve(pairs.size() - 1);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
        const auto& a = pairs[k - 1];
        const auto& b = pairs[k];
        out.test.push_back(static_cast<double>(ev[b.instance_index].timestamp_ms - ev[a.instance_index].timestamp_ms));
        // Summing directly keeps exact values for the common no-gap case.
        double spanned = 0.0;
        for (std::size_t p = a.pattern_index; p < b.pattern_index; ++p) spanned += means[p];
        out.pattern.push_back(spanned);
    }
    return out;
}

double angle(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size())
        throw std::invalid_argument("angle: length mismatch (" + std::to_string(u.size()) + " vs " +
                                    std::to_string(v.size()) + ")");
    double uu = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        uu += u[i] * u[i];
        vv += v[i] * v[i];
    }
    const bool u_zero = uu == 0.0, v_zero = vv == 0.0;
    if (u_zero && v_zero) return 0.0;
    if (u_zero || v_zero) return std::numbers::pi / 2.0;

    // arccos(u.v / |u||v|) loses ~1e-8 rad near 0 to cancellation. The equivalent
    // 2 atan2(|u^ - v^|, |u^ + v^|) over unit vectors is accurate across [0, pi].
    const double nu = std::sqrt(uu), nv = std::sqrt(vv);
    double diff = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double a = u[i] / nu, b = v[i] / nv;
        diff += (a - b) * (a - b);
        sum += (a + b) * (a + b);
    }
    return std::clamp(2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum)), 0.0, std::numbers::pi);
}

ScoreBreakdown score(const ActivityPattern& pattern, const ActivityInstance& instance, double alpha) {
    if (pattern.size() == 0) throw DataError("score: empty pattern");
    if (!(alpha >= 0.0)) throw std::invalid_argument("score: alpha must be >= 0");

    const Alignment a = align(pattern, instance);
    ScoreBreakdown out;
    out.matched = a.matched();
    out.unmatched_test_events = instance.size() - a.matched();
    out.score_n = static_cast<double>(a.matched()) / static_cast<double>(pattern.size());

    if (pattern.size() < 2) {
        const bool complete = a.matched() == pattern.size();
        out.score_c = complete ? 1.0 : 0.0;
        out.theta_rad = complete ? 0.0 : std::numbers::pi;
    } else if (a.matched() < 2) {
        out.score_c = 0.0;
        out.theta_rad = std::numbers::pi;
    } else {
        const auto merged = merged_intervals(pattern, instance, a);
        out.theta_rad = angle(merged.test, merged.pattern);
        out.score_c = 1.0 - out.theta_rad / std::numbers::pi;
    }
    out.total = out.total_at(alpha);
    return out;
}

}  // namespace homeguard
