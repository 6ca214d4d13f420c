#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "homeguard/data_forge.hpp"
#include "homeguard/random.hpp"
#include "homeguard/scorer.hpp"
#include "homeguard/trainer.hpp"
#include "pipeline.hpp"

namespace {

using namespace homeguard;

std::vector<EventKey> keys(std::size_t n) {
    std::vector<EventKey> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back("D" + std::to_string(i % 7), "contact", i % 2 ? "open" : "closed");
    return out;
}

ActivityInstance instance(const std::vector<EventKey>& ks, Rng& rng, Label label = Label::Normal) {
    std::vector<Event> events;
    TimestampMs t = 1'000'000;
    for (const auto& k : ks) {
        events.emplace_back(t, k, k.state());
        t += 1000 + static_cast<DurationMs>(rng.index(4000));
    }
    return ActivityInstance(std::move(events), label, "bench");
}

ActivityPattern pattern(const std::vector<EventKey>& ks) {
    return ActivityPattern("bench", ks, std::vector<double>(ks.size() - 1, 3000.0), 1);
}

void BM_Align(benchmark::State& state) {
    Rng rng(1);
    const auto ks = keys(static_cast<std::size_t>(state.range(0)));
    const auto p = pattern(ks);
    const auto x = delete_event(instance(ks, rng), ks.size() / 2);
    for (auto _ : state) benchmark::DoNotOptimize(align(p, x));
}
BENCHMARK(BM_Align)->RangeMultiplier(4)->Range(4, 256);

void BM_Score(benchmark::State& state) {
    Rng rng(2);
    const auto ks = keys(static_cast<std::size_t>(state.range(0)));
    const auto p = pattern(ks);
    const auto x = instance(ks, rng);
    for (auto _ : state) benchmark::DoNotOptimize(score(p, x, 1.0));
}
BENCHMARK(BM_Score)->RangeMultiplier(4)->Range(4, 256);

void BM_Train(benchmark::State& state) {
    Rng rng(3);
    const auto ks = keys(6);
    const auto p = pattern(ks);
    std::vector<ActivityInstance> labeled;
    const ForgeConfig fc;
    for (int i = 0; i < 40; ++i) labeled.push_back(instance(ks, rng));
    for (int i = 0; i < 10; ++i) {
        labeled.push_back(make_anomaly_seq(labeled[static_cast<std::size_t>(i)], rng));
        labeled.push_back(make_anomaly_ti(labeled[static_cast<std::size_t>(i + 10)], fc, rng));
    }
    for (auto _ : state) benchmark::DoNotOptimize(train(p, labeled));
}
BENCHMARK(BM_Train);

void BM_Pipeline(benchmark::State& state) {
    const cli::RunConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(cli::run_pipeline(cfg));
}
BENCHMARK(BM_Pipeline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
