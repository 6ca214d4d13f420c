#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace homeguard {

/// Seeded random stream with platform-independent draws.
///
/// std::mt19937_64's output sequence is fixed by the standard, but the
/// standard distributions are not, so bounded integers and normals are
/// derived here directly from the raw engine output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound). bound must be > 0.
    std::size_t index(std::size_t bound);

    /// Uniform real in [0, 1) with 53 bits of resolution.
    double uniform01();

    /// Standard normal via Box-Muller.
    double gaussian();

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace homeguard
