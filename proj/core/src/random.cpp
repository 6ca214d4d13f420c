#include "homeguard/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace homeguard {

std::size_t Rng::index(std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::index: bound must be positive");
    const auto b = static_cast<std::uint64_t>(bound);
    // Rejection sampling: discard the partial top bucket so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return static_cast<std::size_t>(draw % b);
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

}  // namespace homeguard
