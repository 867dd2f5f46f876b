#pragma once

#include <cstdint>
#include <vector>

#include "ormer/series.hpp"

namespace ormer {

// Multiplicative spike injection: at most `beta` points per observation
// window are scaled by `magnitude`. Targets come from explicit indices when
// given, otherwise `beta` seeded picks per full window.
struct AttackSpec {
    uint32_t beta = 0;
    uint16_t window = 25;
    std::vector<size_t> indices;  // empty selects randomly per window
    FixedQ64 magnitude = FixedQ64::from_int(10);
};

struct AttackResult {
    PriceSeries series;
    std::vector<size_t> manipulated;
};

AttackResult inject_attack(const PriceSeries& series, const AttackSpec& spec,
                           uint64_t seed);

}  // namespace ormer
