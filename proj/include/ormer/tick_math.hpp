#pragma once

#include <cstdint>

#include "ormer/fixed_point.hpp"

namespace ormer {

// Integer log-price: tau = log base 1.0001 of price. One tick is about one
// basis point. Storage allows the full signed 24-bit domain; conversions are
// supported on [kMinTick, kMaxTick] where the Q64.64 price keeps at least
// ~20 bits of relative precision, which the round-trip identity needs.
struct Tick {
    int32_t value = 0;

    friend bool operator==(const Tick&, const Tick&) = default;
    friend auto operator<=>(const Tick&, const Tick&) = default;
};

inline constexpr int32_t kTickDomainMin = -(1 << 23);
inline constexpr int32_t kTickDomainMax = (1 << 23) - 1;
inline constexpr int32_t kMinTick = -300000;
inline constexpr int32_t kMaxTick = 300000;

// 1.0001^t, rounded to the nearest representable Q64.64 value (ties toward
// zero). Raises Errc::overflow outside [kMinTick, kMaxTick].
FixedQ64 tick_to_price(Tick t);

// round(log_1.0001(p)) with deterministic integer arithmetic: a ladder of
// precomputed 1.0001^(2^k) factors in Q128.128, no runtime transcendentals.
// Raises Errc::non_positive_price for p <= 0 and Errc::tick_out_of_range
// when the result would leave the supported conversion range.
Tick price_to_tick(FixedQ64 p);

}  // namespace ormer
