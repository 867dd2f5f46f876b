#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "ormer/marker_engine.hpp"
#include "ormer/slot_codec.hpp"

namespace ormer {

// Reserved last-estimation encoding for "no completed window yet". Real
// estimations come from tick conversions bounded well inside the 24-bit
// domain, so the most negative value can never collide.
inline constexpr int32_t kNoLastEstimation = kTickDomainMin;

// Streaming sliding-window median oracle. One marker engine runs per
// window; when the window fills, its median becomes the last-window
// estimate and the engine restarts. Outputs interpolate between the last
// and current window estimates by observation count:
//
//   E_t = ((L - c) * E_last + c * E_current) / L
//
// evaluated in the price domain. The full state packs into one 256-bit
// word.
class OrmerMed {
public:
    explicit OrmerMed(uint16_t window);  // window in [6, 65535]

    // Feeds one observation and returns the blended estimate for it.
    FixedQ64 update(Tick p);

    // The estimate the current state would answer a query with. During the
    // first five observations of a window the current-window component is
    // the median of the buffered observations, so the feed has no gaps.
    FixedQ64 current_estimate() const;
    bool has_estimate() const;

    Word256 persist() const;
    static OrmerMed restore(const Word256& w);

    uint16_t window() const { return window_; }
    std::optional<Tick> last_window_median() const;
    const MarkerEngine& engine() const { return engine_; }

    friend bool operator==(const OrmerMed&, const OrmerMed&) = default;

private:
    OrmerMed() = default;

    FixedQ64 current_window_component() const;

    uint16_t window_ = 0;
    int32_t last_estimation_ = kNoLastEstimation;
    MarkerEngine engine_;
};

// Delay-suppressed variant: runs a full-window and a half-window estimator
// over the same observations and extrapolates toward the short-window trend:
//
//   p_hat = ((p_half + p_full) / 2) * (p_half / p_full)
//
// State is exactly two 256-bit words.
class OrmerMedDs {
public:
    explicit OrmerMedDs(uint16_t window);  // window >= 12 so the half window boots

    // No output until both sub-estimators have seen five observations.
    std::optional<FixedQ64> update(Tick p);
    std::optional<FixedQ64> current_estimate() const;

    std::array<Word256, 2> persist() const;
    static OrmerMedDs restore(const std::array<Word256, 2>& words);

    const OrmerMed& full() const { return full_; }
    const OrmerMed& half() const { return half_; }

    friend bool operator==(const OrmerMedDs&, const OrmerMedDs&) = default;

private:
    OrmerMedDs(OrmerMed full, OrmerMed half)
        : full_(std::move(full)), half_(std::move(half)) {}

    bool booted() const;

    OrmerMed full_;
    OrmerMed half_;
};

// Convex blend of the last- and current-window estimates by observation
// count: ((window - count) * last + count * current) / window.
FixedQ64 window_blend(FixedQ64 last, FixedQ64 current, uint16_t window,
                      uint16_t count);

// Trend-following fusion of the half- and full-window estimates.
FixedQ64 delay_suppressed_estimate(FixedQ64 p_half, FixedQ64 p_full);

}  // namespace ormer
