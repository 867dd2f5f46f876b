#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "ormer/fixed_point.hpp"

namespace ormer {

// Accumulator-based time-weighted average price. Each update extends the
// accumulator by the price that was in effect since the previous update and
// records a (timestamp, accumulator) checkpoint; queries difference the two
// checkpoints spanning the window:
//
//   twap = (a_t - a_tL) / (t - tL)
class TwapAccumulator {
public:
    explicit TwapAccumulator(size_t ring_capacity = 65536);

    void update(int64_t t, FixedQ64 p);

    // Strict query: requires a checkpoint at or before the window start.
    FixedQ64 query(int64_t window_seconds) const;

    // Warmup-tolerant variant used by the replay harness: falls back to the
    // oldest checkpoint (or the latest price when only one exists).
    FixedQ64 query_clamped(int64_t window_seconds) const;

    size_t checkpoint_count() const { return ring_.size(); }
    int64_t last_time() const;

private:
    struct Checkpoint {
        int64_t t;
        FixedQ64 a;
    };

    // Index of the checkpoint nearest to target time; older wins ties.
    size_t nearest_checkpoint(int64_t target) const;
    FixedQ64 window_average(size_t boundary_idx) const;

    std::deque<Checkpoint> ring_;
    size_t capacity_;
    FixedQ64 last_price_{};
    bool has_last_ = false;
};

// Exponential moving average seeded with the first observation.
class Ema {
public:
    explicit Ema(FixedQ64 alpha);  // alpha in (0, 1]
    static Ema from_window(uint16_t window);  // alpha = 2 / (window + 1)

    FixedQ64 update(FixedQ64 p);
    FixedQ64 value() const;
    bool seeded() const { return seeded_; }
    FixedQ64 alpha() const { return alpha_; }

private:
    FixedQ64 alpha_;
    FixedQ64 value_{};
    bool seeded_ = false;
};

// Exact sliding-window median over the last `window` prices. Doubles as the
// independent oracle in the test suites.
class MedianBuffer {
public:
    explicit MedianBuffer(size_t window);

    void push(FixedQ64 p);
    FixedQ64 median() const;  // Errc::empty_window when nothing buffered
    size_t size() const { return buf_.size(); }
    size_t window() const { return window_; }

private:
    size_t window_;
    std::deque<FixedQ64> buf_;
};

// Median of an arbitrary sample; even counts average the two middle values.
FixedQ64 true_median(std::vector<FixedQ64> values);

}  // namespace ormer
