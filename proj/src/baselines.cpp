#include "ormer/baselines.hpp"

#include <algorithm>

#include "ormer/errors.hpp"

namespace ormer {

TwapAccumulator::TwapAccumulator(size_t ring_capacity)
    : capacity_(ring_capacity) {
    if (capacity_ < 2) raise(Errc::field_out_of_range, "ring capacity");
}

void TwapAccumulator::update(int64_t t, FixedQ64 p) {
    FixedQ64 acc{};
    if (!ring_.empty()) {
        const Checkpoint& prev = ring_.back();
        if (t <= prev.t) {
            raise(Errc::non_monotonic_timestamp, "twap update");
        }
        acc = fp_add(prev.a,
                     fp_mul(last_price_, FixedQ64::from_int(t - prev.t)));
    }
    ring_.push_back({t, acc});
    if (ring_.size() > capacity_) ring_.pop_front();
    last_price_ = p;
    has_last_ = true;
}

int64_t TwapAccumulator::last_time() const {
    if (ring_.empty()) raise(Errc::insufficient_history, "no checkpoints");
    return ring_.back().t;
}

size_t TwapAccumulator::nearest_checkpoint(int64_t target) const {
    auto it = std::lower_bound(
        ring_.begin(), ring_.end(), target,
        [](const Checkpoint& c, int64_t v) { return c.t < v; });
    if (it == ring_.begin()) return 0;
    if (it == ring_.end()) return ring_.size() - 1;
    size_t idx = static_cast<size_t>(it - ring_.begin());
    int64_t d_hi = ring_[idx].t - target;
    int64_t d_lo = target - ring_[idx - 1].t;
    return d_lo <= d_hi ? idx - 1 : idx;
}

FixedQ64 TwapAccumulator::window_average(size_t boundary_idx) const {
    const Checkpoint& newest = ring_.back();
    const Checkpoint& oldest = ring_[boundary_idx];
    if (newest.t == oldest.t) {
        return last_price_;  // single checkpoint; zero elapsed time
    }
    return fp_div(fp_sub(newest.a, oldest.a),
                  FixedQ64::from_int(newest.t - oldest.t));
}

FixedQ64 TwapAccumulator::query(int64_t window_seconds) const {
    if (ring_.empty() || !has_last_) {
        raise(Errc::insufficient_history, "twap query on empty state");
    }
    int64_t target = ring_.back().t - window_seconds;
    if (ring_.front().t > target) {
        raise(Errc::insufficient_history,
              "no checkpoint at or before the window start");
    }
    return window_average(nearest_checkpoint(target));
}

FixedQ64 TwapAccumulator::query_clamped(int64_t window_seconds) const {
    if (ring_.empty() || !has_last_) {
        raise(Errc::insufficient_history, "twap query on empty state");
    }
    if (ring_.size() == 1) return last_price_;
    int64_t target = ring_.back().t - window_seconds;
    if (ring_.front().t >= target) {
        return window_average(0);
    }
    return window_average(nearest_checkpoint(target));
}

Ema::Ema(FixedQ64 alpha) : alpha_(alpha) {
    if (alpha.raw <= 0 || alpha > kFpOne) {
        raise(Errc::field_out_of_range, "ema alpha must be in (0, 1]");
    }
}

Ema Ema::from_window(uint16_t window) {
    return Ema(fp_div(FixedQ64::from_int(2),
                      FixedQ64::from_int(static_cast<int64_t>(window) + 1)));
}

FixedQ64 Ema::update(FixedQ64 p) {
    if (!seeded_) {
        value_ = p;
        seeded_ = true;
    } else {
        value_ = fp_add(fp_mul(alpha_, p),
                        fp_mul(fp_sub(kFpOne, alpha_), value_));
    }
    return value_;
}

FixedQ64 Ema::value() const {
    if (!seeded_) raise(Errc::not_booted, "ema has no observations");
    return value_;
}

MedianBuffer::MedianBuffer(size_t window) : window_(window) {
    if (window == 0) raise(Errc::field_out_of_range, "median window");
}

void MedianBuffer::push(FixedQ64 p) {
    buf_.push_back(p);
    if (buf_.size() > window_) buf_.pop_front();
}

FixedQ64 MedianBuffer::median() const {
    if (buf_.empty()) raise(Errc::empty_window, "median of empty window");
    return true_median(std::vector<FixedQ64>(buf_.begin(), buf_.end()));
}

FixedQ64 true_median(std::vector<FixedQ64> values) {
    if (values.empty()) raise(Errc::empty_window, "median of empty sample");
    std::sort(values.begin(), values.end());
    size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    return fp_div(fp_add(values[n / 2 - 1], values[n / 2]),
                  FixedQ64::from_int(2));
}

}  // namespace ormer
