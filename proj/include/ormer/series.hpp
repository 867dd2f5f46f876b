#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ormer/fixed_point.hpp"

namespace ormer {

struct PricePoint {
    int64_t t = 0;  // unix seconds
    FixedQ64 p;

    friend bool operator==(const PricePoint&, const PricePoint&) = default;
};

// Timestamped spot-price feed; timestamps strictly increasing, prices
// positive.
struct PriceSeries {
    std::vector<PricePoint> points;

    bool empty() const { return points.empty(); }
    size_t size() const { return points.size(); }
    int64_t start_time() const;
    int64_t end_time() const;

    // Previous-tick value: the price in effect at time t. Raises
    // Errc::insufficient_history before the first point.
    FixedQ64 value_at(int64_t t) const;

    void push(int64_t t, FixedQ64 p);  // validates monotonicity/positivity

    friend bool operator==(const PriceSeries&, const PriceSeries&) = default;
};

// CSV rows "timestamp_unix_seconds,price_decimal"; optional header; LF or
// CRLF. Errors carry the offending row number.
PriceSeries load_feed_csv(const std::filesystem::path& path);
void save_feed_csv(const PriceSeries& series, const std::filesystem::path& path);

// Step-function resampling of the series onto a fixed grid over
// [t_start, t_end], inclusive.
std::vector<double> resample_grid(const PriceSeries& series, int64_t t_start,
                                  int64_t t_end, int64_t step);

}  // namespace ormer
