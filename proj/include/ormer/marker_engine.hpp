#pragma once

#include <array>
#include <cstdint>

#include "ormer/fixed_point.hpp"
#include "ormer/tick_math.hpp"

namespace ormer {

// Piecewise-parabolic height update: fits h = a*n^2 + b*n + c through the
// three (position, height) pairs and evaluates one step of d in position.
// Positions must be strictly increasing or Errc::degenerate_spacing is
// raised.
FixedQ64 parabolic_adjust(FixedQ64 n_prev, FixedQ64 n_i, FixedQ64 n_next,
                          FixedQ64 h_prev, FixedQ64 h_i, FixedQ64 h_next,
                          int d);

// Fallback height update along the segment toward the neighbor at i+d.
FixedQ64 linear_adjust(FixedQ64 n_i, FixedQ64 n_neighbor, FixedQ64 h_i,
                       FixedQ64 h_neighbor, int d);

// Five-marker streaming median estimator over the tick domain. The markers
// track minimum, quartiles, and maximum; marker 2 is the median estimate.
//
// The first five observations are buffered in the height slots and sorted on
// the fifth; afterwards each observation increments the positions of markers
// above its cell and nudges the three interior markers toward their desired
// quantile positions, adjusting heights with the parabolic formula (or the
// linear fallback when the parabola would break height ordering). Adjusted
// heights are rounded to the nearest tick, ties toward zero.
class MarkerEngine {
public:
    MarkerEngine() { reset(); }

    void reset();

    // Feeds one observation. Raises Errc::count_overflow at 65535.
    void observe(Tick p);

    // Locates the cell k with h[k] <= p <= h[k+1], extending h[0]/h[4] when
    // p is a new extreme. Requires a booted engine.
    int find_cell(Tick p);

    bool booted() const { return count_ >= 5; }
    Tick median() const;  // h[2]; Errc::not_booted before five observations

    uint16_t count() const { return static_cast<uint16_t>(count_); }
    const std::array<uint32_t, 5>& positions() const { return n_; }
    const std::array<int32_t, 5>& heights() const { return h_; }

    // Reassembles an engine from persisted fields, validating the marker
    // invariants for booted states.
    static MarkerEngine from_parts(const std::array<uint32_t, 5>& positions,
                                   const std::array<int32_t, 5>& heights,
                                   uint16_t count);

    friend bool operator==(const MarkerEngine&, const MarkerEngine&) = default;

private:
    std::array<uint32_t, 5> n_{};
    std::array<int32_t, 5> h_{};
    uint32_t count_ = 0;
};

}  // namespace ormer
