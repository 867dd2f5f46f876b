#pragma once

#include <array>
#include <cstdint>

#include "ormer/tick_math.hpp"
#include "ormer/u256.hpp"

namespace ormer {

// One estimator state packed into a single 256-bit storage word.
//
// Layout, most-significant field first:
//   [255..240] window_size        u16
//   [239..224] observation_count  u16
//   [223..200] last_estimation    s24 (two's complement)
//   [199..120] positions[0..4]    u16 each, index 0 highest
//   [119..  0] heights[0..4]      s24 each, index 0 highest
struct PackedState {
    uint16_t window_size = 0;
    uint16_t observation_count = 0;
    int32_t last_estimation = 0;
    std::array<uint16_t, 5> positions{};
    std::array<int32_t, 5> heights{};

    friend bool operator==(const PackedState&, const PackedState&) = default;
};

// Raises Errc::field_out_of_range when a signed field does not fit 24 bits.
Word256 encode_slot(const PackedState& s);

// Total inverse of encode_slot; any word decodes (semantic validity is the
// caller's concern).
PackedState decode_slot(const Word256& w);

enum class WriteClass {
    zero_to_nonzero,
    nonzero_to_nonzero,
    to_zero,
};

WriteClass classify_write(const Word256& old_word, const Word256& new_word);

}  // namespace ormer
