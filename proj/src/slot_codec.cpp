#include "ormer/slot_codec.hpp"

#include "ormer/errors.hpp"

namespace ormer {

namespace {

constexpr int32_t kS24Min = -(1 << 23);
constexpr int32_t kS24Max = (1 << 23) - 1;

uint64_t pack_s24(int32_t v, const char* field) {
    if (v < kS24Min || v > kS24Max) {
        raise(Errc::field_out_of_range, field);
    }
    return static_cast<uint64_t>(static_cast<uint32_t>(v)) & 0xffffff;
}

int32_t unpack_s24(uint64_t bits) {
    uint32_t v = static_cast<uint32_t>(bits & 0xffffff);
    if (v & 0x800000) {
        v |= 0xff000000u;
    }
    return static_cast<int32_t>(v);
}

}  // namespace

Word256 encode_slot(const PackedState& s) {
    Word256 w;
    w.set_bits(240, 16, s.window_size);
    w.set_bits(224, 16, s.observation_count);
    w.set_bits(200, 24, pack_s24(s.last_estimation, "last_estimation"));
    for (int i = 0; i < 5; ++i) {
        w.set_bits(184 - 16 * i, 16, s.positions[i]);
    }
    for (int i = 0; i < 5; ++i) {
        w.set_bits(96 - 24 * i, 24, pack_s24(s.heights[i], "height"));
    }
    return w;
}

PackedState decode_slot(const Word256& w) {
    PackedState s;
    s.window_size = static_cast<uint16_t>(w.get_bits(240, 16));
    s.observation_count = static_cast<uint16_t>(w.get_bits(224, 16));
    s.last_estimation = unpack_s24(w.get_bits(200, 24));
    for (int i = 0; i < 5; ++i) {
        s.positions[i] = static_cast<uint16_t>(w.get_bits(184 - 16 * i, 16));
    }
    for (int i = 0; i < 5; ++i) {
        s.heights[i] = unpack_s24(w.get_bits(96 - 24 * i, 24));
    }
    return s;
}

WriteClass classify_write(const Word256& old_word, const Word256& new_word) {
    if (new_word.is_zero()) return WriteClass::to_zero;
    if (old_word.is_zero()) return WriteClass::zero_to_nonzero;
    return WriteClass::nonzero_to_nonzero;
}

}  // namespace ormer
