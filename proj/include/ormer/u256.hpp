#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace ormer {

using uint128_t = unsigned __int128;
using int128_t = __int128;

// Unsigned 256-bit word, little-endian 64-bit limbs. Used for storage slots
// and as the working type of the tick conversion ladder.
struct Word256 {
    std::array<uint64_t, 4> limb{0, 0, 0, 0};

    static Word256 from_u64(uint64_t v) { return Word256{{v, 0, 0, 0}}; }
    static Word256 from_u128(uint128_t v) {
        return Word256{{static_cast<uint64_t>(v), static_cast<uint64_t>(v >> 64), 0, 0}};
    }

    bool is_zero() const { return (limb[0] | limb[1] | limb[2] | limb[3]) == 0; }

    uint128_t low128() const {
        return (static_cast<uint128_t>(limb[1]) << 64) | limb[0];
    }
    uint128_t high128() const {
        return (static_cast<uint128_t>(limb[3]) << 64) | limb[2];
    }

    // Bit-field access, LSB-indexed. width <= 64.
    uint64_t get_bits(unsigned lo, unsigned width) const;
    void set_bits(unsigned lo, unsigned width, uint64_t value);

    Word256 operator<<(unsigned n) const;
    Word256 operator>>(unsigned n) const;
    Word256 operator|(const Word256& o) const;
    Word256 operator&(const Word256& o) const;

    friend bool operator==(const Word256&, const Word256&) = default;

    // -1, 0, +1
    int cmp(const Word256& o) const;
    bool operator<(const Word256& o) const { return cmp(o) < 0; }
    bool operator<=(const Word256& o) const { return cmp(o) <= 0; }
    bool operator>(const Word256& o) const { return cmp(o) > 0; }
    bool operator>=(const Word256& o) const { return cmp(o) >= 0; }

    // Wrapping add/sub; carry/borrow reported through the flag.
    static Word256 add(const Word256& a, const Word256& b, bool& carry);
    static Word256 sub(const Word256& a, const Word256& b, bool& borrow);

    // 64 hex chars, big-endian, no prefix.
    std::string to_hex() const;
    static Word256 from_hex(std::string_view hex);
};

// Full 256x256 -> 512 bit product, little-endian 64-bit limbs.
std::array<uint64_t, 8> mul_full(const Word256& a, const Word256& b);

// floor(n / d) and n mod d for a 256-bit numerator and nonzero 128-bit
// divisor. Knuth algorithm D over 32-bit digits.
struct DivMod256 {
    Word256 quotient;
    uint128_t remainder;
};
DivMod256 divmod(const Word256& n, uint128_t d);

}  // namespace ormer
