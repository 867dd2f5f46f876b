#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ormer/u256.hpp"

namespace ormer {

// Signed 64.64 fixed point. raw holds value * 2^64 in a 128-bit integer.
// All arithmetic is integer-exact and platform-independent: mul/div floor
// the true rational result, and out-of-range results raise Errc::overflow.
struct FixedQ64 {
    int128_t raw = 0;

    static constexpr FixedQ64 from_raw(int128_t r) { return FixedQ64{r}; }
    static FixedQ64 from_int(int64_t v) {
        return FixedQ64{static_cast<int128_t>(v) << 64};
    }
    // Exact value num/den, rounded to nearest (ties toward zero).
    static FixedQ64 from_ratio(int64_t num, int64_t den);

    // Exact decimal-string conversions; the committed I/O path never goes
    // through binary floating point.
    static FixedQ64 parse_decimal(std::string_view text);
    std::string to_decimal() const;

    static FixedQ64 from_double(double v);
    double to_double() const;

    bool is_zero() const { return raw == 0; }
    bool is_negative() const { return raw < 0; }

    friend bool operator==(const FixedQ64&, const FixedQ64&) = default;
    friend auto operator<=>(const FixedQ64& a, const FixedQ64& b) {
        return a.raw <=> b.raw;
    }
};

FixedQ64 fp_add(FixedQ64 a, FixedQ64 b);
FixedQ64 fp_sub(FixedQ64 a, FixedQ64 b);
FixedQ64 fp_neg(FixedQ64 a);
// floor((a.raw * b.raw) / 2^64)
FixedQ64 fp_mul(FixedQ64 a, FixedQ64 b);
// floor((a.raw * 2^64) / b.raw)
FixedQ64 fp_div(FixedQ64 a, FixedQ64 b);

inline FixedQ64 operator+(FixedQ64 a, FixedQ64 b) { return fp_add(a, b); }
inline FixedQ64 operator-(FixedQ64 a, FixedQ64 b) { return fp_sub(a, b); }
inline FixedQ64 operator-(FixedQ64 a) { return fp_neg(a); }
inline FixedQ64 operator*(FixedQ64 a, FixedQ64 b) { return fp_mul(a, b); }
inline FixedQ64 operator/(FixedQ64 a, FixedQ64 b) { return fp_div(a, b); }

inline constexpr FixedQ64 kFpOne = FixedQ64{static_cast<int128_t>(1) << 64};

}  // namespace ormer
