#include "ormer/fixed_point.hpp"

#include <cctype>
#include <cmath>

#include "ormer/errors.hpp"

namespace ormer {

namespace {

constexpr uint128_t kMagLimit = static_cast<uint128_t>(1) << 127;

uint128_t magnitude(int128_t v) {
    return v < 0 ? ~static_cast<uint128_t>(v) + 1 : static_cast<uint128_t>(v);
}

int128_t apply_sign(uint128_t mag, bool negative, const char* op) {
    if (negative) {
        if (mag > kMagLimit) raise(Errc::overflow, op);
        return -static_cast<int128_t>(mag - 1) - 1;  // avoids UB at -2^127
    }
    if (mag >= kMagLimit) raise(Errc::overflow, op);
    return static_cast<int128_t>(mag);
}

// |a| * |b| as a 256-bit value split into high/low 128-bit halves.
void mul_u128(uint128_t a, uint128_t b, uint128_t& hi, uint128_t& lo) {
    uint64_t a0 = static_cast<uint64_t>(a), a1 = static_cast<uint64_t>(a >> 64);
    uint64_t b0 = static_cast<uint64_t>(b), b1 = static_cast<uint64_t>(b >> 64);
    uint128_t p00 = static_cast<uint128_t>(a0) * b0;
    uint128_t p01 = static_cast<uint128_t>(a0) * b1;
    uint128_t p10 = static_cast<uint128_t>(a1) * b0;
    uint128_t p11 = static_cast<uint128_t>(a1) * b1;

    uint128_t mid = (p00 >> 64) + static_cast<uint64_t>(p01) +
                    static_cast<uint64_t>(p10);
    lo = (mid << 64) | static_cast<uint64_t>(p00);
    hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
}

}  // namespace

FixedQ64 fp_add(FixedQ64 a, FixedQ64 b) {
    int128_t r;
    if (__builtin_add_overflow(a.raw, b.raw, &r)) {
        raise(Errc::overflow, "fp_add");
    }
    return FixedQ64{r};
}

FixedQ64 fp_sub(FixedQ64 a, FixedQ64 b) {
    int128_t r;
    if (__builtin_sub_overflow(a.raw, b.raw, &r)) {
        raise(Errc::overflow, "fp_sub");
    }
    return FixedQ64{r};
}

FixedQ64 fp_neg(FixedQ64 a) {
    return FixedQ64{apply_sign(magnitude(a.raw), a.raw > 0, "fp_neg")};
}

FixedQ64 fp_mul(FixedQ64 a, FixedQ64 b) {
    bool neg = (a.raw < 0) != (b.raw < 0);
    uint128_t hi, lo;
    mul_u128(magnitude(a.raw), magnitude(b.raw), hi, lo);

    // floor(|a*b| / 2^64); for negative results floor rounds away from zero.
    if (hi >> 63) raise(Errc::overflow, "fp_mul");
    uint128_t mag = (hi << 64) | (lo >> 64);
    if (neg && (lo & 0xffffffffffffffffull) != 0) {
        mag += 1;
    }
    return FixedQ64{apply_sign(mag, neg && mag != 0, "fp_mul")};
}

FixedQ64 fp_div(FixedQ64 a, FixedQ64 b) {
    if (b.raw == 0) raise(Errc::division_by_zero, "fp_div");
    bool neg = (a.raw < 0) != (b.raw < 0);
    uint128_t ua = magnitude(a.raw);

    Word256 num;
    num.limb[1] = static_cast<uint64_t>(ua);
    num.limb[2] = static_cast<uint64_t>(ua >> 64);
    DivMod256 dm = divmod(num, magnitude(b.raw));

    if (dm.quotient.limb[2] != 0 || dm.quotient.limb[3] != 0) {
        raise(Errc::overflow, "fp_div");
    }
    uint128_t mag = dm.quotient.low128();
    if (neg && dm.remainder != 0) {
        mag += 1;
    }
    return FixedQ64{apply_sign(mag, neg && mag != 0, "fp_div")};
}

FixedQ64 FixedQ64::from_ratio(int64_t num, int64_t den) {
    if (den == 0) raise(Errc::division_by_zero, "from_ratio");
    bool neg = (num < 0) != (den < 0);
    uint128_t n = magnitude(num), d = magnitude(den);
    uint128_t q = (n << 64) / d;  // n < 2^63 so n<<64 fits
    uint128_t r = (n << 64) % d;
    if (2 * r > d) q += 1;  // round to nearest, ties toward zero
    return FixedQ64{apply_sign(q, neg && q != 0, "from_ratio")};
}

FixedQ64 FixedQ64::parse_decimal(std::string_view text) {
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i >= text.size()) raise(Errc::parse_error, "empty number");

    uint128_t int_part = 0;
    bool any_int = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        int_part = int_part * 10 + static_cast<unsigned>(text[i] - '0');
        if (int_part >= (static_cast<uint128_t>(1) << 63)) {
            raise(Errc::overflow, "integer part of decimal");
        }
        any_int = true;
    }

    // 20 fractional digits carry full 2^-64 resolution.
    constexpr uint128_t kMaxDen =
        static_cast<uint128_t>(10000000000000000000ull) * 10;
    uint128_t frac_num = 0;
    uint128_t frac_den = 1;
    bool any_frac = false;
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            any_frac = true;
            if (frac_den >= kMaxDen) {
                continue;  // beyond 2^-64 resolution; ignore further digits
            }
            frac_num = frac_num * 10 + static_cast<unsigned>(text[i] - '0');
            frac_den *= 10;
        }
    }
    if (i != text.size() || (!any_int && !any_frac)) {
        raise(Errc::parse_error, "malformed decimal number: " + std::string(text));
    }

    // round(frac_num * 2^64 / frac_den), ties toward zero
    Word256 n;
    n.limb[1] = static_cast<uint64_t>(frac_num);
    n.limb[2] = static_cast<uint64_t>(frac_num >> 64);
    DivMod256 dm = divmod(n, frac_den);
    uint128_t frac_bits = dm.quotient.low128();
    if (2 * dm.remainder > frac_den) frac_bits += 1;

    uint128_t mag = (int_part << 64) + frac_bits;
    return FixedQ64{apply_sign(mag, neg && mag != 0, "parse_decimal")};
}

std::string FixedQ64::to_decimal() const {
    uint128_t mag = magnitude(raw);
    uint128_t ip = mag >> 64;
    uint128_t frac = mag & ~uint64_t{0};

    std::string int_str;
    if (ip == 0) {
        int_str = "0";
    } else {
        while (ip > 0) {
            int_str.insert(int_str.begin(), static_cast<char>('0' + ip % 10));
            ip /= 10;
        }
    }

    // 20 fractional digits round-trips every 64-bit fraction exactly.
    std::string frac_str;
    uint128_t f = frac;
    for (int d = 0; d < 20; ++d) {
        f *= 10;
        frac_str.push_back(static_cast<char>('0' + (f >> 64)));
        f &= ~uint64_t{0};
    }
    if (2 * f > (static_cast<uint128_t>(1) << 64)) {
        // propagate round-up through the digit string
        int pos = static_cast<int>(frac_str.size()) - 1;
        while (pos >= 0 && frac_str[pos] == '9') frac_str[pos--] = '0';
        if (pos >= 0) {
            frac_str[pos] += 1;
        }  // carry past the point cannot happen: frac < 2^64 - 0.5 ulp
    }
    while (!frac_str.empty() && frac_str.back() == '0') frac_str.pop_back();

    std::string out = raw < 0 ? "-" : "";
    out += int_str;
    if (!frac_str.empty()) {
        out += "." + frac_str;
    }
    return out;
}

FixedQ64 FixedQ64::from_double(double v) {
    if (!std::isfinite(v)) raise(Errc::overflow, "from_double");
    bool neg = v < 0;
    double av = std::abs(v);
    double ipd = std::floor(av);
    if (ipd >= 9223372036854775808.0) raise(Errc::overflow, "from_double");
    uint128_t ip = static_cast<uint64_t>(ipd);
    double fd = av - ipd;  // [0, 1)
    uint64_t frac_hi = static_cast<uint64_t>(fd * 4294967296.0);
    double rem = fd * 4294967296.0 - static_cast<double>(frac_hi);
    uint64_t frac_lo = static_cast<uint64_t>(std::llround(rem * 4294967296.0));
    uint128_t m = (ip << 64) + (static_cast<uint128_t>(frac_hi) << 32) + frac_lo;
    return FixedQ64{apply_sign(m, neg && m != 0, "from_double")};
}

double FixedQ64::to_double() const {
    uint128_t mag = magnitude(raw);
    double v = std::ldexp(static_cast<double>(static_cast<uint64_t>(mag >> 64)), 0) +
               std::ldexp(static_cast<double>(static_cast<uint64_t>(mag)), -64);
    return raw < 0 ? -v : v;
}

}  // namespace ormer
