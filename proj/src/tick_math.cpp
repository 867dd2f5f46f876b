#include "ormer/tick_math.hpp"

#include "ormer/errors.hpp"
#include "ormer/tick_constants.hpp"
#include "ormer/u256.hpp"

namespace ormer {

namespace {

const Word256 kOneQ128 = [] {
    Word256 w;
    w.limb[2] = 1;  // 1.0 in Q128.128
    return w;
}();

Word256 from_limbs(const std::array<uint64_t, 4>& l) {
    Word256 w;
    w.limb = l;
    return w;
}

// (a * b) >> 128 for Q128.128 operands.
Word256 mulhi_q128(const Word256& a, const Word256& b) {
    auto p = mul_full(a, b);
    if (p[6] != 0 || p[7] != 0) raise(Errc::overflow, "tick ladder product");
    return Word256{{p[2], p[3], p[4], p[5]}};
}

// Product of ladder factors selected by the bits of |t|.
Word256 ladder_product(uint32_t mag, bool negative) {
    Word256 acc = kOneQ128;
    for (unsigned k = 0; k <= 18; ++k) {
        if (mag & (uint32_t{1} << k)) {
            acc = mulhi_q128(acc, from_limbs(negative ? detail::kPowNeg[k]
                                                      : detail::kPowPos[k]));
        }
    }
    return acc;
}

}  // namespace

FixedQ64 tick_to_price(Tick t) {
    if (t.value < kMinTick || t.value > kMaxTick) {
        raise(Errc::overflow, "tick outside convertible range");
    }
    uint32_t mag = static_cast<uint32_t>(t.value < 0 ? -t.value : t.value);
    Word256 acc = ladder_product(mag, t.value < 0);

    // Q128.128 -> Q64.64, round to nearest (ties toward zero; price > 0).
    if (acc.limb[3] != 0 || (acc.limb[2] >> 63) != 0) {
        raise(Errc::overflow, "price exceeds Q64.64 range");
    }
    uint128_t raw = (static_cast<uint128_t>(acc.limb[2]) << 64) | acc.limb[1];
    if (acc.limb[0] > (uint64_t{1} << 63)) {
        raw += 1;
    }
    return FixedQ64::from_raw(static_cast<int128_t>(raw));
}

Tick price_to_tick(FixedQ64 p) {
    if (p.raw <= 0) {
        raise(Errc::non_positive_price, "price_to_tick requires p > 0");
    }
    Word256 target;  // p in Q128.128, exact
    target.limb[1] = static_cast<uint64_t>(static_cast<uint128_t>(p.raw));
    target.limb[2] = static_cast<uint64_t>(static_cast<uint128_t>(p.raw) >> 64);

    int32_t t;
    if (target >= kOneQ128) {
        // Largest t with 1.0001^t <= p.
        Word256 acc = kOneQ128;
        uint32_t mag = 0;
        for (int k = 18; k >= 0; --k) {
            Word256 trial = mulhi_q128(acc, from_limbs(detail::kPowPos[k]));
            if (trial <= target) {
                acc = trial;
                mag |= uint32_t{1} << k;
            }
        }
        Word256 mid = mulhi_q128(acc, from_limbs(detail::kSqrtStep));
        t = static_cast<int32_t>(mag) + (target > mid ? 1 : 0);
    } else {
        // Largest m with 1.0001^-m >= p, then floor and round.
        Word256 acc = kOneQ128;
        uint32_t m = 0;
        for (int k = 18; k >= 0; --k) {
            Word256 trial = mulhi_q128(acc, from_limbs(detail::kPowNeg[k]));
            if (trial >= target) {
                acc = trial;
                m |= uint32_t{1} << k;
            }
        }
        int32_t floor_t;
        Word256 floor_price;
        if (acc == target) {
            floor_t = -static_cast<int32_t>(m);
            floor_price = acc;
        } else {
            floor_t = -static_cast<int32_t>(m) - 1;
            floor_price = mulhi_q128(acc, from_limbs(detail::kPowNeg[0]));
        }
        Word256 mid = mulhi_q128(floor_price, from_limbs(detail::kSqrtStep));
        t = floor_t + (target >= mid ? 1 : 0);
    }

    if (t < kMinTick || t > kMaxTick) {
        raise(Errc::tick_out_of_range, "price outside convertible tick range");
    }
    return Tick{t};
}

}  // namespace ormer
