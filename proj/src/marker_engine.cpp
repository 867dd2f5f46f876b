#include "ormer/marker_engine.hpp"

#include <algorithm>

#include "ormer/errors.hpp"

namespace ormer {

namespace {

FixedQ64 fi(int64_t v) { return FixedQ64::from_int(v); }

// Nearest tick, ties toward zero.
int32_t round_to_tick(FixedQ64 v) {
    int128_t ip = v.raw >> 64;  // floor
    uint128_t frac = static_cast<uint128_t>(v.raw) -
                     (static_cast<uint128_t>(ip) << 64);
    constexpr uint128_t half = static_cast<uint128_t>(1) << 63;
    if (frac > half || (frac == half && ip < 0)) {
        ip += 1;
    }
    if (ip < kTickDomainMin || ip > kTickDomainMax) {
        raise(Errc::overflow, "adjusted height outside tick domain");
    }
    return static_cast<int32_t>(ip);
}

}  // namespace

FixedQ64 parabolic_adjust(FixedQ64 n_prev, FixedQ64 n_i, FixedQ64 n_next,
                          FixedQ64 h_prev, FixedQ64 h_i, FixedQ64 h_next,
                          int d) {
    if (!(n_prev < n_i && n_i < n_next)) {
        raise(Errc::degenerate_spacing, "parabolic_adjust positions");
    }
    FixedQ64 fd = fi(d);
    FixedQ64 left = fp_div(fp_mul(fp_add(fp_sub(n_i, n_prev), fd),
                                  fp_sub(h_next, h_i)),
                           fp_sub(n_next, n_i));
    FixedQ64 right = fp_div(fp_mul(fp_sub(fp_sub(n_next, n_i), fd),
                                   fp_sub(h_i, h_prev)),
                            fp_sub(n_i, n_prev));
    FixedQ64 step = fp_div(fp_mul(fd, fp_add(left, right)),
                           fp_sub(n_next, n_prev));
    return fp_add(h_i, step);
}

FixedQ64 linear_adjust(FixedQ64 n_i, FixedQ64 n_neighbor, FixedQ64 h_i,
                       FixedQ64 h_neighbor, int d) {
    if (n_neighbor == n_i) {
        raise(Errc::degenerate_spacing, "linear_adjust positions");
    }
    FixedQ64 step = fp_div(fp_mul(fi(d), fp_sub(h_neighbor, h_i)),
                           fp_sub(n_neighbor, n_i));
    return fp_add(h_i, step);
}

void MarkerEngine::reset() {
    n_ = {1, 2, 3, 4, 5};
    h_ = {0, 0, 0, 0, 0};
    count_ = 0;
}

int MarkerEngine::find_cell(Tick p) {
    if (!booted()) raise(Errc::not_booted, "find_cell before boot");
    int32_t v = p.value;
    if (v < h_[0]) {
        h_[0] = v;
        return 0;
    }
    if (v <= h_[1]) return 0;
    if (v <= h_[2]) return 1;
    if (v <= h_[3]) return 2;
    if (v <= h_[4]) return 3;
    h_[4] = v;
    return 3;
}

void MarkerEngine::observe(Tick p) {
    if (count_ >= 65535) raise(Errc::count_overflow, "marker engine at 65535");

    if (count_ < 5) {
        h_[count_] = p.value;
        ++count_;
        if (count_ == 5) {
            std::sort(h_.begin(), h_.end());
            n_ = {1, 2, 3, 4, 5};
        }
        return;
    }

    ++count_;
    int k = find_cell(p);
    for (int i = k + 1; i < 5; ++i) {
        ++n_[i];
    }

    for (int i = 1; i <= 3; ++i) {
        // Desired position count*dn[i] compared in quarter units so the
        // fractional targets stay exact.
        int64_t quarters = static_cast<int64_t>(count_) * i -
                           4 * static_cast<int64_t>(n_[i]);
        int d = 0;
        if (quarters >= 4 && n_[i + 1] - n_[i] > 1) {
            d = 1;
        } else if (quarters <= -4 && n_[i] - n_[i - 1] > 1) {
            d = -1;
        }
        if (d == 0) continue;

        FixedQ64 cand = parabolic_adjust(fi(n_[i - 1]), fi(n_[i]), fi(n_[i + 1]),
                                         fi(h_[i - 1]), fi(h_[i]), fi(h_[i + 1]),
                                         d);
        if (!(fi(h_[i - 1]) < cand && cand < fi(h_[i + 1]))) {
            cand = linear_adjust(fi(n_[i]), fi(n_[i + d]), fi(h_[i]),
                                 fi(h_[i + d]), d);
        }
        h_[i] = round_to_tick(cand);
        n_[i] = static_cast<uint32_t>(static_cast<int64_t>(n_[i]) + d);
    }
}

Tick MarkerEngine::median() const {
    if (!booted()) raise(Errc::not_booted, "median before five observations");
    return Tick{h_[2]};
}

MarkerEngine MarkerEngine::from_parts(const std::array<uint32_t, 5>& positions,
                                      const std::array<int32_t, 5>& heights,
                                      uint16_t count) {
    if (count >= 5) {
        if (positions[0] < 1 || positions[4] != count) {
            raise(Errc::field_out_of_range, "marker positions vs count");
        }
        for (int i = 0; i < 4; ++i) {
            if (positions[i] >= positions[i + 1]) {
                raise(Errc::field_out_of_range, "marker positions not increasing");
            }
            if (heights[i] > heights[i + 1]) {
                raise(Errc::field_out_of_range, "marker heights not sorted");
            }
        }
    }
    MarkerEngine e;
    e.n_ = positions;
    e.h_ = heights;
    e.count_ = count;
    return e;
}

}  // namespace ormer
