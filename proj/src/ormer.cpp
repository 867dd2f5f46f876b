#include "ormer/ormer.hpp"

#include <algorithm>

#include "ormer/errors.hpp"

namespace ormer {

OrmerMed::OrmerMed(uint16_t window) : window_(window) {
    if (window < 6) {
        raise(Errc::field_out_of_range, "window must be at least 6");
    }
}

FixedQ64 OrmerMed::update(Tick p) {
    engine_.observe(p);
    FixedQ64 est = current_estimate();
    if (engine_.count() == window_) {
        last_estimation_ = engine_.median().value;
        engine_.reset();
    }
    return est;
}

bool OrmerMed::has_estimate() const {
    return engine_.count() > 0 || last_estimation_ != kNoLastEstimation;
}

FixedQ64 OrmerMed::current_window_component() const {
    uint16_t c = engine_.count();
    if (c >= 5) {
        return tick_to_price(engine_.median());
    }
    // Median of the observations buffered so far in the height slots.
    std::array<int32_t, 5> buf{};
    std::copy_n(engine_.heights().begin(), c, buf.begin());
    std::sort(buf.begin(), buf.begin() + c);
    if (c % 2 == 1) {
        return tick_to_price(Tick{buf[c / 2]});
    }
    FixedQ64 lo = tick_to_price(Tick{buf[c / 2 - 1]});
    FixedQ64 hi = tick_to_price(Tick{buf[c / 2]});
    return fp_div(fp_add(lo, hi), FixedQ64::from_int(2));
}

FixedQ64 window_blend(FixedQ64 last, FixedQ64 current, uint16_t window,
                      uint16_t count) {
    if (window == 0 || count > window) {
        raise(Errc::field_out_of_range, "window blend arguments");
    }
    FixedQ64 num = fp_add(fp_mul(FixedQ64::from_int(window - count), last),
                          fp_mul(FixedQ64::from_int(count), current));
    return fp_div(num, FixedQ64::from_int(window));
}

FixedQ64 OrmerMed::current_estimate() const {
    uint16_t c = engine_.count();
    bool have_last = last_estimation_ != kNoLastEstimation;
    if (c == 0) {
        if (!have_last) {
            raise(Errc::not_booted, "no observations yet");
        }
        return tick_to_price(Tick{last_estimation_});
    }
    FixedQ64 current = current_window_component();
    if (!have_last) {
        return current;  // first window
    }
    return window_blend(tick_to_price(Tick{last_estimation_}), current,
                        window_, c);
}

std::optional<Tick> OrmerMed::last_window_median() const {
    if (last_estimation_ == kNoLastEstimation) return std::nullopt;
    return Tick{last_estimation_};
}

Word256 OrmerMed::persist() const {
    PackedState s;
    s.window_size = window_;
    s.observation_count = engine_.count();
    s.last_estimation = last_estimation_;
    for (int i = 0; i < 5; ++i) {
        s.positions[i] = static_cast<uint16_t>(engine_.positions()[i]);
        s.heights[i] = engine_.heights()[i];
    }
    return encode_slot(s);
}

OrmerMed OrmerMed::restore(const Word256& w) {
    PackedState s = decode_slot(w);
    if (s.window_size < 6) {
        raise(Errc::field_out_of_range, "persisted window below 6");
    }
    if (s.observation_count > s.window_size) {
        raise(Errc::field_out_of_range, "persisted count exceeds window");
    }
    std::array<uint32_t, 5> pos;
    for (int i = 0; i < 5; ++i) pos[i] = s.positions[i];

    OrmerMed med;
    med.window_ = s.window_size;
    med.last_estimation_ = s.last_estimation;
    med.engine_ = MarkerEngine::from_parts(pos, s.heights, s.observation_count);
    return med;
}

FixedQ64 delay_suppressed_estimate(FixedQ64 p_half, FixedQ64 p_full) {
    FixedQ64 mean = fp_div(fp_add(p_half, p_full), FixedQ64::from_int(2));
    FixedQ64 ratio = fp_div(p_half, p_full);
    return fp_mul(mean, ratio);
}

namespace {

uint16_t checked_half_window(uint16_t window) {
    if (window < 12) {
        raise(Errc::field_out_of_range,
              "delay-suppressed mode needs window >= 12");
    }
    return static_cast<uint16_t>(window / 2);
}

}  // namespace

OrmerMedDs::OrmerMedDs(uint16_t window)
    : full_(window), half_(checked_half_window(window)) {}

bool OrmerMedDs::booted() const {
    auto seen_five = [](const OrmerMed& m) {
        return m.engine().count() >= 5 || m.last_window_median().has_value();
    };
    return seen_five(full_) && seen_five(half_);
}

std::optional<FixedQ64> OrmerMedDs::update(Tick p) {
    FixedQ64 p_full = full_.update(p);
    FixedQ64 p_half = half_.update(p);
    if (!booted()) return std::nullopt;
    return delay_suppressed_estimate(p_half, p_full);
}

std::optional<FixedQ64> OrmerMedDs::current_estimate() const {
    if (!booted()) return std::nullopt;
    return delay_suppressed_estimate(half_.current_estimate(),
                                     full_.current_estimate());
}

std::array<Word256, 2> OrmerMedDs::persist() const {
    return {full_.persist(), half_.persist()};
}

OrmerMedDs OrmerMedDs::restore(const std::array<Word256, 2>& words) {
    OrmerMed full = OrmerMed::restore(words[0]);
    OrmerMed half = OrmerMed::restore(words[1]);
    if (half.window() != full.window() / 2) {
        raise(Errc::field_out_of_range,
              "half window does not match full window");
    }
    return OrmerMedDs(std::move(full), std::move(half));
}

}  // namespace ormer
