#include "ormer/synth.hpp"

#include <cmath>
#include <numbers>

#include "ormer/errors.hpp"

namespace ormer {

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

double Rng::exponential(double rate) {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    return -std::log(u) / rate;
}

size_t Rng::index(size_t bound) {
    // modulo bias is irrelevant at harness scale
    return bound == 0 ? 0 : static_cast<size_t>(next_u64() % bound);
}

PriceSeries synth_gbm(int64_t seconds, uint64_t seed, const GbmParams& params) {
    if (seconds < 1) raise(Errc::field_out_of_range, "duration");
    Rng rng(seed);
    PriceSeries s;
    double p = params.p0;
    for (int64_t t = 0; t < seconds; ++t) {
        s.push(t, FixedQ64::from_double(p));
        double step = params.drift_per_sec -
                      0.5 * params.sigma_per_sec * params.sigma_per_sec +
                      params.sigma_per_sec * rng.normal();
        p *= std::exp(step);
    }
    return s;
}

PriceSeries synth_ramp_sine(int64_t seconds, uint64_t seed,
                            const RampSineParams& params) {
    if (seconds < 1) raise(Errc::field_out_of_range, "duration");
    Rng rng(seed);
    PriceSeries s;
    for (int64_t t = 0; t < seconds; ++t) {
        double frac = static_cast<double>(t) / static_cast<double>(seconds);
        double v = params.base * (1.0 + params.ramp_total * frac) +
                   params.sine_amplitude *
                       std::sin(2.0 * std::numbers::pi *
                                static_cast<double>(t) / params.sine_period) +
                   params.noise_sigma * rng.normal();
        if (v < 1e-9) v = 1e-9;
        s.push(t, FixedQ64::from_double(v));
    }
    return s;
}

PriceSeries synth_case_study(int64_t seconds, uint64_t seed) {
    if (seconds < 1) raise(Errc::field_out_of_range, "duration");
    Rng rng(seed);
    PriceSeries s;
    for (int64_t t = 0; t < seconds; ++t) {
        double v = 407.0 * (1.0 + 0.002 * rng.normal());
        s.push(t, FixedQ64::from_double(v));
    }
    return s;
}

PriceSeries poisson_sample(const PriceSeries& series, double rate_per_second,
                           uint64_t seed) {
    if (rate_per_second <= 0) {
        raise(Errc::field_out_of_range, "sampling rate must be positive");
    }
    if (series.empty()) return series;

    Rng rng(seed);
    PriceSeries out;
    double cursor = static_cast<double>(series.start_time());
    int64_t last_emitted = series.start_time() - 1;
    int64_t end = series.end_time();

    // First arrival is at the stream start so the sampled feed never opens
    // with a gap.
    while (true) {
        int64_t t = static_cast<int64_t>(std::ceil(cursor));
        if (t > end) break;
        if (t > last_emitted) {
            out.push(t, series.value_at(t));
            last_emitted = t;
        }
        cursor += rng.exponential(rate_per_second);
    }
    return out;
}

}  // namespace ormer
