#pragma once

#include <cstdint>
#include <random>

#include "ormer/series.hpp"

namespace ormer {

// Hand-rolled draws on top of mt19937_64 so streams are reproducible per
// seed independent of standard-library distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }
    double uniform01();            // [0, 1)
    double normal();               // standard normal, Box-Muller
    double exponential(double rate);
    size_t index(size_t bound);    // uniform in [0, bound)

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0;
};

struct GbmParams {
    double p0 = 100.0;
    double drift_per_sec = 0.0;
    double sigma_per_sec = 5e-4;
};

// Geometric Brownian motion on a 1-second grid starting at t = 0.
PriceSeries synth_gbm(int64_t seconds, uint64_t seed, const GbmParams& params = {});

struct RampSineParams {
    double base = 100.0;
    double ramp_total = 0.10;     // total relative drift over the series
    double sine_amplitude = 4.0;  // price units
    double sine_period = 600.0;   // seconds
    double noise_sigma = 0.4;     // price units
};

// Trending feed with a visible shape: ramp plus sine plus seeded noise.
PriceSeries synth_ramp_sine(int64_t seconds, uint64_t seed,
                            const RampSineParams& params = {});

// Flat feed around the 407 level with small seeded jitter; the fixture for
// the manipulation case study.
PriceSeries synth_case_study(int64_t seconds, uint64_t seed);

// Keeps the previous-tick value of the series at seeded exponential
// inter-arrival times (rate per second). Timestamps stay integer seconds.
PriceSeries poisson_sample(const PriceSeries& series, double rate_per_second,
                           uint64_t seed);

}  // namespace ormer
