#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ormer/series.hpp"

namespace ormer {

// Two feeds resampled onto the same time grid (previous-tick interpolation
// over the overlapping range).
struct AlignedFeeds {
    std::vector<double> reference;
    std::vector<double> candidate;
    int64_t grid_step = 1;
    int64_t t0 = 0;
};

// Raises Errc::empty_overlap when the series do not share a time range.
AlignedFeeds align(const PriceSeries& reference, const PriceSeries& candidate,
                   int64_t grid_step = 1);

struct RegressionMetrics {
    double mae = 0;
    double mse = 0;
    double medae = 0;
    double max_err = 0;
    double mape = 0;  // percent
};

RegressionMetrics regression_metrics(const AlignedFeeds& a);

// Tweedie deviance, powers 0 (squared error), 1 (Poisson), 2 (Gamma).
// Powers 1 and 2 require strictly positive values on both sides.
double tweedie_deviance(const AlignedFeeds& a, int power);

// 3 * (1/S - 1) = sum over p of (TD_p(X) - TD_p(baseline))^2, solved for S.
// Equals 1 exactly when the candidate matches the baseline deviances.
double stationary_score(const std::array<double, 3>& td_candidate,
                        const std::array<double, 3>& td_baseline);

// Lag (in seconds, multiples of the grid step) maximizing the Pearson
// correlation between the reference and the candidate advanced by the lag.
// Ties resolve toward the smallest lag. Raises Errc::zero_variance when
// either aligned series is constant.
int64_t delay_lag(const AlignedFeeds& a, int64_t cap_seconds);

struct DelayPair {
    double window_mean = 0;  // mean of per-window lags
    double all = 0;          // lag over the full series
};

DelayPair measure_delays(const PriceSeries& reference,
                         const PriceSeries& candidate, int64_t cap_seconds,
                         int64_t window_seconds = 3600,
                         int64_t grid_step = 1);

double delay_score(const DelayPair& candidate, const DelayPair& baseline);

// baseline_cost / candidate_cost; raises Errc::zero_cost on zero divisor.
double gas_score(double candidate_cost, double baseline_cost);

struct ScoreWeights {
    double w0 = 1;
    double w1 = 2;
    double w2 = 2;
};

double resistance_efficiency(double stationary, double delay, double gas,
                             const ScoreWeights& w = {});

}  // namespace ormer
