#include "ormer/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "ormer/errors.hpp"

namespace ormer {

AlignedFeeds align(const PriceSeries& reference, const PriceSeries& candidate,
                   int64_t grid_step) {
    if (reference.empty() || candidate.empty()) {
        raise(Errc::empty_overlap, "empty series");
    }
    int64_t t0 = std::max(reference.start_time(), candidate.start_time());
    int64_t t1 = std::min(reference.end_time(), candidate.end_time());
    if (t1 < t0) {
        raise(Errc::empty_overlap, "series do not overlap in time");
    }
    AlignedFeeds a;
    a.grid_step = grid_step;
    a.t0 = t0;
    a.reference = resample_grid(reference, t0, t1, grid_step);
    a.candidate = resample_grid(candidate, t0, t1, grid_step);
    return a;
}

RegressionMetrics regression_metrics(const AlignedFeeds& a) {
    size_t n = a.reference.size();
    if (n == 0) raise(Errc::empty_overlap, "no aligned points");

    RegressionMetrics m;
    std::vector<double> abs_errors(n);
    double sum_abs = 0, sum_sq = 0, sum_ape = 0;
    for (size_t i = 0; i < n; ++i) {
        double e = a.candidate[i] - a.reference[i];
        double ae = std::abs(e);
        abs_errors[i] = ae;
        sum_abs += ae;
        sum_sq += e * e;
        m.max_err = std::max(m.max_err, ae);
        sum_ape += ae / std::abs(a.reference[i]);
    }
    m.mae = sum_abs / static_cast<double>(n);
    m.mse = sum_sq / static_cast<double>(n);
    m.mape = 100.0 * sum_ape / static_cast<double>(n);

    std::sort(abs_errors.begin(), abs_errors.end());
    m.medae = n % 2 == 1 ? abs_errors[n / 2]
                         : 0.5 * (abs_errors[n / 2 - 1] + abs_errors[n / 2]);
    return m;
}

double tweedie_deviance(const AlignedFeeds& a, int power) {
    size_t n = a.reference.size();
    if (n == 0) raise(Errc::empty_overlap, "no aligned points");
    if (power < 0 || power > 2) {
        raise(Errc::field_out_of_range, "tweedie power must be 0, 1 or 2");
    }
    double sum = 0;
    for (size_t i = 0; i < n; ++i) {
        double y = a.reference[i];
        double yh = a.candidate[i];
        switch (power) {
            case 0:
                sum += (y - yh) * (y - yh);
                break;
            case 1:
                if (y <= 0 || yh <= 0) {
                    raise(Errc::non_positive_value, "tweedie power 1");
                }
                sum += 2.0 * (y * std::log(y / yh) + yh - y);
                break;
            case 2:
                if (y <= 0 || yh <= 0) {
                    raise(Errc::non_positive_value, "tweedie power 2");
                }
                sum += 2.0 * (std::log(yh / y) + y / yh - 1.0);
                break;
        }
    }
    return sum / static_cast<double>(n);
}

double stationary_score(const std::array<double, 3>& td_candidate,
                        const std::array<double, 3>& td_baseline) {
    double sum_sq = 0;
    for (int p = 0; p < 3; ++p) {
        double d = td_candidate[p] - td_baseline[p];
        sum_sq += d * d;
    }
    return 3.0 / (3.0 + sum_sq);
}

namespace {

// Pearson correlation of x[i] against y[i + shift].
bool shifted_correlation(const std::vector<double>& x,
                         const std::vector<double>& y, size_t shift,
                         double& out) {
    size_t n = x.size() - shift;
    if (n < 2) return false;
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i + shift];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        double dx = x[i] - mx;
        double dy = y[i + shift] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) return false;
    out = sxy / std::sqrt(sxx * syy);
    return true;
}

bool is_constant(const std::vector<double>& v) {
    return std::adjacent_find(v.begin(), v.end(),
                              [](double a, double b) { return a != b; }) ==
           v.end();
}

}  // namespace

int64_t delay_lag(const AlignedFeeds& a, int64_t cap_seconds) {
    if (a.reference.size() < 2) {
        raise(Errc::empty_overlap, "need at least two grid points");
    }
    if (is_constant(a.reference) || is_constant(a.candidate)) {
        raise(Errc::zero_variance, "constant series has no defined lag");
    }
    size_t max_shift = static_cast<size_t>(cap_seconds / a.grid_step);
    max_shift = std::min(max_shift, a.reference.size() - 2);

    double best_corr = 0;
    int64_t best_lag = 0;
    bool any = false;
    for (size_t s = 0; s <= max_shift; ++s) {
        double corr;
        if (!shifted_correlation(a.reference, a.candidate, s, corr)) {
            continue;  // degenerate window at this shift
        }
        if (!any || corr > best_corr) {
            any = true;
            best_corr = corr;
            best_lag = static_cast<int64_t>(s) * a.grid_step;
        }
    }
    if (!any) {
        raise(Errc::zero_variance, "no shift produced a defined correlation");
    }
    return best_lag;
}

DelayPair measure_delays(const PriceSeries& reference,
                         const PriceSeries& candidate, int64_t cap_seconds,
                         int64_t window_seconds, int64_t grid_step) {
    AlignedFeeds full = align(reference, candidate, grid_step);
    DelayPair d;
    d.all = static_cast<double>(delay_lag(full, cap_seconds));

    // Per-window lags over fixed-width chunks of the aligned grid.
    size_t per_window =
        static_cast<size_t>(std::max<int64_t>(window_seconds / grid_step, 2));
    double sum = 0;
    size_t windows = 0;
    for (size_t off = 0; off + 2 <= full.reference.size(); off += per_window) {
        size_t len = std::min(per_window, full.reference.size() - off);
        if (len < 2) break;
        AlignedFeeds chunk;
        chunk.grid_step = grid_step;
        chunk.t0 = full.t0 + static_cast<int64_t>(off) * grid_step;
        chunk.reference.assign(full.reference.begin() + off,
                               full.reference.begin() + off + len);
        chunk.candidate.assign(full.candidate.begin() + off,
                               full.candidate.begin() + off + len);
        try {
            sum += static_cast<double>(delay_lag(chunk, cap_seconds));
            windows += 1;
        } catch (const Error& e) {
            if (e.code() != Errc::zero_variance) throw;
            // flat window; skip
        }
    }
    d.window_mean = windows > 0 ? sum / static_cast<double>(windows) : d.all;
    return d;
}

double delay_score(const DelayPair& candidate, const DelayPair& baseline) {
    double denom = candidate.all + candidate.window_mean;
    if (denom == 0) {
        raise(Errc::zero_denominator, "candidate delays are both zero");
    }
    return (baseline.all + baseline.window_mean) / denom;
}

double gas_score(double candidate_cost, double baseline_cost) {
    if (candidate_cost <= 0) {
        raise(Errc::zero_cost, "candidate cost must be positive");
    }
    return baseline_cost / candidate_cost;
}

double resistance_efficiency(double stationary, double delay, double gas,
                             const ScoreWeights& w) {
    double total = w.w0 + w.w1 + w.w2;
    if (total <= 0 || w.w0 < 0 || w.w1 < 0 || w.w2 < 0) {
        raise(Errc::field_out_of_range, "score weights");
    }
    return (w.w0 * stationary + w.w1 * delay + w.w2 * gas) / total;
}

}  // namespace ormer
