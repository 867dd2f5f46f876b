// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ormer/attack.hpp"
#include "ormer/baselines.hpp"
#include "ormer/errors.hpp"
#include "ormer/marker_engine.hpp"
#include "ormer/metrics.hpp"
#include "ormer/ormer.hpp"
#include "ormer/replay.hpp"
#include "ormer/synth.hpp"

using namespace ormer;

namespace {

struct Checker {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void close(double got, double want, double tol, const std::string& what) {
        if (std::abs(got - want) > tol) {
            std::ostringstream os;
            os << what << " (got " << got << ", want " << want << " +/- " << tol
               << ")";
            failures.push_back(os.str());
        }
    }
};

PriceSeries constant_feed(int n, int64_t level) {
    PriceSeries s;
    for (int t = 0; t < n; ++t) s.push(t, FixedQ64::from_int(level));
    return s;
}

// ---------------------------------------------------------------------------
// 1. Score arithmetic against the published evaluation table.

void criterion_scores(Checker& c) {
    struct Row {
        const char* name;
        double st, de, gas, overall;
    };
    const Row rows[] = {
        {"twap", 0.109, 0.917, 1.794, 1.106},
        {"ema", 0.013, 1.246, 1.673, 1.170},
        {"true-median", 1.000, 1.000, 1.000, 1.000},
        {"ormer-med", 0.454, 0.896, 2.117, 1.296},
        {"ormer-medds", 0.006, 1.793, 1.259, 1.222},
    };
    for (const Row& r : rows) {
        double got = resistance_efficiency(r.st, r.de, r.gas, {1, 2, 2});
        c.close(got, r.overall, 0.001,
                std::string("overall score of ") + r.name);
    }

    const DelayPair baseline{555.0, 983};
    c.close(delay_score({627.8, 1049}, baseline), 0.917, 0.001, "twap delay score");
    c.close(delay_score({404.7, 830}, baseline), 1.246, 0.001, "ema delay score");
    c.close(delay_score({325.7, 532}, baseline), 1.793, 0.001, "medds delay score");

    c.close(gas_score(199474, 357909), 1.794, 0.001, "twap gas score");
    c.close(gas_score(213981, 357909), 1.673, 0.001, "ema gas score");
    c.close(gas_score(169062, 357909), 2.117, 0.001, "med gas score");
    c.close(gas_score(284317, 357909), 1.259, 0.001, "medds gas score");
}

// ---------------------------------------------------------------------------
// 2. Estimator accuracy against sort-based oracles.

void criterion_estimator_accuracy(Checker& c) {
    // 20 seeded streams, n = 10,000 each; booted streaming median within 2%
    // of the exact sorted median.
    for (int stream = 0; stream < 20; ++stream) {
        Rng rng(9000 + static_cast<uint64_t>(stream));
        MarkerEngine engine;
        std::vector<double> prices;
        prices.reserve(10000);
        double gbm = 100.0;
        for (int i = 0; i < 10000; ++i) {
            double p;
            if (stream % 3 == 0) {
                p = std::exp(0.1 * rng.normal());  // log-normal
            } else if (stream % 3 == 1) {
                gbm *= std::exp(2e-4 * rng.normal());  // GBM random walk
                p = gbm;
            } else {
                p = 90.0 + 20.0 * rng.uniform01();  // uniform
            }
            prices.push_back(p);
            engine.observe(price_to_tick(FixedQ64::from_double(p)));
        }
        std::vector<double> sorted = prices;
        std::sort(sorted.begin(), sorted.end());
        double exact = 0.5 * (sorted[4999] + sorted[5000]);
        double est = tick_to_price(engine.median()).to_double();
        std::ostringstream os;
        os << "stream " << stream << " median off by "
           << 100.0 * std::abs(est - exact) / exact << "%";
        c.require(std::abs(est - exact) / exact <= 0.02, os.str());
    }

    // Windowed mode within 5% of the exact sliding-window median on a
    // piecewise-constant feed with level changes aligned to the window.
    Rng rng(314);
    const uint16_t window = 25;
    OrmerMed med(window);
    MedianBuffer sliding(window);
    double level = 100.0;
    int idx = 0;
    double worst = 0;
    for (int w = 0; w < 20; ++w) {
        if (w > 0) level *= 1.0 + 0.08 * (rng.uniform01() - 0.5);  // +/- 4%
        for (int i = 0; i < window; ++i, ++idx) {
            FixedQ64 p = FixedQ64::from_double(level);
            FixedQ64 est = med.update(price_to_tick(p));
            sliding.push(p);
            if (idx < window) continue;  // both fully warmed after one window
            double exact = sliding.median().to_double();
            worst = std::max(worst,
                             std::abs(est.to_double() - exact) / exact);
        }
    }
    std::ostringstream os;
    os << "sliding-window tracking off by " << 100.0 * worst << "%";
    c.require(worst <= 0.05, os.str());
}

// ---------------------------------------------------------------------------
// 3. Manipulation resistance.

void criterion_resistance(Checker& c) {
    // Constant feed at 100, window 25, one x10 spike.
    PriceSeries clean = constant_feed(120, 100);
    AttackSpec spec;
    spec.window = 25;
    spec.beta = 1;
    spec.indices = {60};
    PriceSeries attacked = inject_attack(clean, spec, 1).series;

    ReplayResult twap = replay(attacked, OracleKind::twap, 25, CostTable{});
    SecurityCheck twap_check = evaluate_security(clean, twap.output, 10.0);
    c.close(twap_check.max_deviation, 36.0, 1e-9, "twap spike deviation");
    c.require(!twap_check.pass, "twap must fail the epsilon=10 check");

    ReplayResult med = replay(attacked, OracleKind::ormer_med, 25, CostTable{});
    SecurityCheck med_check = evaluate_security(clean, med.output, 10.0);
    c.require(med_check.max_deviation <= 1.0,
              "streaming median moved more than 1 price unit");
    c.require(med_check.pass, "streaming median must pass at epsilon=10");

    // Case-study replay: window 12, five consecutive spiked points at the
    // 407 level, injected at indices 3..7 of a warmed window. The magnitude
    // sits where a 5-of-12 burst still saturates TWAP's window average past
    // 15% while the median markers hold within 5%.
    PriceSeries base = synth_case_study(80, 2024);
    AttackSpec burst;
    burst.window = 12;
    burst.beta = 5;
    burst.indices = {27, 28, 29, 30, 31};
    burst.magnitude = FixedQ64::parse_decimal("1.5");
    PriceSeries spiked = inject_attack(base, burst, 1).series;

    ReplayResult med12 = replay(spiked, OracleKind::ormer_med, 12, CostTable{});
    ReplayResult twap12 = replay(spiked, OracleKind::twap, 12, CostTable{});

    const double level = 407.0;
    double med_during = 0, twap_during = 0;
    for (const auto& pt : med12.output.points) {
        if (pt.t >= 27 && pt.t <= 31) {
            med_during = std::max(
                med_during, std::abs(pt.p.to_double() - level) / level);
        }
    }
    for (const auto& pt : twap12.output.points) {
        if (pt.t >= 27 && pt.t <= 38) {  // spikes stay inside twap's window
            twap_during = std::max(
                twap_during, std::abs(pt.p.to_double() - level) / level);
        }
    }
    std::ostringstream os;
    os << "median deviated " << 100.0 * med_during << "% during the attack";
    c.require(med_during <= 0.05, os.str());
    c.require(twap_during > 0.15, "twap stayed under 15% during the attack");
}

// ---------------------------------------------------------------------------
// 4 & 5. Delay and error reduction of the delay-suppressed mode vs TWAP.

void delay_mae_runs(int& delay_wins, int& mae_wins, double& mean_reduction) {
    delay_wins = 0;
    mae_wins = 0;
    double reduction_sum = 0;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        PriceSeries feed = synth_ramp_sine(4000, seed);
        ReplayResult medds =
            replay(feed, OracleKind::ormer_medds, 25, CostTable{});
        ReplayResult twap = replay(feed, OracleKind::twap, 25, CostTable{});

        AlignedFeeds a_m = align(feed, medds.output);
        AlignedFeeds a_t = align(feed, twap.output);
        int64_t lag_m = delay_lag(a_m, 1800);
        int64_t lag_t = delay_lag(a_t, 1800);
        if (static_cast<double>(lag_m) <= 0.7 * static_cast<double>(lag_t)) {
            delay_wins += 1;
        }
        double mae_m = regression_metrics(a_m).mae;
        double mae_t = regression_metrics(a_t).mae;
        if (mae_m < mae_t) mae_wins += 1;
        reduction_sum += (mae_t - mae_m) / mae_t;
    }
    mean_reduction = reduction_sum / 10.0;
}

void criterion_delay(Checker& c, int delay_wins) {
    std::ostringstream os;
    os << "delay-suppressed lag beat 0.7x twap on only " << delay_wins
       << "/10 seeds";
    c.require(delay_wins >= 8, os.str());
}

void criterion_mae(Checker& c, int mae_wins, double mean_reduction) {
    std::ostringstream os;
    os << "mae strictly below twap on only " << mae_wins << "/10 seeds";
    c.require(mae_wins >= 8, os.str());
    std::ostringstream os2;
    os2 << "mean mae reduction " << 100.0 * mean_reduction << "% below 5%";
    c.require(mean_reduction >= 0.05, os2.str());
}

// ---------------------------------------------------------------------------
// 6. Storage footprint and modeled cost shape.

void criterion_cost_shape(Checker& c) {
    OrmerMed med(25);
    c.require(med.persist().to_hex().size() == 64,
              "med state must be exactly one 256-bit word");
    OrmerMedDs ds(24);
    c.require(ds.persist().size() == 2,
              "medds state must be exactly two 256-bit words");

    PriceSeries feed = synth_gbm(600, 17);
    ReplayResult med_run = replay(feed, OracleKind::ormer_med, 25, CostTable{});
    ReplayResult twap_run = replay(feed, OracleKind::twap, 25, CostTable{});
    double med_query = med_run.ledger.invocation_cost(OpKind::query).mean;
    double twap_query = twap_run.ledger.invocation_cost(OpKind::query).mean;
    std::ostringstream os;
    os << "med query cost " << med_query << " not below twap " << twap_query;
    c.require(med_query < twap_query, os.str());

    // Query cost vs window size: linear growth for the exact median, flat
    // for everything else.
    const uint16_t windows[] = {12, 25, 50, 100};
    for (OracleKind kind : {OracleKind::twap, OracleKind::ema,
                            OracleKind::ormer_med, OracleKind::ormer_medds,
                            OracleKind::true_median}) {
        std::vector<double> costs;
        for (uint16_t w : windows) {
            ReplayResult r = replay(feed, kind, w, CostTable{});
            costs.push_back(r.ledger.invocation_cost(OpKind::query).mean);
        }
        if (kind == OracleKind::true_median) {
            for (size_t i = 0; i + 1 < costs.size(); ++i) {
                c.require(costs[i] < costs[i + 1],
                          "true-median query cost must grow with the window");
            }
        } else {
            for (size_t i = 1; i < costs.size(); ++i) {
                std::ostringstream o2;
                o2 << oracle_name(kind) << " query cost varies with window ("
                   << costs[0] << " vs " << costs[i] << ")";
                c.require(costs[i] == costs[0], o2.str());
            }
        }
    }

    // Per-observation write counts: one slot for med, two for medds.
    for (const auto& rec : med_run.ledger.records()) {
        if (rec.kind != OpKind::update) continue;
        uint32_t writes = rec.writes_zero_to_nonzero +
                          rec.writes_nonzero_to_nonzero + rec.writes_to_zero;
        c.require(writes == 1, "med update must write exactly one slot");
    }
    ReplayResult ds_run = replay(feed, OracleKind::ormer_medds, 24, CostTable{});
    for (const auto& rec : ds_run.ledger.records()) {
        if (rec.kind != OpKind::update) continue;
        uint32_t writes = rec.writes_zero_to_nonzero +
                          rec.writes_nonzero_to_nonzero + rec.writes_to_zero;
        c.require(writes == 2, "medds update must write exactly two slots");
    }
}

// ---------------------------------------------------------------------------
// 7. Codec and tick conversion exactness.

void criterion_codec_exactness(Checker& c) {
    std::mt19937_64 gen(13579);
    for (int i = 0; i < 100000; ++i) {
        PackedState s;
        s.window_size = static_cast<uint16_t>(gen());
        s.observation_count = static_cast<uint16_t>(gen());
        s.last_estimation = static_cast<int32_t>(gen() % (1u << 24)) - (1 << 23);
        for (int k = 0; k < 5; ++k) {
            s.positions[k] = static_cast<uint16_t>(gen());
            s.heights[k] = static_cast<int32_t>(gen() % (1u << 24)) - (1 << 23);
        }
        if (decode_slot(encode_slot(s)) != s) {
            c.require(false, "packed state round-trip mismatch");
            return;
        }
    }

    // Ticks are identity under price round-trip across the whole
    // convertible range.
    for (int32_t t = kMinTick; t <= kMaxTick; ++t) {
        if (price_to_tick(tick_to_price(Tick{t})).value != t) {
            std::ostringstream os;
            os << "tick identity broke at " << t;
            c.require(false, os.str());
            return;
        }
    }

    // Price round-trip within one basis point across [1e-6, 1e6].
    for (int i = 0; i <= 24000; ++i) {
        double p = std::pow(10.0, -6.0 + 12.0 * (i / 24000.0));
        FixedQ64 fp = FixedQ64::from_double(p);
        if (fp.raw <= 0) continue;
        FixedQ64 back = tick_to_price(price_to_tick(fp));
        double rel = std::abs(back.to_double() / fp.to_double() - 1.0);
        if (rel > 1e-4) {
            std::ostringstream os;
            os << "tick precision " << rel << " at price " << p;
            c.require(false, os.str());
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// 8. Invariant suite.

void criterion_invariants(Checker& c) {
    // A million fuzzed observations with the marker orderings checked after
    // every step; degenerate-spacing errors must never surface.
    Rng rng(101010);
    MarkerEngine engine;
    int32_t lo = INT32_MAX, hi = INT32_MIN;
    uint64_t observations = 0;
    try {
        for (int i = 0; i < 1000000; ++i) {
            if (engine.count() == 65535) {
                engine.reset();
                lo = INT32_MAX;
                hi = INT32_MIN;
            }
            int32_t v;
            switch (rng.next_u64() % 4) {
                case 0: v = static_cast<int32_t>(rng.next_u64() % 600001) - 300000; break;
                case 1: v = static_cast<int32_t>(rng.next_u64() % 100); break;
                case 2: v = 46054; break;  // heavy ties
                default: v = (rng.next_u64() & 1) ? 299999 : -299999; break;
            }
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            engine.observe(Tick{v});
            ++observations;
            if (!engine.booted()) continue;
            const auto& h = engine.heights();
            const auto& n = engine.positions();
            for (int k = 0; k < 4; ++k) {
                if (h[k] > h[k + 1] || n[k] >= n[k + 1]) {
                    c.require(false, "marker ordering violated");
                    return;
                }
            }
            if (n[0] != 1 || n[4] != engine.count() || h[0] != lo || h[4] != hi) {
                c.require(false, "marker bracketing violated");
                return;
            }
        }
    } catch (const Error& e) {
        std::ostringstream os;
        os << "error after " << observations << " observations: " << e.what();
        c.require(false, os.str());
        return;
    }

    // Interpolation convexity.
    std::mt19937_64 gen(2468);
    for (int i = 0; i < 20000; ++i) {
        FixedQ64 a = FixedQ64::from_raw(static_cast<int128_t>(gen() >> 1) + 1);
        FixedQ64 b = FixedQ64::from_raw(static_cast<int128_t>(gen() >> 1) + 1);
        uint16_t window = static_cast<uint16_t>(6 + gen() % 60000);
        uint16_t count = static_cast<uint16_t>(gen() % (window + 1u));
        FixedQ64 blend = window_blend(a, b, window, count);
        if (blend < std::min(a, b) || blend > std::max(a, b)) {
            c.require(false, "window blend escaped its endpoints");
            return;
        }
    }

    // Trend overshoot sign of the delay-suppressed fusion.
    for (int i = 0; i < 20000; ++i) {
        double base = 1e-3 + static_cast<double>(gen() % 1000000);
        double gap = base * (1e-9 + static_cast<double>(gen() % 1000) / 5000.0);
        FixedQ64 pf = FixedQ64::from_double(base);
        FixedQ64 ph = FixedQ64::from_double(base + gap);
        if (!(delay_suppressed_estimate(ph, pf) > ph) ||
            !(delay_suppressed_estimate(pf, ph) < pf)) {
            c.require(false, "trend overshoot sign violated");
            return;
        }
    }

    // Persist/restore at every step of a 1,000-point stream reproduces the
    // uninterrupted run bit for bit.
    Rng feed_rng(77007);
    OrmerMed med_direct(25);
    Word256 med_slot = OrmerMed(25).persist();
    OrmerMedDs ds_direct(24);
    std::array<Word256, 2> ds_slots = OrmerMedDs(24).persist();
    for (int i = 0; i < 1000; ++i) {
        Tick t = price_to_tick(
            FixedQ64::from_double(250.0 + 25.0 * feed_rng.normal()));

        FixedQ64 direct = med_direct.update(t);
        OrmerMed cycled = OrmerMed::restore(med_slot);
        FixedQ64 via_slot = cycled.update(t);
        med_slot = cycled.persist();
        if (direct.raw != via_slot.raw) {
            c.require(false, "med replay diverged through persist/restore");
            return;
        }

        auto ds_out = ds_direct.update(t);
        OrmerMedDs ds_cycled = OrmerMedDs::restore(ds_slots);
        auto ds_via = ds_cycled.update(t);
        ds_slots = ds_cycled.persist();
        bool same = ds_out.has_value() == ds_via.has_value() &&
                    (!ds_out || ds_out->raw == ds_via->raw);
        if (!same) {
            c.require(false, "medds replay diverged through persist/restore");
            return;
        }
    }
}

}  // namespace

int main() {
    int delay_wins = 0, mae_wins = 0;
    double mean_reduction = 0;
    delay_mae_runs(delay_wins, mae_wins, mean_reduction);

    struct Criterion {
        int id;
        const char* title;
        std::function<void(Checker&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "score arithmetic matches the published table", criterion_scores},
        {2, "estimator accuracy vs sort oracles", criterion_estimator_accuracy},
        {3, "manipulation resistance", criterion_resistance},
        {4, "delay reduction vs twap",
         [&](Checker& c) { criterion_delay(c, delay_wins); }},
        {5, "mae reduction vs twap",
         [&](Checker& c) { criterion_mae(c, mae_wins, mean_reduction); }},
        {6, "storage footprint and cost shape", criterion_cost_shape},
        {7, "codec and tick exactness", criterion_codec_exactness},
        {8, "invariant suite", criterion_invariants},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Checker c;
        try {
            criterion.fn(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("unexpected exception: ") + e.what());
        }
        if (c.failures.empty()) {
            std::printf("[PASS] criterion %d: %s\n", criterion.id,
                        criterion.title);
        } else {
            failed += 1;
            std::printf("[FAIL] criterion %d: %s\n", criterion.id,
                        criterion.title);
            for (const auto& f : c.failures) {
                std::printf("       - %s\n", f.c_str());
            }
        }
    }
    if (failed == 0) {
        std::printf("all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("%d criteria failed\n", failed);
    }
    return failed == 0 ? 0 : 1;
}
