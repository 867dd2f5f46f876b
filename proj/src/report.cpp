#include "ormer/report.hpp"

#include <fstream>
#include <future>

#include "ormer/errors.hpp"
#include "ormer/synth.hpp"

namespace ormer {

namespace {

OracleRun evaluate_oracle(OracleKind kind, const PriceSeries& feed,
                          const PriceSeries& reference,
                          const HarnessConfig& cfg) {
    OracleRun run;
    run.kind = kind;
    run.replay = replay(feed, kind, cfg.window, cfg.cost,
                        cfg.twap_ring_capacity);

    AlignedFeeds aligned = align(reference, run.replay.output, cfg.grid_step);
    run.regression = regression_metrics(aligned);
    for (int p = 0; p <= 2; ++p) {
        run.tweedie[p] = tweedie_deviance(aligned, p);
    }
    try {
        run.delays = measure_delays(reference, run.replay.output,
                                    cfg.delay_cap_seconds,
                                    cfg.delay_window_seconds, cfg.grid_step);
    } catch (const Error& e) {
        if (e.code() != Errc::zero_variance) throw;
        run.delays = DelayPair{0, 0};  // flat fixtures have no defined lag
    }
    run.update_cost = run.replay.ledger.invocation_cost(OpKind::update);
    run.query_cost = run.replay.ledger.invocation_cost(OpKind::query);
    run.gas_consumption = run.update_cost.mean + run.query_cost.mean;
    return run;
}

}  // namespace

ComparisonRun run_comparison(const PriceSeries& input,
                             const std::vector<OracleKind>& oracles,
                             const HarnessConfig& cfg,
                             const PriceSeries* reference_override) {
    if (oracles.empty()) {
        raise(Errc::config_error, "no oracles requested");
    }
    ComparisonRun run;
    run.reference = reference_override ? *reference_override : input;
    run.source_points = input.size();

    run.replay_input = input;
    if (cfg.sample_rate > 0) {
        run.replay_input = poisson_sample(run.replay_input, cfg.sample_rate,
                                          cfg.seed);
    }
    if (cfg.attack_enabled()) {
        AttackResult attacked =
            inject_attack(run.replay_input, cfg.attack_spec(), cfg.seed);
        run.replay_input = std::move(attacked.series);
        run.manipulated_indices = std::move(attacked.manipulated);
    }

    // Scenarios are independent; run them concurrently and assemble by
    // index so the report ordering stays deterministic.
    std::vector<std::future<OracleRun>> futures;
    futures.reserve(oracles.size());
    for (OracleKind kind : oracles) {
        futures.push_back(std::async(std::launch::async, [&, kind] {
            return evaluate_oracle(kind, run.replay_input, run.reference, cfg);
        }));
    }
    for (auto& f : futures) {
        run.oracles.push_back(f.get());
    }

    // Scores are relative to the true-median baseline when it took part.
    const OracleRun* baseline = nullptr;
    for (const auto& r : run.oracles) {
        if (r.kind == OracleKind::true_median) baseline = &r;
    }
    if (baseline != nullptr) {
        for (auto& r : run.oracles) {
            r.stationary = stationary_score(r.tweedie, baseline->tweedie);
            if (r.delays.all + r.delays.window_mean > 0) {
                r.delay_sc = delay_score(r.delays, baseline->delays);
            } else if (baseline->delays.all + baseline->delays.window_mean == 0) {
                r.delay_sc = 1.0;  // both undetectable on this fixture
            }
            r.gas_sc = gas_score(r.gas_consumption, baseline->gas_consumption);
            if (r.stationary && r.delay_sc && r.gas_sc) {
                r.resistance = resistance_efficiency(*r.stationary, *r.delay_sc,
                                                     *r.gas_sc, cfg.weights);
            }
        }
    }

    if (cfg.attack_enabled()) {
        for (auto& r : run.oracles) {
            r.security = evaluate_security(run.reference, r.replay.output,
                                           cfg.epsilon, cfg.epsilon_percent);
        }
    }
    return run;
}

namespace {

nlohmann::ordered_json gas_section(const CostLedger& ledger, OpKind kind,
                                   const CostStats& stats) {
    uint64_t reads_cold = 0, reads_warm = 0;
    uint64_t writes_fresh = 0, writes_live = 0, writes_clear = 0;
    for (const auto& r : ledger.records()) {
        if (r.kind != kind) continue;
        reads_cold += r.reads_cold;
        reads_warm += r.reads_warm;
        writes_fresh += r.writes_zero_to_nonzero;
        writes_live += r.writes_nonzero_to_nonzero;
        writes_clear += r.writes_to_zero;
    }
    return {{"mean", stats.mean},
            {"stddev", stats.stddev},
            {"invocations", stats.invocations},
            {"reads_cold", reads_cold},
            {"reads_warm", reads_warm},
            {"writes_zero_to_nonzero", writes_fresh},
            {"writes_nonzero_to_nonzero", writes_live},
            {"writes_to_zero", writes_clear}};
}

nlohmann::ordered_json oracle_json(const OracleRun& r) {
    nlohmann::ordered_json j;
    j["oracle"] = oracle_name(r.kind);
    j["MAE"] = r.regression.mae;
    j["MSE"] = r.regression.mse;
    j["MedAE"] = r.regression.medae;
    j["MaxErr"] = r.regression.max_err;
    j["TDP"] = r.tweedie[1];
    j["TDG"] = r.tweedie[2];
    j["MAPE"] = r.regression.mape;
    if (r.stationary) j["Stationary Score"] = *r.stationary;
    j["Delay (Window)"] = r.delays.window_mean;
    j["Delay (All)"] = r.delays.all;
    if (r.delay_sc) j["Delay Score"] = *r.delay_sc;
    j["Gas Consumption"] = r.gas_consumption;
    if (r.gas_sc) j["Gas Score"] = *r.gas_sc;
    if (r.resistance) j["Resistance Efficiency Score"] = *r.resistance;
    j["gas_detail"] = {
        {"update", gas_section(r.replay.ledger, OpKind::update, r.update_cost)},
        {"query", gas_section(r.replay.ledger, OpKind::query, r.query_cost)}};
    j["output_points"] = r.replay.output.size();
    j["window_seconds"] = r.replay.window_seconds;
    if (!r.replay.persisted_hex.empty()) {
        j["persisted_state"] = r.replay.persisted_hex;
    }
    if (!r.replay.warnings.empty()) {
        j["warnings"] = r.replay.warnings;
    }
    if (r.security) {
        j["security"] = {{"epsilon", r.security->epsilon},
                         {"percent", r.security->percent},
                         {"max_deviation", r.security->max_deviation},
                         {"pass", r.security->pass}};
    }
    return j;
}

nlohmann::ordered_json config_json(const HarnessConfig& cfg) {
    nlohmann::ordered_json j;
    j["window"] = cfg.window;
    j["seed"] = cfg.seed;
    j["sample_rate"] = cfg.sample_rate;
    j["grid_step"] = cfg.grid_step;
    j["delay_cap_seconds"] = cfg.delay_cap_seconds;
    j["delay_window_seconds"] = cfg.delay_window_seconds;
    j["epsilon"] = cfg.epsilon;
    j["epsilon_percent"] = cfg.epsilon_percent;
    j["twap_ring_capacity"] = cfg.twap_ring_capacity;
    j["weights"] = {cfg.weights.w0, cfg.weights.w1, cfg.weights.w2};
    j["cost"] = {{"read_cold", cfg.cost.read_cold},
                 {"read_warm", cfg.cost.read_warm},
                 {"write_zero_to_nonzero", cfg.cost.write_zero_to_nonzero},
                 {"write_nonzero_to_nonzero", cfg.cost.write_nonzero_to_nonzero},
                 {"write_to_zero", cfg.cost.write_to_zero},
                 {"tx_base", cfg.cost.tx_base},
                 {"arithmetic_unit", cfg.cost.arithmetic_unit}};
    if (cfg.attack_enabled()) {
        j["attack"] = {{"beta", cfg.attack_beta},
                       {"window", cfg.attack_window.value_or(cfg.window)},
                       {"magnitude", cfg.attack_magnitude},
                       {"indices", cfg.attack_indices}};
    }
    return j;
}

}  // namespace

nlohmann::ordered_json report_json(const ComparisonRun& run,
                                   const HarnessConfig& cfg) {
    nlohmann::ordered_json j;
    j["config"] = config_json(cfg);
    j["input_points"] = run.replay_input.size();
    j["reference_points"] = run.reference.size();
    if (cfg.sample_rate > 0 && run.source_points > 0) {
        j["selection_ratio"] =
            static_cast<double>(run.replay_input.size()) /
            static_cast<double>(run.source_points);
    }
    if (!run.manipulated_indices.empty()) {
        j["manipulated_indices"] = run.manipulated_indices;
    }
    j["oracles"] = nlohmann::ordered_json::array();
    for (const auto& r : run.oracles) {
        j["oracles"].push_back(oracle_json(r));
    }
    return j;
}

void emit_report(const std::filesystem::path& out_dir,
                 const ComparisonRun& run, const HarnessConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        raise(Errc::io_error, "cannot create " + out_dir.string());
    }

    std::ofstream out(out_dir / "report.json");
    if (!out) {
        raise(Errc::io_error, "cannot write report.json");
    }
    out << report_json(run, cfg).dump(2) << '\n';
    if (!out) {
        raise(Errc::io_error, "short write on report.json");
    }

    for (const auto& r : run.oracles) {
        save_feed_csv(r.replay.output,
                      out_dir / (std::string(oracle_name(r.kind)) + ".csv"));
    }
}

}  // namespace ormer
