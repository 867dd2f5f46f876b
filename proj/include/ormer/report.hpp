#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ormer/config.hpp"
#include "ormer/metrics.hpp"
#include "ormer/replay.hpp"

namespace ormer {

struct OracleRun {
    OracleKind kind = OracleKind::twap;
    ReplayResult replay;
    RegressionMetrics regression;
    std::array<double, 3> tweedie{};  // powers 0, 1, 2
    DelayPair delays;
    CostStats update_cost;
    CostStats query_cost;
    double gas_consumption = 0;  // mean update + mean query

    std::optional<double> stationary;
    std::optional<double> delay_sc;
    std::optional<double> gas_sc;
    std::optional<double> resistance;
    std::optional<SecurityCheck> security;
};

struct ComparisonRun {
    PriceSeries reference;      // clean market proxy the metrics score against
    PriceSeries replay_input;   // after optional sampling and attack
    size_t source_points = 0;   // loaded input size before sampling
    std::vector<size_t> manipulated_indices;
    std::vector<OracleRun> oracles;
};

// Full pipeline: optional Poisson sampling, optional attack injection,
// replay of every oracle, metric evaluation against the clean reference,
// and scores relative to the true-median run when it is present.
ComparisonRun run_comparison(const PriceSeries& input,
                             const std::vector<OracleKind>& oracles,
                             const HarnessConfig& cfg,
                             const PriceSeries* reference_override = nullptr);

nlohmann::ordered_json report_json(const ComparisonRun& run,
                                   const HarnessConfig& cfg);

// Writes report.json plus one output CSV per oracle into out_dir.
void emit_report(const std::filesystem::path& out_dir,
                 const ComparisonRun& run, const HarnessConfig& cfg);

}  // namespace ormer
