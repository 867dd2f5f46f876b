#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ormer/attack.hpp"
#include "ormer/cost_model.hpp"
#include "ormer/metrics.hpp"
#include "ormer/replay.hpp"

namespace ormer {

// Harness settings. Loadable from `key = value` text ('#' comments); every
// field has a documented default so a config file is optional.
struct HarnessConfig {
    std::vector<OracleKind> oracles;
    uint16_t window = 25;
    uint64_t seed = 42;
    double sample_rate = 0;  // Poisson observations per second; 0 = off
    int64_t grid_step = 1;
    int64_t delay_cap_seconds = 1800;
    int64_t delay_window_seconds = 3600;
    double epsilon = 10;
    bool epsilon_percent = false;
    size_t twap_ring_capacity = 65536;
    ScoreWeights weights;
    CostTable cost;

    // Attack block; active when beta > 0 or indices are given.
    uint32_t attack_beta = 0;
    std::optional<uint16_t> attack_window;  // defaults to `window`
    std::string attack_magnitude = "10";
    std::vector<size_t> attack_indices;

    bool attack_enabled() const {
        return attack_beta > 0 || !attack_indices.empty();
    }
    AttackSpec attack_spec() const;
};

HarnessConfig load_config(const std::filesystem::path& path);

// Parse helpers shared with the CLI.
std::vector<OracleKind> parse_oracle_list(const std::string& csv);
std::vector<size_t> parse_index_list(const std::string& csv);

}  // namespace ormer
