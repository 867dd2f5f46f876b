#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ormer/attack.hpp"
#include "ormer/config.hpp"
#include "ormer/errors.hpp"
#include "ormer/report.hpp"
#include "ormer/series.hpp"
#include "ormer/synth.hpp"

namespace {

using ormer::HarnessConfig;
using ormer::PriceSeries;

struct CommonOpts {
    std::string input;
    std::string config_path;
    std::string reference;
    std::string out_dir = "out";
    std::optional<uint16_t> window;
    std::optional<uint64_t> seed;
};

HarnessConfig resolve_config(const CommonOpts& opts) {
    HarnessConfig cfg;
    if (!opts.config_path.empty()) {
        cfg = ormer::load_config(opts.config_path);
    }
    if (opts.window) cfg.window = *opts.window;
    if (opts.seed) cfg.seed = *opts.seed;
    return cfg;
}

int run_comparison_command(const CommonOpts& opts,
                           const std::vector<ormer::OracleKind>& oracles) {
    HarnessConfig cfg = resolve_config(opts);
    PriceSeries input = ormer::load_feed_csv(opts.input);
    PriceSeries reference;
    const PriceSeries* ref_ptr = nullptr;
    if (!opts.reference.empty()) {
        reference = ormer::load_feed_csv(opts.reference);
        ref_ptr = &reference;
    }
    ormer::ComparisonRun run =
        ormer::run_comparison(input, oracles, cfg, ref_ptr);
    for (const auto& oracle : run.oracles) {
        for (const auto& warning : oracle.replay.warnings) {
            std::cerr << "warning: " << warning << '\n';
        }
    }
    ormer::emit_report(opts.out_dir, run, cfg);
    std::cout << (std::filesystem::path(opts.out_dir) / "report.json").string()
              << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Streaming price-oracle replay harness"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string oracle_csv;
    std::string kind = "gbm";
    int64_t seconds = 3600;
    uint32_t beta = 0;
    std::string magnitude = "10";
    std::string at_indices;
    std::string out_file;

    auto* replay_cmd = app.add_subcommand("replay", "Replay one oracle over a feed");
    replay_cmd->add_option("--input", opts.input, "Input feed CSV")->required();
    replay_cmd->add_option("--oracle", oracle_csv, "Oracle name")->required();
    replay_cmd->add_option("--window", opts.window, "Observation window");
    replay_cmd->add_option("--config", opts.config_path, "Config file");
    replay_cmd->add_option("--reference", opts.reference, "Reference feed CSV");
    replay_cmd->add_option("--seed", opts.seed, "Seed override");
    replay_cmd->add_option("--out", opts.out_dir, "Output directory");

    auto* compare_cmd = app.add_subcommand("compare", "Replay several oracles");
    compare_cmd->add_option("--input", opts.input, "Input feed CSV")->required();
    compare_cmd->add_option("--oracles", oracle_csv, "Comma-separated oracle names");
    compare_cmd->add_option("--window", opts.window, "Observation window");
    compare_cmd->add_option("--config", opts.config_path, "Config file");
    compare_cmd->add_option("--reference", opts.reference, "Reference feed CSV");
    compare_cmd->add_option("--seed", opts.seed, "Seed override");
    compare_cmd->add_option("--out", opts.out_dir, "Output directory");

    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic feed");
    synth_cmd->add_option("--kind", kind, "gbm | ramp | case-study");
    synth_cmd->add_option("--seconds", seconds, "Feed duration in seconds");
    synth_cmd->add_option("--seed", opts.seed, "Seed");
    synth_cmd->add_option("--out", out_file, "Output CSV path")->required();

    auto* attack_cmd = app.add_subcommand("attack", "Inject spikes into a feed");
    attack_cmd->add_option("--input", opts.input, "Input feed CSV")->required();
    attack_cmd->add_option("--beta", beta, "Max manipulated points per window");
    attack_cmd->add_option("--magnitude", magnitude, "Multiplicative factor");
    attack_cmd->add_option("--at", at_indices, "Explicit indices IDX[,IDX...]");
    attack_cmd->add_option("--window", opts.window, "Attack window (observations)");
    attack_cmd->add_option("--seed", opts.seed, "Seed");
    attack_cmd->add_option("--out", out_file, "Output CSV path")->required();

    try {
        app.parse(argc, argv);

        if (replay_cmd->parsed()) {
            return run_comparison_command(
                opts, {ormer::parse_oracle_kind(oracle_csv)});
        }
        if (compare_cmd->parsed()) {
            HarnessConfig cfg = resolve_config(opts);
            std::vector<ormer::OracleKind> oracles =
                oracle_csv.empty() ? cfg.oracles
                                   : ormer::parse_oracle_list(oracle_csv);
            if (oracles.empty()) {
                ormer::raise(ormer::Errc::config_error,
                             "no oracles given via --oracles or config");
            }
            return run_comparison_command(opts, oracles);
        }
        if (synth_cmd->parsed()) {
            uint64_t seed = opts.seed.value_or(42);
            PriceSeries s;
            if (kind == "gbm") {
                s = ormer::synth_gbm(seconds, seed);
            } else if (kind == "ramp") {
                s = ormer::synth_ramp_sine(seconds, seed);
            } else if (kind == "case-study") {
                s = ormer::synth_case_study(seconds, seed);
            } else {
                ormer::raise(ormer::Errc::config_error,
                             "unknown synth kind: " + kind);
            }
            ormer::save_feed_csv(s, out_file);
            std::cout << out_file << '\n';
            return 0;
        }
        if (attack_cmd->parsed()) {
            PriceSeries input = ormer::load_feed_csv(opts.input);
            ormer::AttackSpec spec;
            spec.beta = beta;
            spec.window = opts.window.value_or(25);
            spec.magnitude = ormer::FixedQ64::parse_decimal(magnitude);
            if (!at_indices.empty()) {
                spec.indices = ormer::parse_index_list(at_indices);
                if (spec.beta == 0) {
                    spec.beta = static_cast<uint32_t>(
                        std::min<size_t>(spec.indices.size(), spec.window));
                }
            }
            ormer::AttackResult result =
                ormer::inject_attack(input, spec, opts.seed.value_or(42));
            ormer::save_feed_csv(result.series, out_file);
            nlohmann::ordered_json j;
            j["output"] = out_file;
            j["manipulated_indices"] = result.manipulated;
            std::cout << j.dump() << '\n';
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ormer::Error& e) {
        nlohmann::ordered_json err;
        err["error"] = ormer::errc_name(e.code());
        err["message"] = e.what();
        std::cerr << err.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        nlohmann::ordered_json err;
        err["error"] = "Internal";
        err["message"] = e.what();
        std::cerr << err.dump() << '\n';
        return 3;
    }
    return 1;
}
