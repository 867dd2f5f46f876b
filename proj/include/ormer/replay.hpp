#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ormer/cost_model.hpp"
#include "ormer/series.hpp"

namespace ormer {

enum class OracleKind { twap, ema, true_median, ormer_med, ormer_medds };

OracleKind parse_oracle_kind(const std::string& name);
const char* oracle_name(OracleKind kind);

// Uniform two-call protocol: every oracle sees one Update and one Query per
// input point, so the cost ledgers stay comparable across oracles.
class OracleAdapter {
public:
    virtual ~OracleAdapter() = default;

    virtual void update(int64_t t, FixedQ64 p) = 0;
    virtual std::optional<FixedQ64> query() = 0;

    // Final persisted storage words (hex) for oracles with slot-exact state.
    virtual std::vector<std::string> persisted_hex() const { return {}; }
};

// `window` counts observations. `window_seconds_hint` maps it onto the time
// axis for the time-windowed TWAP (observations * mean inter-arrival).
std::unique_ptr<OracleAdapter> make_oracle(OracleKind kind, uint16_t window,
                                           SlotStore& store,
                                           int64_t window_seconds_hint,
                                           size_t twap_ring_capacity = 65536);

struct ReplayResult {
    PriceSeries output;
    CostLedger ledger;
    std::vector<std::string> persisted_hex;
    std::vector<std::string> warnings;
    size_t input_points = 0;
    int64_t window_seconds = 0;
};

ReplayResult replay(const PriceSeries& feed, OracleKind kind, uint16_t window,
                    const CostTable& table, size_t twap_ring_capacity = 65536);

struct SecurityCheck {
    double epsilon = 0;
    bool percent = false;
    double max_deviation = 0;
    bool pass = false;
};

// Pass iff the attacked oracle feed never strays more than epsilon from the
// clean reference over their overlap.
SecurityCheck evaluate_security(const PriceSeries& clean,
                                const PriceSeries& attacked_output,
                                double epsilon, bool percent = false);

}  // namespace ormer
