#include "ormer/replay.hpp"

#include <algorithm>
#include <cmath>

#include "ormer/baselines.hpp"
#include "ormer/errors.hpp"
#include "ormer/metrics.hpp"
#include "ormer/ormer.hpp"
#include "ormer/tick_math.hpp"

namespace ormer {

OracleKind parse_oracle_kind(const std::string& name) {
    if (name == "twap") return OracleKind::twap;
    if (name == "ema") return OracleKind::ema;
    if (name == "true-median") return OracleKind::true_median;
    if (name == "ormer-med") return OracleKind::ormer_med;
    if (name == "ormer-medds") return OracleKind::ormer_medds;
    raise(Errc::config_error, "unknown oracle: " + name);
}

const char* oracle_name(OracleKind kind) {
    switch (kind) {
        case OracleKind::twap: return "twap";
        case OracleKind::ema: return "ema";
        case OracleKind::true_median: return "true-median";
        case OracleKind::ormer_med: return "ormer-med";
        case OracleKind::ormer_medds: return "ormer-medds";
    }
    return "?";
}

namespace {

class OrmerMedAdapter : public OracleAdapter {
public:
    OrmerMedAdapter(uint16_t window, SlotStore& store)
        : window_(window), store_(store) {}

    void update(int64_t, FixedQ64 p) override {
        Tick tick = price_to_tick(p);
        Word256 w = store_.read(kSlot);
        OrmerMed med = started_ ? OrmerMed::restore(w) : OrmerMed(window_);
        med.update(tick);
        store_.write(kSlot, med.persist());
        started_ = true;
    }

    std::optional<FixedQ64> query() override {
        Word256 w = store_.read(kSlot);
        if (!started_) return std::nullopt;
        OrmerMed med = OrmerMed::restore(w);
        if (!med.has_estimate()) return std::nullopt;
        return med.current_estimate();
    }

    std::vector<std::string> persisted_hex() const override {
        return {store_.peek(kSlot).to_hex()};
    }

private:
    static constexpr uint64_t kSlot = 0;
    uint16_t window_;
    SlotStore& store_;
    bool started_ = false;
};

class OrmerMedDsAdapter : public OracleAdapter {
public:
    OrmerMedDsAdapter(uint16_t window, SlotStore& store)
        : window_(window), store_(store) {}

    void update(int64_t, FixedQ64 p) override {
        Tick tick = price_to_tick(p);
        std::array<Word256, 2> words{store_.read(0), store_.read(1)};
        OrmerMedDs ds =
            started_ ? OrmerMedDs::restore(words) : OrmerMedDs(window_);
        ds.update(tick);
        auto out = ds.persist();
        store_.write(0, out[0]);
        store_.write(1, out[1]);
        started_ = true;
    }

    std::optional<FixedQ64> query() override {
        std::array<Word256, 2> words{store_.read(0), store_.read(1)};
        if (!started_) return std::nullopt;
        return OrmerMedDs::restore(words).current_estimate();
    }

    std::vector<std::string> persisted_hex() const override {
        return {store_.peek(0).to_hex(), store_.peek(1).to_hex()};
    }

private:
    uint16_t window_;
    SlotStore& store_;
    bool started_ = false;
};

// Accumulator oracle with a checkpoint ring. Storage traffic mirrors the
// shape of an on-chain deployment: updates touch the metadata word and one
// ring slot; queries binary-search the ring for the window boundary.
class TwapAdapter : public OracleAdapter {
public:
    TwapAdapter(SlotStore& store, int64_t window_seconds, size_t capacity = 65536)
        : store_(store), window_seconds_(window_seconds), capacity_(capacity),
          twap_(capacity) {}

    void update(int64_t t, FixedQ64 p) override {
        store_.read(kMeta);
        twap_.update(t, p);
        store_.write(kRingBase + next_slot_ % capacity_, checkpoint_word(t, p));
        next_slot_ += 1;
        store_.write(kMeta, meta_word());
    }

    std::optional<FixedQ64> query() override {
        store_.read(kMeta);
        size_t n = twap_.checkpoint_count();
        if (n == 0) return std::nullopt;
        // Bisection probes for the window-boundary checkpoint, then the
        // newest checkpoint. The arithmetic runs on the mirrored in-memory
        // accumulator; only the access trace feeds the cost model.
        size_t span = n, probe = n / 2;
        while (span > 1) {
            store_.read(kRingBase + ring_index(probe));
            span = (span + 1) / 2;
            probe /= 2;
        }
        store_.read(kRingBase + ring_index(n - 1));
        return twap_.query_clamped(window_seconds_);
    }

private:
    static constexpr uint64_t kMeta = 0;
    static constexpr uint64_t kRingBase = 1;

    size_t ring_index(size_t logical) const {
        size_t oldest = next_slot_ >= capacity_ ? next_slot_ - capacity_ : 0;
        return (oldest + logical) % capacity_;
    }

    Word256 checkpoint_word(int64_t t, FixedQ64 p) const {
        Word256 w = Word256::from_u128(static_cast<uint128_t>(p.raw));
        w.limb[2] = static_cast<uint64_t>(t) + 1;
        return w;
    }

    Word256 meta_word() const {
        return Word256::from_u128(
            (static_cast<uint128_t>(next_slot_) << 64) | 1u);
    }

    SlotStore& store_;
    int64_t window_seconds_;
    size_t capacity_;
    size_t next_slot_ = 0;
    TwapAccumulator twap_;
};

class EmaAdapter : public OracleAdapter {
public:
    EmaAdapter(uint16_t window, SlotStore& store)
        : store_(store), ema_(Ema::from_window(window)) {}

    void update(int64_t, FixedQ64 p) override {
        store_.read(kSlot);
        FixedQ64 v = ema_.update(p);
        store_.write(kSlot, Word256::from_u128(static_cast<uint128_t>(v.raw)));
    }

    std::optional<FixedQ64> query() override {
        store_.read(kSlot);
        if (!ema_.seeded()) return std::nullopt;
        return ema_.value();
    }

private:
    static constexpr uint64_t kSlot = 0;
    SlotStore& store_;
    Ema ema_;
};

// Pre-allocated ring of price slots; queries read the whole live window to
// rebuild the sample, so query cost grows with the window.
class TrueMedianAdapter : public OracleAdapter {
public:
    TrueMedianAdapter(uint16_t window, SlotStore& store)
        : store_(store), window_(window), buffer_(window) {}

    void update(int64_t, FixedQ64 p) override {
        store_.read(kMeta);
        buffer_.push(p);
        store_.write(kRingBase + next_ % window_,
                     Word256::from_u128(static_cast<uint128_t>(p.raw)));
        next_ += 1;
        store_.write(kMeta, Word256::from_u128(
                                (static_cast<uint128_t>(next_) << 64) | 1u));
    }

    std::optional<FixedQ64> query() override {
        store_.read(kMeta);
        if (buffer_.size() == 0) return std::nullopt;
        for (size_t i = 0; i < buffer_.size(); ++i) {
            store_.read(kRingBase + i);
        }
        return buffer_.median();
    }

private:
    static constexpr uint64_t kMeta = 0;
    static constexpr uint64_t kRingBase = 1;
    SlotStore& store_;
    size_t window_;
    size_t next_ = 0;
    MedianBuffer buffer_;
};

}  // namespace

std::unique_ptr<OracleAdapter> make_oracle(OracleKind kind, uint16_t window,
                                           SlotStore& store,
                                           int64_t window_seconds_hint,
                                           size_t twap_ring_capacity) {
    switch (kind) {
        case OracleKind::twap:
            return std::make_unique<TwapAdapter>(store, window_seconds_hint,
                                                 twap_ring_capacity);
        case OracleKind::ema:
            return std::make_unique<EmaAdapter>(window, store);
        case OracleKind::true_median:
            return std::make_unique<TrueMedianAdapter>(window, store);
        case OracleKind::ormer_med:
            return std::make_unique<OrmerMedAdapter>(window, store);
        case OracleKind::ormer_medds:
            return std::make_unique<OrmerMedDsAdapter>(window, store);
    }
    raise(Errc::config_error, "unhandled oracle kind");
}

ReplayResult replay(const PriceSeries& feed, OracleKind kind, uint16_t window,
                    const CostTable& table, size_t twap_ring_capacity) {
    if (feed.empty()) {
        raise(Errc::insufficient_history, "cannot replay an empty feed");
    }
    if (window < 6) {
        raise(Errc::config_error, "window must be at least 6 observations");
    }
    if (kind == OracleKind::ormer_medds && window < 12) {
        raise(Errc::config_error,
              "ormer-medds needs window >= 12 so the half window can boot");
    }

    ReplayResult result;
    result.input_points = feed.size();

    if (kind == OracleKind::ormer_med && window < 9) {
        result.warnings.push_back(
            "ormer-med: window below 9 spends a large share of each window "
            "re-booting the markers");
    }
    if (kind == OracleKind::ormer_medds && window < 24) {
        result.warnings.push_back(
            "ormer-medds: window below 24 spends a large share of each "
            "window re-booting the markers");
    }

    // Mean inter-arrival spacing maps observation windows onto seconds.
    int64_t mean_dt = 1;
    if (feed.size() > 1) {
        mean_dt = std::max<int64_t>(
            1, std::llround(static_cast<double>(feed.end_time() -
                                                feed.start_time()) /
                            static_cast<double>(feed.size() - 1)));
    }
    result.window_seconds = static_cast<int64_t>(window) * mean_dt;

    result.ledger = CostLedger(table);
    SlotStore store(&result.ledger);
    auto oracle = make_oracle(kind, window, store, result.window_seconds,
                              twap_ring_capacity);

    for (const auto& pt : feed.points) {
        result.ledger.begin_invocation(OpKind::update);
        oracle->update(pt.t, pt.p);
        result.ledger.end_invocation();

        result.ledger.begin_invocation(OpKind::query);
        std::optional<FixedQ64> est = oracle->query();
        result.ledger.end_invocation();

        if (est) {
            result.output.push(pt.t, *est);
        }
    }
    result.persisted_hex = oracle->persisted_hex();
    return result;
}

SecurityCheck evaluate_security(const PriceSeries& clean,
                                const PriceSeries& attacked_output,
                                double epsilon, bool percent) {
    AlignedFeeds a = align(clean, attacked_output);
    double max_dev = 0;
    for (size_t i = 0; i < a.reference.size(); ++i) {
        double dev = std::abs(a.candidate[i] - a.reference[i]);
        if (percent) {
            dev = 100.0 * dev / std::abs(a.reference[i]);
        }
        max_dev = std::max(max_dev, dev);
    }
    SecurityCheck check;
    check.epsilon = epsilon;
    check.percent = percent;
    check.max_deviation = max_dev;
    check.pass = max_dev <= epsilon;
    return check;
}

}  // namespace ormer
