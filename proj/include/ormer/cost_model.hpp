#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ormer/slot_codec.hpp"
#include "ormer/u256.hpp"

namespace ormer {

// Per-operation gas-unit prices for modeled storage accesses. Defaults
// mirror public EVM pricing; they are calibration defaults, and every
// acceptance check on cost compares ratios or orderings, never absolute
// units.
struct CostTable {
    uint64_t read_cold = 2100;
    uint64_t read_warm = 100;
    uint64_t write_zero_to_nonzero = 20000;
    uint64_t write_nonzero_to_nonzero = 2900;
    uint64_t write_to_zero = 2900;
    uint64_t tx_base = 21000;
    uint64_t arithmetic_unit = 0;
};

enum class OpKind { update, query };

struct InvocationRecord {
    OpKind kind = OpKind::update;
    uint32_t reads_cold = 0;
    uint32_t reads_warm = 0;
    uint32_t writes_zero_to_nonzero = 0;
    uint32_t writes_nonzero_to_nonzero = 0;
    uint32_t writes_to_zero = 0;
    uint64_t arithmetic_ops = 0;
    uint64_t total_gas = 0;
};

struct CostStats {
    double mean = 0;
    double stddev = 0;
    size_t invocations = 0;
};

// Accumulates one modeled invocation at a time. Warm/cold classification is
// per first touch of a slot within the open invocation; writes are priced by
// their zero-transition class.
class CostLedger {
public:
    explicit CostLedger(CostTable table = {});

    void begin_invocation(OpKind kind);
    void end_invocation();
    bool invocation_open() const { return open_; }

    void record_read(uint64_t slot_id);
    void record_write(uint64_t slot_id, const Word256& old_word,
                      const Word256& new_word);
    void record_arithmetic(uint64_t ops);

    const CostTable& table() const { return table_; }
    const std::vector<InvocationRecord>& records() const { return records_; }

    // Mean and standard deviation of total gas over invocations of `kind`.
    // Raises Errc::no_data when none were recorded.
    CostStats invocation_cost(OpKind kind) const;
    uint64_t total_gas() const;

private:
    void require_open() const;

    CostTable table_;
    bool open_ = false;
    InvocationRecord current_;
    std::set<uint64_t> touched_;
    std::vector<InvocationRecord> records_;
};

// Word-addressed storage with ledger-reported accesses. Absent slots read
// as zero, like uninitialized contract storage.
class SlotStore {
public:
    explicit SlotStore(CostLedger* ledger = nullptr) : ledger_(ledger) {}

    Word256 read(uint64_t slot_id);
    void write(uint64_t slot_id, const Word256& word);

    Word256 peek(uint64_t slot_id) const;  // no ledger traffic

private:
    CostLedger* ledger_;
    std::map<uint64_t, Word256> slots_;
};

}  // namespace ormer
