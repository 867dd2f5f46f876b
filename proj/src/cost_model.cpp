#include "ormer/cost_model.hpp"

#include <cmath>

#include "ormer/errors.hpp"

namespace ormer {

CostLedger::CostLedger(CostTable table) : table_(table) {}

void CostLedger::begin_invocation(OpKind kind) {
    if (open_) {
        raise(Errc::no_open_invocation, "invocation already open");
    }
    open_ = true;
    current_ = InvocationRecord{};
    current_.kind = kind;
    current_.total_gas = table_.tx_base;
    touched_.clear();
}

void CostLedger::end_invocation() {
    require_open();
    records_.push_back(current_);
    open_ = false;
}

void CostLedger::require_open() const {
    if (!open_) {
        raise(Errc::no_open_invocation, "no invocation scope is open");
    }
}

void CostLedger::record_read(uint64_t slot_id) {
    require_open();
    if (touched_.insert(slot_id).second) {
        current_.reads_cold += 1;
        current_.total_gas += table_.read_cold;
    } else {
        current_.reads_warm += 1;
        current_.total_gas += table_.read_warm;
    }
}

void CostLedger::record_write(uint64_t slot_id, const Word256& old_word,
                              const Word256& new_word) {
    require_open();
    touched_.insert(slot_id);
    switch (classify_write(old_word, new_word)) {
        case WriteClass::zero_to_nonzero:
            current_.writes_zero_to_nonzero += 1;
            current_.total_gas += table_.write_zero_to_nonzero;
            break;
        case WriteClass::nonzero_to_nonzero:
            current_.writes_nonzero_to_nonzero += 1;
            current_.total_gas += table_.write_nonzero_to_nonzero;
            break;
        case WriteClass::to_zero:
            current_.writes_to_zero += 1;
            current_.total_gas += table_.write_to_zero;
            break;
    }
}

void CostLedger::record_arithmetic(uint64_t ops) {
    require_open();
    current_.arithmetic_ops += ops;
    current_.total_gas += ops * table_.arithmetic_unit;
}

CostStats CostLedger::invocation_cost(OpKind kind) const {
    double sum = 0;
    size_t n = 0;
    for (const auto& r : records_) {
        if (r.kind != kind) continue;
        sum += static_cast<double>(r.total_gas);
        n += 1;
    }
    if (n == 0) {
        raise(Errc::no_data, "no invocations of the requested kind");
    }
    double mean = sum / static_cast<double>(n);
    double var = 0;
    for (const auto& r : records_) {
        if (r.kind != kind) continue;
        double d = static_cast<double>(r.total_gas) - mean;
        var += d * d;
    }
    CostStats s;
    s.mean = mean;
    s.stddev = n > 1 ? std::sqrt(var / static_cast<double>(n)) : 0.0;
    s.invocations = n;
    return s;
}

uint64_t CostLedger::total_gas() const {
    uint64_t sum = 0;
    for (const auto& r : records_) sum += r.total_gas;
    return sum;
}

Word256 SlotStore::read(uint64_t slot_id) {
    if (ledger_) ledger_->record_read(slot_id);
    return peek(slot_id);
}

Word256 SlotStore::peek(uint64_t slot_id) const {
    auto it = slots_.find(slot_id);
    return it == slots_.end() ? Word256{} : it->second;
}

void SlotStore::write(uint64_t slot_id, const Word256& word) {
    Word256 old = peek(slot_id);
    if (ledger_) ledger_->record_write(slot_id, old, word);
    slots_[slot_id] = word;
}

}  // namespace ormer
