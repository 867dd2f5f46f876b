#include "ormer/errors.hpp"

namespace ormer {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::overflow: return "Overflow";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::non_positive_price: return "NonPositivePrice";
        case Errc::tick_out_of_range: return "TickOutOfRange";
        case Errc::field_out_of_range: return "FieldOutOfRange";
        case Errc::degenerate_spacing: return "DegenerateSpacing";
        case Errc::not_booted: return "NotBooted";
        case Errc::count_overflow: return "CountOverflow";
        case Errc::empty_window: return "EmptyWindow";
        case Errc::insufficient_history: return "InsufficientHistory";
        case Errc::non_monotonic_timestamp: return "NonMonotonicTimestamp";
        case Errc::parse_error: return "ParseError";
        case Errc::non_positive_value: return "NonPositiveValue";
        case Errc::empty_overlap: return "EmptyOverlap";
        case Errc::zero_variance: return "ZeroVariance";
        case Errc::zero_denominator: return "ZeroDenominator";
        case Errc::zero_cost: return "ZeroCost";
        case Errc::no_open_invocation: return "NoOpenInvocation";
        case Errc::no_data: return "NoData";
        case Errc::spec_out_of_range: return "SpecOutOfRange";
        case Errc::io_error: return "IoError";
        case Errc::config_error: return "ConfigError";
    }
    return "Unknown";
}

}  // namespace ormer
