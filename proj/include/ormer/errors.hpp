#pragma once

#include <stdexcept>
#include <string>

namespace ormer {

enum class Errc {
    overflow,
    division_by_zero,
    non_positive_price,
    tick_out_of_range,
    field_out_of_range,
    degenerate_spacing,
    not_booted,
    count_overflow,
    empty_window,
    insufficient_history,
    non_monotonic_timestamp,
    parse_error,
    non_positive_value,
    empty_overlap,
    zero_variance,
    zero_denominator,
    zero_cost,
    no_open_invocation,
    no_data,
    spec_out_of_range,
    io_error,
    config_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace ormer
