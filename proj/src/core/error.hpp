#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace bridgeflow {

// Domain error codes. These cross the C ABI, so values are stable.
enum class errc {
    ok = 0,
    invalid_argument = 1,
    negative_amount = 2,
    withdrawal_exceeds_investment = 3,
    undefined_ratio = 4,
    degenerate_denominator = 5,
    undefined_share = 6,
    insufficient_history = 7,
    out_of_range = 8,
    parse_error = 9,
    io_error = 10,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

// Equality tolerance for USD amounts: 1e-9 relative, floored at 1e-9 absolute.
inline double amount_tolerance(double reference) {
    return 1e-9 * std::max(1.0, std::fabs(reference));
}

inline bool approx_equal(double a, double b) {
    return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace bridgeflow
