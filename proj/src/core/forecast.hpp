#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace bridgeflow {

// Observed pending-flow history: values[i] is the signed USD change over
// (timestamps[i], timestamps[i+1]], so there is one more timestamp than value.
// rebalance_marks are timestamps at which a rebalance ran; windows touching a
// mark are not representative of organic flow and get excluded from averages.
class FlowSeries {
public:
    FlowSeries(std::vector<double> timestamps, std::vector<double> values,
               std::vector<double> rebalance_marks);

    const std::vector<double>& timestamps() const { return timestamps_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& rebalance_marks() const { return marks_; }

    double start() const { return timestamps_.front(); }
    double end() const { return timestamps_.back(); }

    // Cumulative flow at time t, treating values as a step function that jumps
    // at each interval's right endpoint. Defined for any t in the series span.
    double cumulative_at(double t) const;

    bool has_mark_in(double after, double up_to) const;

private:
    std::vector<double> timestamps_;
    std::vector<double> values_;
    std::vector<double> marks_;
    std::vector<double> prefix_;  // prefix_[i] = sum of values_[0..i)
};

// Net signed flow over (last_rebalance, now]. Errors with OutOfRange when the
// window is not inside the series span, or InvalidArgument when inverted.
double actuals_since_rebalance(const FlowSeries& series, double last_rebalance, double now);

// Equal-weight mean of per-horizon changes over non-overlapping horizon-length
// windows ending at the last observation. Windows containing a rebalance mark
// are excluded wholesale; errors with InsufficientHistory when none remain.
double historical_average_forecast(const FlowSeries& series, double horizon);

struct GbmParams {
    double initial = 0.0;     // strictly positive
    double drift = 0.0;       // annualized
    double volatility = 0.0;  // annualized, non-negative
    double horizon = 0.0;     // years, positive
    int steps = 1;            // positive
};

// Samples one geometric Brownian motion path on an even grid using the exact
// lognormal step, so every value stays strictly positive:
//   s *= exp((drift - volatility^2/2) * dt + volatility * sqrt(dt) * z)
// Returns steps + 1 values starting at params.initial. Deterministic per seed.
std::vector<double> gbm_sample_path(const GbmParams& params, std::uint64_t seed);

// One draw of |N(mu, sigma^2)|. sigma must be non-negative.
double folded_normal_sample(double mu, double sigma, std::uint64_t seed);

}  // namespace bridgeflow
