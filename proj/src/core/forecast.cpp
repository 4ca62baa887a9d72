#include "forecast.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace bridgeflow {

FlowSeries::FlowSeries(std::vector<double> timestamps, std::vector<double> values,
                       std::vector<double> rebalance_marks)
    : timestamps_(std::move(timestamps)), values_(std::move(values)),
      marks_(std::move(rebalance_marks)) {
    if (timestamps_.size() < 2 || values_.size() + 1 != timestamps_.size()) {
        fail(errc::invalid_argument, "series needs n+1 timestamps for n interval values");
    }
    for (std::size_t i = 0; i + 1 < timestamps_.size(); ++i) {
        if (!(timestamps_[i] < timestamps_[i + 1])) {
            fail(errc::invalid_argument, "timestamps must be strictly increasing");
        }
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            fail(errc::invalid_argument, "interval values must be finite");
        }
    }
    for (double m : marks_) {
        if (!std::binary_search(timestamps_.begin(), timestamps_.end(), m)) {
            fail(errc::invalid_argument, "rebalance mark is not a series timestamp");
        }
    }
    prefix_.resize(values_.size() + 1, 0.0);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        prefix_[i + 1] = prefix_[i] + values_[i];
    }
}

double FlowSeries::cumulative_at(double t) const {
    // Count every interval whose right endpoint is <= t.
    auto it = std::upper_bound(timestamps_.begin() + 1, timestamps_.end(), t);
    return prefix_[static_cast<std::size_t>(it - (timestamps_.begin() + 1))];
}

bool FlowSeries::has_mark_in(double after, double up_to) const {
    return std::any_of(marks_.begin(), marks_.end(),
                       [&](double m) { return m > after && m <= up_to; });
}

double actuals_since_rebalance(const FlowSeries& series, double last_rebalance, double now) {
    if (!(last_rebalance < now)) {
        fail(errc::invalid_argument, "window start must precede window end");
    }
    if (last_rebalance < series.start() || now > series.end()) {
        fail(errc::out_of_range, "window extends outside the observed series");
    }
    return series.cumulative_at(now) - series.cumulative_at(last_rebalance);
}

double historical_average_forecast(const FlowSeries& series, double horizon) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        fail(errc::invalid_argument, "horizon must be positive");
    }
    double now = series.end();
    double span = now - series.start();
    int windows = static_cast<int>(std::floor(span / horizon));
    if (windows < 1) {
        fail(errc::insufficient_history, "series shorter than one horizon");
    }
    double sum = 0.0;
    int used = 0;
    for (int k = 1; k <= windows; ++k) {
        double lo = now - k * horizon;
        double hi = now - (k - 1) * horizon;
        if (series.has_mark_in(lo, hi)) {
            continue;
        }
        sum += series.cumulative_at(hi) - series.cumulative_at(lo);
        ++used;
    }
    if (used == 0) {
        fail(errc::insufficient_history, "every horizon window contains a rebalance");
    }
    return sum / used;
}

std::vector<double> gbm_sample_path(const GbmParams& params, std::uint64_t seed) {
    if (!(params.initial > 0.0)) {
        fail(errc::invalid_argument, "initial value must be positive");
    }
    if (params.volatility < 0.0) {
        fail(errc::negative_amount, "volatility < 0");
    }
    if (!(params.horizon > 0.0) || params.steps < 1) {
        fail(errc::invalid_argument, "horizon and steps must be positive");
    }
    double dt = params.horizon / params.steps;
    double drift_term = (params.drift - 0.5 * params.volatility * params.volatility) * dt;
    double vol_term = params.volatility * std::sqrt(dt);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    std::vector<double> path;
    path.reserve(static_cast<std::size_t>(params.steps) + 1);
    path.push_back(params.initial);
    double s = params.initial;
    for (int i = 0; i < params.steps; ++i) {
        s *= std::exp(drift_term + vol_term * normal(rng));
        path.push_back(s);
    }
    return path;
}

double folded_normal_sample(double mu, double sigma, std::uint64_t seed) {
    if (sigma < 0.0) {
        fail(errc::negative_amount, "sigma < 0");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(mu, sigma == 0.0 ? 1.0 : sigma);
    double draw = sigma == 0.0 ? mu : normal(rng);
    return std::fabs(draw);
}

}  // namespace bridgeflow
