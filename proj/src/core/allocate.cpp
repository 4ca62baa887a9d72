#include "allocate.hpp"

#include <algorithm>
#include <cmath>

namespace bridgeflow {

double network_weight(bool available_p, bool available_q, double total_with_tbd_p,
                      double total_with_tbd_q) {
    double numer = available_p ? total_with_tbd_p : 0.0;
    double denom = (available_p ? total_with_tbd_p : 0.0) + (available_q ? total_with_tbd_q : 0.0);
    if (denom == 0.0) {
        fail(errc::undefined_share, "no deployable funds on either network for this asset");
    }
    return numer / denom;
}

std::pair<double, double> trim_network_weight(double weight, const TrimConfig& config) {
    if (config.min_weight > config.max_weight) {
        fail(errc::invalid_argument, "trim min_weight > max_weight");
    }
    double p = std::clamp(weight, config.min_weight, config.max_weight);
    return {p, 1.0 - p};
}

AssetWeightBand network_band(const AssetWeightBand& band, double share) {
    if (share < 0.0 || share > 1.0) {
        fail(errc::invalid_argument, "share outside [0, 1]");
    }
    AssetWeightBand out = band;
    out.network_min = band.stretched_min * share;
    out.network_ideal = band.raw_ideal * share;
    out.network_max = band.stretched_max * share;
    return out;
}

CapacityBand network_capacity(double total_with_tbd_pq,
                              const std::vector<AssetWeightBand>& network_bands) {
    if (total_with_tbd_pq < 0.0) {
        fail(errc::invalid_argument, "combined total < 0");
    }
    double min_sum = 0.0;
    double max_sum = 0.0;
    for (const auto& band : network_bands) {
        min_sum += band.network_min;
        max_sum += band.network_max;
    }
    return {total_with_tbd_pq * min_sum, total_with_tbd_pq * max_sum};
}

}  // namespace bridgeflow
