#pragma once

#include <utility>
#include <vector>

#include "types.hpp"

namespace bridgeflow {

// Network P's share of an asset, by deployable funds:
//   ind_p * (total_p) / (ind_p * total_p + ind_q * total_q)
// where total_x = current + tbd and ind_x is the availability indicator.
// Errors with UndefinedShare when the denominator is zero.
double network_weight(bool available_p, bool available_q, double total_with_tbd_p,
                      double total_with_tbd_q);

// Clamps a share into [min_weight, max_weight] and hands the complement to the
// other network. With the default config (0, 1) this enforces no shorting and
// no over-allocation. Returns {share_p, share_q}.
std::pair<double, double> trim_network_weight(double weight, const TrimConfig& config);

// Projects a stretched band onto one network: min and max scale by the
// network's share of the asset; the ideal scales from the raw ideal.
AssetWeightBand network_band(const AssetWeightBand& band, double share);

// USD capacity range of one network: the combined two-network total times the
// summed per-network band weights. An empty list yields (0, 0).
CapacityBand network_capacity(double total_with_tbd_pq,
                              const std::vector<AssetWeightBand>& network_bands);

}  // namespace bridgeflow
