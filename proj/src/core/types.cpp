#include "types.hpp"

#include <cmath>

namespace bridgeflow {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        fail(errc::invalid_argument, std::string(what) + " must be finite");
    }
}

void check_network(const NetworkState& n) {
    require_finite(n.current_total, "current_total");
    require_finite(n.tbd, "tbd");
    if (n.current_total < 0.0) {
        fail(errc::negative_amount, "current_total < 0 on network " + n.network_id);
    }
    if (!n.positions.empty()) {
        double sum = 0.0;
        for (const auto& pos : n.positions) {
            require_finite(pos.quantity, "position quantity");
            require_finite(pos.price, "position price");
            if (pos.quantity < 0.0 || pos.price < 0.0) {
                fail(errc::negative_amount, "negative position " + pos.asset_id + " on network " + n.network_id);
            }
            sum += pos.notional();
        }
        if (!approx_equal(sum, n.current_total)) {
            fail(errc::invalid_argument,
                 "positions on network " + n.network_id + " do not sum to current_total");
        }
    }
}

}  // namespace

void validate_scenario(const NetworkState& p, const NetworkState& q, const BridgeLink& bridge) {
    check_network(p);
    check_network(q);
    require_finite(bridge.capacity_pq, "capacity_pq");
    require_finite(bridge.capacity_qp, "capacity_qp");
    if (bridge.capacity_pq < 0.0 || bridge.capacity_qp < 0.0) {
        fail(errc::negative_amount, "bridge capacity < 0");
    }
    // Net withdrawals may drain at most the combined invested amount.
    if (-(p.tbd + q.tbd) > p.current_total + q.current_total) {
        fail(errc::withdrawal_exceeds_investment,
             "net withdrawals exceed combined invested funds");
    }
}

}  // namespace bridgeflow
