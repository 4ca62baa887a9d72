#include "route.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace bridgeflow {

std::vector<NetworkNeed> sort_by_need(std::vector<NetworkNeed> needs) {
    std::stable_sort(needs.begin(), needs.end(), [](const NetworkNeed& a, const NetworkNeed& b) {
        if (a.need_ratio != b.need_ratio) {
            return a.need_ratio > b.need_ratio;
        }
        return a.network_id < b.network_id;
    });
    return needs;
}

namespace {

struct MutableNetwork {
    std::string id;
    double current_total = 0.0;
    double tbd = 0.0;
    std::optional<BandAssessment> latest;  // most recent pairwise assessment
};

double need_ratio_of(const MutableNetwork& n, bool* bootstrap) {
    if (n.current_total == 0.0) {
        if (n.tbd == 0.0) {
            if (bootstrap) *bootstrap = false;
            return 0.0;
        }
        if (bootstrap) *bootstrap = true;
        return n.tbd > 0.0 ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
    }
    if (bootstrap) *bootstrap = false;
    return n.tbd / n.current_total;
}

// Two-network pipeline on the pair in canonical (lexicographic id) order, so
// a two-network problem reproduces the direct pipeline bit for bit.
std::optional<PipelineResult> run_pair(const RouteProblem& problem, const MutableNetwork& first,
                                       const MutableNetwork& second, double cap_fs,
                                       double cap_sf) {
    PipelineInput in;
    in.p = NetworkState{first.id, first.current_total, first.tbd, {}};
    in.q = NetworkState{second.id, second.current_total, second.tbd, {}};
    in.bridge = BridgeLink{cap_fs, cap_sf};
    in.trim = problem.trim;
    in.max_stretch = problem.max_stretch;
    in.delta = problem.delta;
    for (const auto& asset : problem.assets) {
        bool on_first = std::find(asset.networks.begin(), asset.networks.end(), first.id) !=
                        asset.networks.end();
        bool on_second = std::find(asset.networks.begin(), asset.networks.end(), second.id) !=
                         asset.networks.end();
        if (!on_first && !on_second) {
            continue;
        }
        in.assets.push_back(PipelineAsset{asset.id, asset.band, on_first, on_second});
    }
    try {
        return run_pipeline(in);
    } catch (const Error&) {
        return std::nullopt;  // unworkable pairing; the router moves on
    }
}

}  // namespace

RouteResult round_robin_route(const RouteProblem& problem) {
    RouteResult result;
    const std::size_t n = problem.networks.size();
    if (n < 2) {
        fail(errc::invalid_argument, "routing needs at least two networks");
    }

    std::vector<MutableNetwork> nets;
    nets.reserve(n);
    for (const auto& net : problem.networks) {
        nets.push_back(MutableNetwork{net.id, net.current_total, net.tbd, std::nullopt});
    }

    std::map<std::pair<std::string, std::string>, double> capacity;
    for (const auto& bridge : problem.bridges) {
        capacity[{bridge.from, bridge.to}] = bridge.capacity;
    }
    auto cap_of = [&](const std::string& from, const std::string& to) {
        auto it = capacity.find({from, to});
        return it == capacity.end() ? 0.0 : it->second;
    };

    auto index_of = [&](const std::string& id) {
        for (std::size_t i = 0; i < nets.size(); ++i) {
            if (nets[i].id == id) return i;
        }
        return nets.size();
    };

    auto sorted_needs = [&]() {
        std::vector<NetworkNeed> needs;
        needs.reserve(n);
        for (const auto& net : nets) {
            NetworkNeed need;
            need.network_id = net.id;
            need.need_ratio = need_ratio_of(net, &need.bootstrap);
            need.assessment = net.latest;
            needs.push_back(std::move(need));
        }
        return sort_by_need(std::move(needs));
    };

    auto total_abs_residual = [&]() {
        double total = 0.0;
        for (const auto& net : nets) {
            if (net.latest) {
                total += std::fabs(net.latest->outside_band);
            }
        }
        return total;
    };

    // Diagnostic assessment of every network against the opposite-extreme need
    // before any transfer, so residual bookkeeping starts fully populated.
    {
        auto needs = sorted_needs();
        for (auto& net : nets) {
            const std::string& partner_id = needs.front().network_id != net.id
                                                ? needs.front().network_id
                                                : needs.back().network_id;
            std::size_t pi = index_of(partner_id);
            const MutableNetwork& a = net.id < partner_id ? net : nets[pi];
            const MutableNetwork& b = net.id < partner_id ? nets[pi] : net;
            auto run = run_pair(problem, a, b, cap_of(a.id, b.id), cap_of(b.id, a.id));
            if (run) {
                net.latest = net.id < partner_id ? run->assess_p : run->assess_q;
            }
        }
    }

    int max_iterations = problem.max_iterations > 0
                             ? problem.max_iterations
                             : static_cast<int>(n * (n - 1));

    for (int iteration = 0; iteration < max_iterations; ++iteration) {
        auto needs = sorted_needs();
        bool progressed = false;

        // Round-robin over candidate pairings: strongest outflow needs first,
        // each tried against receivers from the strongest inflow need upward.
        for (std::size_t si = 0; si < needs.size() && !progressed; ++si) {
            for (std::size_t ri = needs.size(); ri-- > si + 1 && !progressed;) {
                const std::string& sender_id = needs[si].network_id;
                const std::string& receiver_id = needs[ri].network_id;
                std::size_t s = index_of(sender_id);
                std::size_t r = index_of(receiver_id);

                MutableNetwork& first = nets[std::min(s, r, [&](auto a, auto b) {
                    return nets[a].id < nets[b].id;
                })];
                MutableNetwork& second = &first == &nets[s] ? nets[r] : nets[s];

                double cap_fs = cap_of(first.id, second.id);
                double cap_sf = cap_of(second.id, first.id);
                auto run = run_pair(problem, first, second, cap_fs, cap_sf);
                if (!run) {
                    continue;
                }
                double amount = run->decision.delta_pq;  // signed first->second
                if (std::fabs(amount) <= amount_tolerance(amount)) {
                    continue;
                }

                first.tbd -= amount;
                second.tbd += amount;
                if (amount > 0.0) {
                    capacity[{first.id, second.id}] = cap_fs - amount;
                    result.transfers.push_back(RouteTransfer{first.id, second.id, amount});
                } else {
                    capacity[{second.id, first.id}] = cap_sf + amount;
                    result.transfers.push_back(RouteTransfer{second.id, first.id, -amount});
                }

                // Re-assess the pair at its post-transfer state.
                auto after = run_pair(problem, first, second, cap_of(first.id, second.id),
                                      cap_of(second.id, first.id));
                if (after) {
                    first.latest = after->assess_p;
                    second.latest = after->assess_q;
                }

                result.iterations.push_back(RouteIteration{first.id, second.id, run->decision,
                                                           amount, total_abs_residual()});
                progressed = true;
            }
        }
        if (!progressed) {
            break;
        }
    }

    for (const auto& net : nets) {
        RouteResidual residual;
        residual.network_id = net.id;
        residual.outside_band = net.latest ? net.latest->outside_band : 0.0;
        residual.need_ratio = need_ratio_of(net, nullptr);
        result.residuals.push_back(std::move(residual));
    }
    return result;
}

}  // namespace bridgeflow
