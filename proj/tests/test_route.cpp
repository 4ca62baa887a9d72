#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "../src/core/route.hpp"
#include "../src/core/simulate.hpp"

using namespace bridgeflow;

namespace {

// Lifts a two-network scenario into the router's problem shape.
RouteProblem problem_of(const RebalanceScenario& s) {
    RouteProblem prob;
    prob.networks.push_back(RouteNetwork{s.p.network_id, s.p.current_total, s.p.tbd});
    prob.networks.push_back(RouteNetwork{s.q.network_id, s.q.current_total, s.q.tbd});
    for (const auto& asset : s.assets) {
        RouteAsset ra;
        ra.id = asset.id;
        ra.band = asset.band;
        if (asset.on_p) ra.networks.push_back(s.p.network_id);
        if (asset.on_q) ra.networks.push_back(s.q.network_id);
        prob.assets.push_back(std::move(ra));
    }
    prob.bridges.push_back(RouteBridge{s.p.network_id, s.q.network_id, s.bridge.capacity_pq});
    prob.bridges.push_back(RouteBridge{s.q.network_id, s.p.network_id, s.bridge.capacity_qp});
    return prob;
}

PipelineInput pipeline_input_of(const RebalanceScenario& s) {
    PipelineInput in;
    in.p = s.p;
    in.q = s.q;
    in.bridge = s.bridge;
    in.assets = s.assets;
    return in;
}

const RebalanceScenario& designed_by_name(const std::vector<RebalanceScenario>& all,
                                          const std::string& name) {
    for (const auto& s : all) {
        if (s.provenance.name == name) return s;
    }
    REQUIRE_MESSAGE(false, "designed scenario not found: " << name);
    return all.front();
}

}  // namespace

TEST_CASE("sort_by_need orders by descending ratio with id tiebreak") {
    double inf = std::numeric_limits<double>::infinity();
    std::vector<NetworkNeed> needs;
    needs.push_back(NetworkNeed{"D", -0.1, false, std::nullopt});
    needs.push_back(NetworkNeed{"C", 0.5, false, std::nullopt});
    needs.push_back(NetworkNeed{"E", -inf, true, std::nullopt});
    needs.push_back(NetworkNeed{"A", 0.5, false, std::nullopt});
    needs.push_back(NetworkNeed{"B", inf, true, std::nullopt});

    std::vector<NetworkNeed> sorted = sort_by_need(needs);
    REQUIRE(sorted.size() == 5);
    CHECK(sorted[0].network_id == "B");
    CHECK(sorted[1].network_id == "A");  // 0.5 tie resolves A before C
    CHECK(sorted[2].network_id == "C");
    CHECK(sorted[3].network_id == "D");
    CHECK(sorted[4].network_id == "E");
}

TEST_CASE("routing requires at least two networks") {
    RouteProblem prob;
    prob.networks.push_back(RouteNetwork{"solo", 1000, 0});
    try {
        round_robin_route(prob);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_argument);
    }
}

TEST_CASE("a single-step two-network route reproduces the direct pipeline bitwise") {
    std::vector<RebalanceScenario> designed = designed_scenarios();
    for (const char* name : {"withdrawal_multi_round", "trim_activation", "asymmetric_capacity"}) {
        CAPTURE(name);
        const RebalanceScenario& s = designed_by_name(designed, name);

        PipelineResult direct = run_pipeline(pipeline_input_of(s));
        RouteProblem prob = problem_of(s);
        prob.max_iterations = 1;
        RouteResult routed = round_robin_route(prob);

        REQUIRE(routed.iterations.size() == 1);
        const RouteIteration& it = routed.iterations[0];
        CHECK(it.first == "P");
        CHECK(it.second == "Q");
        CHECK(it.decision.simple_pq == direct.decision.simple_pq);
        CHECK(it.decision.simple_qp == direct.decision.simple_qp);
        CHECK(it.decision.delta_pq == direct.decision.delta_pq);
        CHECK(it.decision.delta_qp == direct.decision.delta_qp);
        CHECK(it.applied == direct.decision.delta_pq);

        REQUIRE(routed.transfers.size() == 1);
        double amount = direct.decision.delta_pq;
        CHECK(routed.transfers[0].from == (amount > 0 ? "P" : "Q"));
        CHECK(routed.transfers[0].to == (amount > 0 ? "Q" : "P"));
        CHECK(routed.transfers[0].amount == std::fabs(amount));

        // The reported residuals equal a direct re-run at the moved state.
        PipelineInput after = pipeline_input_of(s);
        after.p.tbd -= amount;
        after.q.tbd += amount;
        if (amount > 0) {
            after.bridge.capacity_pq -= amount;
        } else {
            after.bridge.capacity_qp += amount;
        }
        PipelineResult expect = run_pipeline(after);
        REQUIRE(routed.residuals.size() == 2);
        CHECK(routed.residuals[0].network_id == "P");
        CHECK(routed.residuals[0].outside_band == expect.assess_p.outside_band);
        CHECK(routed.residuals[1].network_id == "Q");
        CHECK(routed.residuals[1].outside_band == expect.assess_q.outside_band);
    }
}

TEST_CASE("a three-network problem splits one surplus across two shortfalls") {
    RouteProblem prob =
        load_route_problem_file(std::string(TEST_CONFIG_DIR) + "/route3.json");
    RouteResult result = round_robin_route(prob);

    // P deploys 100: Q takes its full 60 need, R only 40 of 60 because P runs
    // out of surplus, leaving R 20 short.
    REQUIRE(result.transfers.size() == 2);
    CHECK(result.transfers[0].from == "P");
    CHECK(result.transfers[0].to == "Q");
    CHECK(result.transfers[0].amount == doctest::Approx(60).epsilon(1e-6));
    CHECK(result.transfers[1].from == "P");
    CHECK(result.transfers[1].to == "R");
    CHECK(result.transfers[1].amount == doctest::Approx(40).epsilon(1e-6));

    REQUIRE(result.residuals.size() == 3);
    CHECK(result.residuals[0].network_id == "P");
    CHECK(result.residuals[0].outside_band == doctest::Approx(0).epsilon(1e-6));
    CHECK(result.residuals[1].network_id == "Q");
    CHECK(result.residuals[1].outside_band == doctest::Approx(0).epsilon(1e-6));
    CHECK(result.residuals[2].network_id == "R");
    CHECK(result.residuals[2].outside_band == doctest::Approx(-20).epsilon(1e-6));

    REQUIRE(result.iterations.size() == 2);
    for (const auto& it : result.iterations) {
        CHECK(it.first < it.second);
        CHECK(std::fabs(it.applied) > 0.0);
    }
    // Unmet need shrinks as transfers land.
    CHECK(result.iterations[1].total_abs_residual <=
          result.iterations[0].total_abs_residual + 1e-6);
}

TEST_CASE("zero bridge capacity routes nothing but still reports residuals") {
    RouteProblem prob;
    prob.networks.push_back(RouteNetwork{"P", 1000, 400});
    prob.networks.push_back(RouteNetwork{"Q", 1000, -300});
    RouteAsset a;
    a.id = "anchor";
    a.band.raw_min = 0.3;
    a.band.raw_ideal = 0.5;
    a.band.raw_max = 0.7;
    a.networks = {"P", "Q"};
    prob.assets.push_back(a);
    // No bridges at all: every directed capacity defaults to zero.

    RouteResult result = round_robin_route(prob);
    CHECK(result.transfers.empty());
    CHECK(result.iterations.empty());
    REQUIRE(result.residuals.size() == 2);
    CHECK(result.residuals[0].need_ratio == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(result.residuals[1].need_ratio == doctest::Approx(-0.3).epsilon(1e-12));
}

TEST_CASE("property: routed flow respects every directed capacity and conserves funds") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int trial = 0; trial < 200; ++trial) {
        CAPTURE(trial);
        int n = 3 + static_cast<int>(rng() % 2);  // 3 or 4 networks
        RouteProblem prob;
        double tbd_sum = 0.0;
        for (int i = 0; i < n; ++i) {
            double current = 1000 + 4000 * unit(rng);
            double tbd = -current + (current + 2000) * unit(rng);
            tbd_sum += tbd;
            prob.networks.push_back(
                RouteNetwork{"N" + std::to_string(i + 1), current, tbd});
        }
        RouteAsset shared;
        shared.id = "anchor";
        shared.band.raw_min = 0.3;
        shared.band.raw_ideal = 0.5;
        shared.band.raw_max = 0.7;
        for (const auto& net : prob.networks) shared.networks.push_back(net.id);
        prob.assets.push_back(shared);

        std::map<std::pair<std::string, std::string>, double> caps;
        for (const auto& from : prob.networks) {
            for (const auto& to : prob.networks) {
                if (from.id == to.id) continue;
                double cap = 1500 * unit(rng);
                caps[{from.id, to.id}] = cap;
                prob.bridges.push_back(RouteBridge{from.id, to.id, cap});
            }
        }

        RouteResult result = round_robin_route(prob);
        REQUIRE(result.iterations.size() <= static_cast<std::size_t>(n * (n - 1)));
        REQUIRE(result.residuals.size() == static_cast<std::size_t>(n));

        std::map<std::pair<std::string, std::string>, double> used;
        for (const auto& t : result.transfers) {
            REQUIRE(t.amount > 0.0);
            used[{t.from, t.to}] += t.amount;
        }
        for (const auto& [pair, total] : used) {
            REQUIRE(total <= caps[pair] + 1e-6);
        }

        // Transfers only shuffle pending flow between networks.
        double tbd_after = 0.0;
        for (std::size_t i = 0; i < prob.networks.size(); ++i) {
            tbd_after += result.residuals[i].need_ratio * prob.networks[i].current_total;
        }
        REQUIRE(std::fabs(tbd_after - tbd_sum) <= 1e-6 * std::max(1.0, std::fabs(tbd_sum)));
    }
}
