#include <doctest.h>

#include <cmath>

#include "../src/core/stretch.hpp"

using namespace bridgeflow;

TEST_CASE("collect_deploy_diff is the absolute gap between deploy ratios") {
    // 100/500 = 0.2 vs 0/400 = 0.
    CHECK(collect_deploy_diff({100, 500}, {0, 400}) == doctest::Approx(0.2).epsilon(1e-12));
    // Order of the networks does not matter.
    CHECK(collect_deploy_diff({0, 400}, {100, 500}) == doctest::Approx(0.2).epsilon(1e-12));
    // Withdrawals give negative ratios: -300/1000 vs 0/200 -> 0.3.
    CHECK(collect_deploy_diff({-300, 1000}, {0, 200}) == doctest::Approx(0.3).epsilon(1e-12));
    // Equal ratios cancel exactly.
    CHECK(collect_deploy_diff({8000, 40000}, {12000, 60000}) == 0.0);
}

TEST_CASE("an idle network contributes ratio zero") {
    CHECK(collect_deploy_diff({0, 0}, {50, 100}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(collect_deploy_diff({0, 0}, {0, 0}) == 0.0);
}

TEST_CASE("pending flow with nothing invested has no defined ratio") {
    try {
        collect_deploy_diff({100, 0}, {0, 400});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::undefined_ratio);
    }
    CHECK_THROWS_AS(collect_deploy_diff({0, 400}, {-100, 0}), Error);
}

TEST_CASE("bridge_stretch scales the diff by flow pressure") {
    // diff 0.2, pressure 1 + 100/(500+400+100) = 1.1.
    CHECK(bridge_stretch({100, 500}, {0, 400}, 100) ==
          doctest::Approx(0.22).epsilon(1e-12));
    // Net withdrawals shrink the stretch: diff 0.3, 1 + (-300)/(1200+300) = 0.8.
    CHECK(bridge_stretch({-300, 1000}, {0, 200}, 300) ==
          doctest::Approx(0.24).epsilon(1e-12));
    // Zero net flow leaves the diff untouched.
    CHECK(bridge_stretch({50, 100}, {-50, 100}, 10) ==
          doctest::Approx(collect_deploy_diff({50, 100}, {-50, 100})).epsilon(1e-12));
}

TEST_CASE("bridge_stretch handles a zero absorb denominator") {
    // Nothing invested, nothing pending, no capacity: falls back to the diff.
    CHECK(bridge_stretch({0, 0}, {0, 0}, 0) == 0.0);
    // The estimates are raw inputs, so a cancelling current sum can zero the
    // denominator while flow remains. That has no defined pressure ratio.
    try {
        bridge_stretch({100, 200}, {0, -200}, 0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::degenerate_denominator);
    }
}

TEST_CASE("cap_stretch clamps magnitude only") {
    CHECK(cap_stretch(0.75, 0.2) == 0.2);
    CHECK(cap_stretch(0.1, 0.2) == 0.1);
    CHECK(cap_stretch(-0.05, 0.2) == 0.05);
    CHECK(cap_stretch(0.2, 0.2) == 0.2);
    try {
        cap_stretch(0.1, -0.1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_argument);
    }
}

TEST_CASE("stretch_band widens the envelope and keeps the ideal") {
    AssetWeightBand band;
    band.raw_min = 0.10;
    band.raw_ideal = 0.15;
    band.raw_max = 0.20;
    AssetWeightBand out = stretch_band(band, 0.2);
    CHECK(out.stretched_min == doctest::Approx(0.08).epsilon(1e-12));
    CHECK(out.stretched_max == doctest::Approx(0.24).epsilon(1e-12));
    CHECK(out.raw_ideal == 0.15);
    CHECK(out.raw_min == 0.10);
    CHECK(out.raw_max == 0.20);

    // Zero stretch keeps the raw envelope.
    AssetWeightBand same = stretch_band(band, 0.0);
    CHECK(same.stretched_min == band.raw_min);
    CHECK(same.stretched_max == band.raw_max);
}

TEST_CASE("make_stretch_result records every intermediate") {
    StretchResult r = make_stretch_result({100, 500}, {0, 400}, 100, 0.2);
    CHECK(r.collect_deploy_diff == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(r.raw_stretch == doctest::Approx(0.22).epsilon(1e-12));
    CHECK(r.capped_stretch == 0.2);
    CHECK(r.cap == 0.2);

    StretchResult small = make_stretch_result({10, 1000}, {0, 1000}, 0, 0.2);
    CHECK(small.capped_stretch == small.raw_stretch);
}
