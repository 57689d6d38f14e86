#include <doctest.h>

#include <cmath>
#include <random>

#include "concat.hpp"

using namespace qftlab;
using namespace qftlab::concat;

TEST_CASE("accuracy after zero levels recovers p") {
    CHECK(accuracy_after_levels(36.0, 1.0 / 72.0, 0) ==
          doctest::Approx(1.0 / 72.0).epsilon(1e-12));
}

TEST_CASE("accuracy at two levels follows the squared-exponent law") {
    // (1/36) * 0.5^4
    CHECK(accuracy_after_levels(36.0, 1.0 / 72.0, 2) ==
          doctest::Approx(0.5 * 0.5 * 0.5 * 0.5 / 36.0).epsilon(1e-12));
}

TEST_CASE("accuracy accepts c*p just below one and rejects the threshold") {
    CHECK(std::isfinite(accuracy_after_levels(2.0, (1.0 - 1e-9) / 2.0, 3)));
    try {
        accuracy_after_levels(2.0, 0.5, 1);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::above_threshold);
    }
}

TEST_CASE("accuracy is strictly decreasing in the level count") {
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> cp(0.05, 0.95);
    std::uniform_real_distribution<double> cs(1.0, 100.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double c = cs(rng);
        const double p = cp(rng) / c;
        double prev = accuracy_after_levels(c, p, 0);
        for (int k = 1; k <= 8; ++k) {
            const double cur = accuracy_after_levels(c, p, k);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("levels_for_accuracy inverts the k = 2 example") {
    // epsilon exactly at the two-level accuracy
    const double eps = accuracy_after_levels(36.0, 1.0 / 72.0, 2);
    CHECK(levels_for_accuracy(36.0, 1.0 / 72.0, eps) == 2);
    // a slightly looser target stays at two levels
    CHECK(levels_for_accuracy(36.0, 1.0 / 72.0, 1.74e-3) == 2);
    // a strictly tighter target forces a third level
    CHECK(levels_for_accuracy(36.0, 1.0 / 72.0, eps * (1.0 - 1e-9)) == 3);
}

TEST_CASE("no concatenation is needed when the target is above p") {
    CHECK(levels_for_accuracy(36.0, 1.0 / 72.0, 0.02) == 0);
    CHECK(levels_for_accuracy(36.0, 1.0 / 72.0, 1.0 / 72.0) == 0);
}

TEST_CASE("levels_for_accuracy is the exact argmin (brute force)") {
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> cp(0.05, 0.95);
    std::uniform_real_distribution<double> cs(1.0, 100.0);
    std::uniform_real_distribution<double> loge(-12.0, -0.5);
    for (int trial = 0; trial < 100; ++trial) {
        const double c = cs(rng);
        const double p = cp(rng) / c;
        const double eps = std::exp2(loge(rng));
        const int k = levels_for_accuracy(c, p, eps);
        int brute = 0;
        while (accuracy_after_levels(c, p, brute) > eps) ++brute;
        CHECK(k == brute);
        CHECK(accuracy_after_levels(c, p, k) <= eps);
        if (k > 0) CHECK(accuracy_after_levels(c, p, k - 1) > eps);
    }
}

TEST_CASE("delta for equal levels: doubling noise squares per level") {
    const NoiseParams params(36.0, 0.01, 36.0, 0.02, 1e-6);
    CHECK(delta_for_equal_levels(params, 0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(delta_for_equal_levels(params, 1) == doctest::Approx(4.0).epsilon(1e-12));

    const NoiseParams same(36.0, 0.01, 36.0, 0.01, 1e-6);
    CHECK(delta_for_equal_levels(same, 2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("delta relation is consistent with direct accuracy evaluation") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> cp(0.05, 0.9);
    std::uniform_real_distribution<double> cs(1.0, 80.0);
    std::uniform_real_distribution<double> mul(1.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double c2 = cs(rng);
        const double c3 = cs(rng);
        const double p2 = cp(rng) / std::max(c2, c3) / 3.0;
        const double p23 = std::min(p2 * mul(rng), 0.9 / c3);
        if (p23 < p2) continue;
        const NoiseParams params(c2, p2, c3, p23, 1e-6);
        for (int k = 0; k <= 4; ++k) {
            const double eps2 = accuracy_after_levels(c2, p2, k);
            const double eps3 = accuracy_after_levels(c3, p23, k);
            const double delta = delta_for_equal_levels(params, k);
            CHECK(delta * eps2 == doctest::Approx(eps3).epsilon(1e-12));
        }
    }
}

TEST_CASE("k3 gap matches the tabulated rows independent of k2") {
    // c*p23 = 0.9, delta = 2 -> gap 3 at any k2
    const double c = 36.0;
    {
        const double p23 = 0.9 / c;
        const NoiseParams params(c, p23 / 2.0, c, p23, 1e-6);
        for (int k2 : {0, 1, 2, 5}) {
            CHECK(k3_for_same_accuracy(params, k2) - k2 == 3);
        }
    }
    {
        const double p23 = 0.5 / c;
        const NoiseParams params(c, p23 / 5.0, c, p23, 1e-6);
        for (int k2 : {0, 1, 4}) {
            CHECK(k3_for_same_accuracy(params, k2) - k2 == 2);
        }
    }
    {
        // identical noise: k3 = k2
        const NoiseParams params(c, 0.01, c, 0.01, 1e-6);
        for (int k2 : {0, 1, 3}) {
            CHECK(k3_for_same_accuracy(params, k2) == k2);
        }
    }
}

TEST_CASE("k3 rejects above-threshold qutrit noise") {
    const NoiseParams params(36.0, 0.01, 36.0, 0.9, 1e-6);
    // c3 * p23 = 32.4 >= 1
    try {
        k3_for_same_accuracy(params, 1);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::above_threshold);
    }
}

TEST_CASE("gap table reproduces all ten reference rows") {
    const std::vector<GapRow> rows = reference_gap_table();
    REQUIRE(rows.size() == 10);
    const int want_gap[10] = {3, 3, 4, 4, 5, 1, 1, 2, 2, 2};
    const double want_cp23[10] = {0.9, 0.9, 0.9, 0.9, 0.9, 0.5, 0.5, 0.5, 0.5, 0.5};
    const double want_delta[10] = {1.5, 2, 3, 4, 5, 1.5, 2, 3, 4, 5};
    for (int i = 0; i < 10; ++i) {
        CAPTURE(i);
        CHECK(rows[static_cast<std::size_t>(i)].cp23 == want_cp23[i]);
        CHECK(rows[static_cast<std::size_t>(i)].delta == want_delta[i]);
        CHECK(rows[static_cast<std::size_t>(i)].cp2 ==
              doctest::Approx(want_cp23[i] / want_delta[i]).epsilon(1e-12));
        CHECK(rows[static_cast<std::size_t>(i)].gap == want_gap[i]);
    }
}

TEST_CASE("hybrid circuits take the max of both level requirements") {
    // dyadic instance: c = 32, cp2 = 0.25, cp23 = 0.5, c*eps = 0.0625,
    // every quantity exact in binary floating point
    const double c = 32.0;
    const NoiseParams params(c, 0.25 / c, c, 0.5 / c, 0.0625 / c);
    CHECK(levels_for_accuracy(params.c2, params.p2, params.epsilon) == 1);
    CHECK(levels_for_accuracy(params.c3, params.p23, params.epsilon) == 2);
    CHECK(hybrid_required_levels(params) == 2);

    // degenerate hybrid: equal noise on both species
    const NoiseParams same(36.0, 0.01, 36.0, 0.01, 1e-5);
    CHECK(hybrid_required_levels(same) ==
          levels_for_accuracy(36.0, 0.01, 1e-5));

    // epsilon above both error rates: no concatenation at all
    const NoiseParams loose(36.0, 0.002, 36.0, 0.004, 0.01);
    CHECK(hybrid_required_levels(loose) == 0);
}

TEST_CASE("oracle and closed form agree within one level everywhere") {
    std::mt19937 rng(161803);
    std::uniform_real_distribution<double> cp(0.02, 0.95);
    std::uniform_real_distribution<double> cs(1.0, 100.0);
    std::uniform_int_distribution<int> ks(0, 6);
    int checked = 0;
    int disagreements = 0;
    int max_abs = 0;
    while (checked < 10000) {
        const double c2 = cs(rng);
        const double c3 = cs(rng);
        const double cp2 = cp(rng);
        const double cp23 = cp(rng);
        const double p2 = cp2 / c2;
        const double p23 = cp23 / c3;
        if (p23 < p2) continue;
        const NoiseParams params(c2, p2, c3, p23, 1e-6);
        const int k2 = ks(rng);
        int closed = 0;
        try {
            closed = k3_for_same_accuracy(params, k2);
        } catch (const Error&) {
            continue;  // degenerate numerator; the oracle has no counterpart
        }
        const int oracle = min_levels_oracle(params, k2);
        const int diff = closed - oracle;
        if (diff != 0) {
            ++disagreements;
            max_abs = std::max(max_abs, std::abs(diff));
        }
        CHECK(std::abs(diff) <= 1);
        ++checked;
    }
    MESSAGE("closed form vs oracle: ", disagreements, " disagreements of ",
            checked, ", max |diff| = ", max_abs);
}

TEST_CASE("oracle handles the degenerate and direct cases") {
    const NoiseParams same(36.0, 0.01, 36.0, 0.01, 1e-6);
    CHECK(min_levels_oracle(same, 3) == 3);

    // c*p23 = 0.5, delta = 2, k2 = 3: smallest k3 with
    // 0.5^(2^k3)/c <= 0.25^(2^3)/c
    const double c = 36.0;
    const NoiseParams params(c, 0.25 / c, c, 0.5 / c, 1e-6);
    int brute = 0;
    const double target = accuracy_after_levels(c, 0.25 / c, 3);
    while (accuracy_after_levels(c, 0.5 / c, brute) > target) ++brute;
    CHECK(min_levels_oracle(params, 3) == brute);
    CHECK(brute == 4);  // 2^k3 >= 16 needs k3 = 4
}

TEST_CASE("noise params validate their invariants") {
    CHECK_THROWS_AS(NoiseParams(36.0, 0.02, 36.0, 0.01, 1e-6), Error);
    CHECK_THROWS_AS(NoiseParams(0.5, 0.01, 36.0, 0.02, 1e-6), Error);
    const NoiseParams ok(36.0, 0.01, 40.0, 0.03, 1e-6);
    CHECK(ok.delta == doctest::Approx(3.0).epsilon(1e-12));
}
