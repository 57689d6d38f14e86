#include "concat.hpp"

#include <cmath>
#include <string>

namespace qftlab::concat {

namespace {

void check_below_threshold(double c, double p, const char* what) {
    if (!(c >= 1.0) || !(p > 0.0) || !(p < 1.0)) {
        fail(Errc::invalid_argument,
             std::string(what) + ": need c >= 1 and 0 < p < 1");
    }
    if (c * p >= 1.0) {
        fail(Errc::above_threshold,
             std::string(what) + ": c*p = " + std::to_string(c * p) +
                 " is not below threshold");
    }
}

double pow2k(int k) { return std::ldexp(1.0, k); }

}  // namespace

NoiseParams::NoiseParams(double c2_, double p2_, double c3_, double p23_,
                         double epsilon_)
    : c2(c2_), p2(p2_), c3(c3_), p23(p23_), epsilon(epsilon_) {
    if (!(p2 > 0.0) || !(p23 < 1.0) || p2 > p23) {
        fail(Errc::invalid_argument, "need 0 < p2 <= p23 < 1");
    }
    if (!(c2 >= 1.0) || !(c3 >= 1.0)) {
        fail(Errc::invalid_argument, "need c2 >= 1 and c3 >= 1");
    }
    if (!(epsilon >= 0.0)) {
        fail(Errc::invalid_argument, "need epsilon >= 0");
    }
    delta = p23 / p2;
}

double accuracy_after_levels(double c, double p, int k) {
    check_below_threshold(c, p, "accuracy_after_levels");
    if (k < 0) fail(Errc::invalid_argument, "levels must be >= 0");
    // Evaluate in log space so deep concatenation underflows cleanly.
    const double log2_acc = pow2k(k) * std::log2(c * p) - std::log2(c);
    return std::exp2(log2_acc);
}

int levels_for_accuracy(double c, double p, double epsilon) {
    check_below_threshold(c, p, "levels_for_accuracy");
    if (!(epsilon > 0.0)) {
        fail(Errc::invalid_argument, "accuracy target must be > 0");
    }
    if (epsilon >= p) return 0;
    // ceil(log2(log_{cp}(c eps))), then nudge to the exact argmin against
    // floating-point boundary cases.
    const double ratio = std::log2(c * epsilon) / std::log2(c * p);
    int k = std::max(0, static_cast<int>(std::ceil(std::log2(ratio))));
    while (accuracy_after_levels(c, p, k) > epsilon) ++k;
    while (k > 0 && accuracy_after_levels(c, p, k - 1) <= epsilon) --k;
    return k;
}

double delta_for_equal_levels(const NoiseParams& params, int k) {
    check_below_threshold(params.c2, params.p2, "delta_for_equal_levels");
    check_below_threshold(params.c3, params.p23, "delta_for_equal_levels");
    if (k < 0) fail(Errc::invalid_argument, "levels must be >= 0");
    const double log_delta =
        pow2k(k) * std::log2((params.c3 * params.p23) / (params.c2 * params.p2)) +
        std::log2(params.c2 / params.c3);
    return std::exp2(log_delta);
}

int k3_for_same_accuracy(const NoiseParams& params, int k2) {
    check_below_threshold(params.c2, params.p2, "k3_for_same_accuracy");
    if (k2 < 0) fail(Errc::invalid_argument, "k2 must be >= 0");
    if (params.c3 * params.delta * params.p2 >= 1.0) {
        fail(Errc::above_threshold,
             "c3*delta*p2 = " + std::to_string(params.c3 * params.delta * params.p2) +
                 " is not below threshold");
    }
    const double denom = std::log2(params.delta) + std::log2(params.c3 * params.p2);
    if (denom >= 0.0) {
        fail(Errc::qutrit_above_threshold,
             "log2(delta) + log2(c3 p2) must be negative");
    }
    const double numer = std::log2(params.c2 * params.p2) -
                         std::log2(params.c2 / params.c3) / pow2k(k2);
    if (numer >= 0.0) {
        fail(Errc::above_threshold,
             "effective binary exponent is not below threshold");
    }
    return k2 + static_cast<int>(std::ceil(std::log2(numer / denom)));
}

double level_gap_real(double cp23, double delta) {
    if (!(delta >= 1.0)) fail(Errc::invalid_argument, "need delta >= 1");
    if (!(cp23 > 0.0) || cp23 >= 1.0) {
        fail(Errc::above_threshold,
             "c*p23 = " + std::to_string(cp23) + " is not below threshold");
    }
    const double cp2 = cp23 / delta;
    return std::log2(std::log2(cp2) / std::log2(cp23));
}

std::vector<GapRow> concat_gap_table(
    const std::vector<std::pair<double, double>>& rows) {
    std::vector<GapRow> out;
    out.reserve(rows.size());
    for (const auto& [cp23, delta] : rows) {
        GapRow row;
        row.cp23 = cp23;
        row.delta = delta;
        row.cp2 = cp23 / delta;
        row.gap = static_cast<int>(std::ceil(level_gap_real(cp23, delta)));
        out.push_back(row);
    }
    return out;
}

std::vector<GapRow> reference_gap_table() {
    std::vector<std::pair<double, double>> rows;
    for (double cp23 : {0.9, 0.5}) {
        for (double delta : {1.5, 2.0, 3.0, 4.0, 5.0}) {
            rows.emplace_back(cp23, delta);
        }
    }
    return concat_gap_table(rows);
}

int hybrid_required_levels(const NoiseParams& params) {
    const int k2 = levels_for_accuracy(params.c2, params.p2, params.epsilon);
    const int k3 = levels_for_accuracy(params.c3, params.p23, params.epsilon);
    return std::max(k2, k3);
}

int min_levels_oracle(const NoiseParams& params, int k2) {
    check_below_threshold(params.c2, params.p2, "min_levels_oracle");
    check_below_threshold(params.c3, params.p23, "min_levels_oracle");
    if (k2 < 0) fail(Errc::invalid_argument, "k2 must be >= 0");
    const double target = accuracy_after_levels(params.c2, params.p2, k2);
    for (int k3 = 0; k3 <= 64; ++k3) {
        if (accuracy_after_levels(params.c3, params.p23, k3) <= target) return k3;
    }
    fail(Errc::oracle_overflow, "no k3 <= 64 reaches the target accuracy");
}

}  // namespace qftlab::concat
