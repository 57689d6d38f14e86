#pragma once

#include <vector>

#include "error.hpp"

namespace qftlab::concat {

// Threshold and error-probability parameters for a hybrid circuit.
// 1/c2 and 1/c3 are the binary and ternary thresholds; delta = p23/p2.
struct NoiseParams {
    double c2 = 1.0;
    double p2 = 0.0;
    double c3 = 1.0;
    double p23 = 0.0;
    double delta = 1.0;
    double epsilon = 0.0;

    NoiseParams() = default;
    NoiseParams(double c2_, double p2_, double c3_, double p23_, double epsilon_);
};

// Failure probability (1/c)(c p)^(2^k) after k concatenation levels.
double accuracy_after_levels(double c, double p, int k);

// Smallest integer k with accuracy_after_levels(c, p, k) <= epsilon.
int levels_for_accuracy(double c, double p, double epsilon);

// delta with eps3 = delta * eps2 after k levels on both species:
// log2(delta) = 2^k log2(c3 p23 / (c2 p2)) + log2(c2 / c3).
double delta_for_equal_levels(const NoiseParams& params, int k);

// Levels k3 giving the qubit-qutrit decomposition the accuracy the
// qubit-only one reaches at k2:
// k3 = ceil(k2 + log2((log2(c2 p2) - 2^-k2 log2(c2/c3)) /
//                     (log2 delta + log2(c3 p2)))).
int k3_for_same_accuracy(const NoiseParams& params, int k2);

// Real-valued level gap before the outer ceiling (c2 = c3 case).
double level_gap_real(double cp23, double delta);

struct GapRow {
    double cp23 = 0.0;
    double delta = 0.0;
    double cp2 = 0.0;
    int gap = 0;
};

// Gap table rows (cp23, delta, cp2 = cp23/delta, ceil(k3 - k2)) for the
// c2 = c3 case.
std::vector<GapRow> concat_gap_table(
    const std::vector<std::pair<double, double>>& rows);

// The ten rows emitted by `reproduce table1`.
std::vector<GapRow> reference_gap_table();

// Levels shared by both species of a hybrid circuit:
// max over the qubit and qutrit level requirements.
int hybrid_required_levels(const NoiseParams& params);

// Brute-force counterpart of k3_for_same_accuracy: smallest k3 <= 64 with
// (1/c3)(c3 p23)^(2^k3) <= (1/c2)(c2 p2)^(2^k2).
int min_levels_oracle(const NoiseParams& params, int k2);

}  // namespace qftlab::concat
