#include "resource.hpp"

#include <bit>
#include <cmath>

namespace qftlab::resource {

namespace {

void check_width(int n) {
    if (n < 2) {
        fail(Errc::invalid_width,
             "adder width must be >= 2, got " + std::to_string(n));
    }
}

double log2n(int n) { return std::log2(static_cast<double>(n)); }

int hamming_weight(int n) {
    return std::popcount(static_cast<unsigned int>(n));
}

}  // namespace

double adder_toffoli_count(int n, WeightMode mode) {
    check_width(n);
    const double logs = 3.0 * log2n(n) + 3.0 * log2n(n - 1);
    if (mode == WeightMode::simplified) {
        return 4.0 * n - logs - 4.0;
    }
    return 10.0 * n - 3.0 * hamming_weight(n) - 3.0 * hamming_weight(n - 1) -
           logs - 7.0;
}

GateCensus adder_census(int n, Decomposition decomposition, CensusSource source) {
    check_width(n);
    const double l1 = log2n(n);
    const double l2 = log2n(n - 1);
    GateCensus census;
    if (decomposition == Decomposition::qutrit) {
        census["c1-ternary-cnot"] = 8.0 * n - 6.0 * l1 - 6.0 * l2 - 8.0;
        census["c2-ternary-cnot"] = 4.0 * n - 3.0 * l1 - 3.0 * l2 - 4.0;
        return census;
    }
    if (source == CensusSource::reference_table) {
        census["CNOT"] = 24.0 * n - 18.0 * l1 - 18.0 * l2 - 24.0;
        census["H"] = 8.0 * n - 6.0 * l1 - 6.0 * l2 - 8.0;
        census["T-family"] = 14.0 * n - 28.0 * l1 - 28.0 * l2 - 21.0;
        return census;
    }
    const double toffolis = adder_toffoli_count(n, WeightMode::simplified);
    census["CNOT"] = 6.0 * toffolis;
    census["H"] = 2.0 * toffolis;
    census["T-family"] = 7.0 * toffolis;
    return census;
}

double GateCostModel::kappa_of(const std::string& label) const {
    const auto it = kappa.find(label);
    if (it == kappa.end()) {
        fail(Errc::unknown_gate_type,
             "no expansion factor for gate type '" + label + "'");
    }
    return it->second;
}

GateCostModel steane_cost_model(double kappa_g) {
    if (!(kappa_g >= 1.0)) {
        fail(Errc::invalid_argument, "kappa_g must be >= 1");
    }
    GateCostModel model;
    model.block_size = 7.0;
    for (const char* transversal :
         {"X", "Z", "H", "S", "SX", "X01", "X1", "X2", "Z1", "Z2", "CNOT",
          "c1-ternary-cnot"}) {
        model.kappa[transversal] = 7.0;
    }
    model.kappa["T-family"] = 28.0;
    model.kappa["c2-ternary-cnot"] = 7.0 * kappa_g;
    model.upper_bound_g = std::max(28.0, 7.0 * kappa_g);
    return model;
}

double weighted_gate_sum(const GateCensus& census, const GateCostModel& model) {
    double sum = 0.0;
    for (const auto& [label, count] : census) {
        sum += model.kappa_of(label) * count;
    }
    return sum;
}

double nft(const GateCensus& census, const GateCostModel& model, int k) {
    if (k < 1) fail(Errc::invalid_argument, "concatenation level must be >= 1");
    return std::pow(weighted_gate_sum(census, model), k);
}

double adder_qutrit_nft_closed_form(int n, double kappa_g) {
    check_width(n);
    if (!(kappa_g >= 1.0)) {
        fail(Errc::invalid_argument, "kappa_g must be >= 1");
    }
    const double l1 = log2n(n);
    const double l2 = log2n(n - 1);
    return (56.0 * n - 42.0 * l1 - 42.0 * l2 - 56.0) +
           kappa_g * (28.0 * n - 21.0 * l1 - 21.0 * l2 - 28.0);
}

bool size_bound_holds(double r2, double r23, double g, double k2, double k3) {
    if (!(g > 1.0)) fail(Errc::invalid_argument, "need G > 1");
    if (k3 < k2) fail(Errc::invalid_argument, "need k3 >= k2");
    const double gap = std::ceil(k3 - k2);
    return r23 <= r2 / std::pow(g, gap);
}

AdvantageResult advantage_inequality(const concat::NoiseParams& params, int k2,
                                     double sum2, double sum23) {
    if (!(sum2 > 1.0) || !(sum23 > 1.0)) {
        fail(Errc::invalid_argument, "weighted gate sums must exceed 1");
    }
    if (k2 < 0) fail(Errc::invalid_argument, "k2 must be >= 0");
    if (params.c2 * params.p2 >= 1.0) {
        fail(Errc::above_threshold, "c2*p2 is not below threshold");
    }
    if (params.c3 * params.p23 >= 1.0) {
        fail(Errc::above_threshold, "c3*p23 is not below threshold");
    }
    const double denom =
        std::log2(params.delta) + std::log2(params.c3 * params.p2);
    if (denom >= 0.0) {
        fail(Errc::qutrit_above_threshold,
             "log2(delta) + log2(c3 p2) must be negative");
    }
    const double numer = std::log2(params.c2 * params.p2) -
                         std::log2(params.c2 / params.c3) / std::ldexp(1.0, k2);
    if (numer >= 0.0) {
        fail(Errc::above_threshold,
             "effective binary exponent is not below threshold");
    }
    AdvantageResult result;
    result.lhs = std::log2(numer / denom);
    result.rhs = k2 * std::log2(sum2 / sum23) / std::log2(sum23);
    result.holds = result.lhs <= result.rhs;
    return result;
}

std::vector<SweepRow> advantage_sweep(
    int n, const std::vector<double>& kappas, const std::vector<int>& k2s,
    const std::vector<std::pair<double, double>>& line_pairs) {
    check_width(n);
    const GateCensus qubit_census =
        adder_census(n, Decomposition::qubit, CensusSource::reference_table);
    std::vector<SweepRow> rows;
    for (double kappa_g : kappas) {
        const GateCostModel model = steane_cost_model(kappa_g);
        const double sum2 = weighted_gate_sum(qubit_census, model);
        const double sum23 = adder_qutrit_nft_closed_form(n, kappa_g);
        if (!(sum2 > 1.0) || !(sum23 > 1.0)) {
            fail(Errc::invalid_argument, "weighted gate sums must exceed 1");
        }
        for (int k2 : k2s) {
            if (k2 < 1) fail(Errc::invalid_argument, "sweep k2 must be >= 1");
            SweepRow row;
            row.kind = "bar";
            row.kappa = kappa_g;
            row.k2 = k2;
            row.value = k2 * std::log2(sum2 / sum23) / std::log2(sum23);
            rows.push_back(row);
        }
    }
    for (const auto& [cp2, delta] : line_pairs) {
        SweepRow row;
        row.kind = "line";
        row.cp2 = cp2;
        row.delta = delta;
        row.value = concat::level_gap_real(cp2 * delta, delta);
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> default_sweep_kappas() { return {2.0, 3.0, 4.0, 5.0, 6.0}; }

std::vector<int> default_sweep_k2s() { return {1, 2, 3, 4, 5}; }

std::vector<std::pair<double, double>> default_sweep_line_pairs() {
    return {{0.45, 2.0}, {0.3, 3.0}, {0.18, 5.0}, {0.25, 2.0}, {0.1, 5.0}};
}

}  // namespace qftlab::resource
