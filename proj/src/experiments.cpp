#include "experiments.hpp"

#include <cmath>
#include <numbers>

namespace qftlab::qecc {

namespace {

using sim::ControlSpec;
using sim::GateBase;

constexpr double kTol = 1e-9;
constexpr double kFidelityTol = 1e-9;
constexpr double kPhaseCoherenceTol = 1e-6;
// 2^23 admits the largest required pairing, two ternary 7-wire blocks
// (3^14 ~ 4.8e6 amplitudes).
constexpr std::size_t kDimensionLimit = 1u << 23;

void check_normalized(cplx alpha, cplx beta) {
    const double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1.0) > kTol) {
        fail(Errc::invalid_state,
             "input amplitudes are not normalized: |a|^2+|b|^2 = " +
                 std::to_string(n));
    }
}

cplx inner(const StateVector& a, const StateVector& b) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a.amps[i]) * b.amps[i];
    }
    return acc;
}

void fix_first_positive(StateVector& state) {
    for (const cplx& a : state.amps) {
        const double m = std::abs(a);
        if (m > 1e-12) {
            const cplx rot = std::conj(a) / m;
            for (cplx& v : state.amps) v *= rot;
            return;
        }
    }
}

struct PairGate {
    int control_level = 1;
    GateBase target_gate = GateBase::X;
};

// <a (x) b, joint> exploiting that codewords have few nonzero amplitudes.
cplx product_state_overlap(const StateVector& a, const StateVector& b,
                           const StateVector& joint) {
    cplx acc{0.0, 0.0};
    const std::size_t dim_b = b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.amps[i] == cplx{0.0, 0.0}) continue;
        cplx row{0.0, 0.0};
        for (std::size_t j = 0; j < dim_b; ++j) {
            if (b.amps[j] == cplx{0.0, 0.0}) continue;
            row += std::conj(b.amps[j]) * joint.amps[i * dim_b + j];
        }
        acc += std::conj(a.amps[i]) * row;
    }
    return acc;
}

// True once every generator fixes the block at `offset` (to tol).
bool block_stabilized(const StabilizerCode& code, const StateVector& state,
                      int offset, double tol) {
    for (const PauliString& g : code.generators) {
        if (pauli_deviation(state, g, code.wire_radix, offset) > tol) {
            return false;
        }
    }
    return true;
}

PairGate resolve_pair_gate(const std::string& label, int ctrl_radix,
                           int tgt_radix) {
    if (label == "CNOT") {
        if (ctrl_radix != 2 || tgt_radix != 2) {
            fail(Errc::radix_mismatch, "CNOT requires radix-2 control and target");
        }
        return {1, GateBase::X};
    }
    if (label == "c1-ternary-cnot") {
        if (tgt_radix != 3) {
            fail(Errc::radix_mismatch, "c1-ternary-cnot requires a radix-3 target");
        }
        return {1, GateBase::X1};
    }
    if (label == "c2-ternary-cnot") {
        if (ctrl_radix != 3) {
            fail(Errc::radix_mismatch, "c2-ternary-cnot requires a radix-3 control");
        }
        return {2, tgt_radix == 3 ? GateBase::X01 : GateBase::X};
    }
    fail(Errc::unknown_gate_type, "unknown transversal gate label '" + label + "'");
}

// <expected, actual> for logical input (i, j) under a controlled gate at
// logical level `level` acting on the target logical space. The expected
// image is a short codeword-product sum, so it is never materialized.
cplx expected_overlap(const std::vector<StateVector>& ctrl_cw,
                      const std::vector<StateVector>& tgt_cw, int i, int j,
                      const PairGate& gate, const StateVector& actual) {
    if (i != gate.control_level) {
        return product_state_overlap(ctrl_cw[static_cast<std::size_t>(i)],
                                     tgt_cw[static_cast<std::size_t>(j)], actual);
    }
    const Eigen::MatrixXcd m = sim::gate_matrix(gate.target_gate);
    cplx acc{0.0, 0.0};
    for (int jp = 0; jp < static_cast<int>(tgt_cw.size()); ++jp) {
        const cplx coeff = m(jp, j);
        if (std::abs(coeff) < 1e-15) continue;
        acc += std::conj(coeff) *
               product_state_overlap(ctrl_cw[static_cast<std::size_t>(i)],
                                     tgt_cw[static_cast<std::size_t>(jp)], actual);
    }
    return acc;
}

// Same with control on the target-side logical digit and action on the
// control-side logical digit.
cplx expected_overlap_reversed(const std::vector<StateVector>& ctrl_cw,
                               const std::vector<StateVector>& tgt_cw, int i,
                               int j, const PairGate& gate,
                               const StateVector& actual) {
    if (j != gate.control_level) {
        return product_state_overlap(ctrl_cw[static_cast<std::size_t>(i)],
                                     tgt_cw[static_cast<std::size_t>(j)], actual);
    }
    const Eigen::MatrixXcd m = sim::gate_matrix(gate.target_gate);
    cplx acc{0.0, 0.0};
    for (int ip = 0; ip < static_cast<int>(ctrl_cw.size()); ++ip) {
        const cplx coeff = m(ip, i);
        if (std::abs(coeff) < 1e-15) continue;
        acc += std::conj(coeff) *
               product_state_overlap(ctrl_cw[static_cast<std::size_t>(ip)],
                                     tgt_cw[static_cast<std::size_t>(j)], actual);
    }
    return acc;
}

}  // namespace

LeakageResult leakage_experiment(cplx alpha, cplx beta) {
    check_normalized(alpha, beta);
    StateVector state;
    state.radices = {3, 3, 3};
    state.amps.assign(27, cplx{0.0, 0.0});
    state.amps[0] = alpha;    // |000>
    state.amps[13] = beta;    // |111>
    for (int w : {0, 1, 2}) sim::apply_gate_inplace(state, GateBase::X1, {}, w);
    sim::apply_gate_inplace(state, GateBase::X1, {}, 0);  // injected fault
    for (int w : {0, 1, 2}) sim::apply_gate_inplace(state, GateBase::X2, {}, w);

    LeakageResult result;
    result.leak_probability = 0.0;
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        bool binary = true;
        for (int w = 0; w < 3; ++w) {
            if (state.digit(idx, w) >= 2) {
                binary = false;
                break;
            }
        }
        if (!binary) result.leak_probability += std::norm(state.amps[idx]);
    }
    result.leaked = result.leak_probability > 1e-12;
    result.final_state = std::move(state);
    return result;
}

ShorCnotResult shor_cnot_experiment() {
    const StabilizerCode ctrl_code = make_code("shor-block-b");
    const StabilizerCode tgt_code = make_code("shor-block-t");
    const StateVector ctrl_in = codeword(ctrl_code, 0);
    const StateVector tgt_in = codeword(tgt_code, 2);
    StateVector joint = sim::tensor(ctrl_in, tgt_in);
    for (int k = 0; k < 3; ++k) {
        const ControlSpec controls[] = {{k, 1}};
        sim::apply_gate_inplace(joint, GateBase::X1, controls, 3 + k);
    }

    // The output must factor as (control block) x (target block).
    const std::size_t dim_c = 8;
    const std::size_t dim_t = 27;
    std::size_t best_c = 0, best_t = 0;
    double best = -1.0;
    for (std::size_t c = 0; c < dim_c; ++c) {
        for (std::size_t t = 0; t < dim_t; ++t) {
            const double m = std::abs(joint.amps[c * dim_t + t]);
            if (m > best) {
                best = m;
                best_c = c;
                best_t = t;
            }
        }
    }
    const cplx pivot = joint.amps[best_c * dim_t + best_t];
    StateVector u, v;
    u.radices = {2, 2, 2};
    v.radices = {3, 3, 3};
    u.amps.resize(dim_c);
    v.amps.resize(dim_t);
    for (std::size_t c = 0; c < dim_c; ++c) u.amps[c] = joint.amps[c * dim_t + best_t];
    for (std::size_t t = 0; t < dim_t; ++t) {
        v.amps[t] = joint.amps[best_c * dim_t + t] / pivot;
    }
    double residual = 0.0;
    for (std::size_t c = 0; c < dim_c; ++c) {
        for (std::size_t t = 0; t < dim_t; ++t) {
            residual += std::norm(joint.amps[c * dim_t + t] - u.amps[c] * v.amps[t]);
        }
    }
    if (std::sqrt(residual) > kTol) {
        fail(Errc::factorization,
             "transversal block output is not a product state");
    }
    const double un = u.norm();
    const double vn = v.norm();
    for (cplx& a : u.amps) a /= un;
    for (cplx& a : v.amps) a /= vn;
    fix_first_positive(u);
    fix_first_positive(v);

    ShorCnotResult result;
    result.control_in_codespace = in_codespace(ctrl_code, u, kTol);
    result.target_in_codespace = in_codespace(tgt_code, v, kTol);
    result.control_out = std::move(u);
    result.target_out = std::move(v);
    return result;
}

TransversalReport transversal_check(const StabilizerCode& ctrl_code,
                                    const StabilizerCode& tgt_code,
                                    const std::string& gate_label,
                                    const std::string& expected_label,
                                    bool strict_phase) {
    if (ctrl_code.n_physical != tgt_code.n_physical) {
        fail(Errc::invalid_argument,
             "transversal check requires equally sized blocks");
    }
    const int n = ctrl_code.n_physical;
    const std::size_t joint_dim =
        sim::space_dimension(ctrl_code.radices()) *
        sim::space_dimension(tgt_code.radices());
    if (joint_dim > kDimensionLimit) {
        fail(Errc::dimension_limit,
             "joint dimension " + std::to_string(joint_dim) + " exceeds 2^20");
    }

    const PairGate physical =
        resolve_pair_gate(gate_label, ctrl_code.wire_radix, tgt_code.wire_radix);
    const PairGate logical =
        resolve_pair_gate(expected_label, ctrl_code.wire_radix, tgt_code.wire_radix);

    std::vector<StateVector> ctrl_cw;
    std::vector<StateVector> tgt_cw;
    for (int i = 0; i < ctrl_code.wire_radix; ++i) ctrl_cw.push_back(codeword(ctrl_code, i));
    for (int j = 0; j < tgt_code.wire_radix; ++j) tgt_cw.push_back(codeword(tgt_code, j));

    TransversalReport report;
    report.ctrl_code = ctrl_code.name;
    report.tgt_code = tgt_code.name;
    report.gate = gate_label;
    report.expected = expected_label;
    report.strict_phase = strict_phase;

    // Reversed orientation is reported when the swapped gate is well-typed.
    bool reversed_possible = true;
    PairGate reversed_logical;
    try {
        reversed_logical =
            resolve_pair_gate(expected_label, tgt_code.wire_radix, ctrl_code.wire_radix);
    } catch (const Error&) {
        reversed_possible = false;
    }

    bool all_per_basis = true;
    bool all_in_codespace = true;
    bool reversed_per_basis = true;
    bool phase_coherent = true;
    bool reversed_phase_coherent = true;
    std::optional<cplx> phase_ref;
    std::optional<cplx> reversed_phase_ref;
    double worst = 1.0;

    for (int i = 0; i < ctrl_code.wire_radix; ++i) {
        for (int j = 0; j < tgt_code.wire_radix; ++j) {
            StateVector actual =
                sim::tensor(ctrl_cw[static_cast<std::size_t>(i)],
                            tgt_cw[static_cast<std::size_t>(j)]);
            for (int k = 0; k < n; ++k) {
                const ControlSpec controls[] = {{k, physical.control_level}};
                sim::apply_gate_inplace(actual, physical.target_gate, controls, n + k);
            }

            const cplx overlap = expected_overlap(ctrl_cw, tgt_cw, i, j, logical, actual);
            const double fidelity = std::norm(overlap);
            report.fidelities.push_back({i, j, fidelity});
            worst = std::min(worst, fidelity);
            const bool basis_ok = fidelity >= 1.0 - kFidelityTol;
            all_per_basis = all_per_basis && basis_ok;
            if (basis_ok) {
                const cplx lambda = overlap / std::abs(overlap);
                if (!phase_ref) {
                    phase_ref = lambda;
                } else if (std::abs(lambda - *phase_ref) > kPhaseCoherenceTol) {
                    phase_coherent = false;
                }
            }

            if (all_in_codespace) {
                all_in_codespace = block_stabilized(ctrl_code, actual, 0, kTol) &&
                                   block_stabilized(tgt_code, actual, n, kTol);
            }

            if (reversed_possible) {
                const cplx rev_overlap = expected_overlap_reversed(
                    ctrl_cw, tgt_cw, i, j, reversed_logical, actual);
                const double rev_fidelity = std::norm(rev_overlap);
                const bool rev_ok = rev_fidelity >= 1.0 - kFidelityTol;
                reversed_per_basis = reversed_per_basis && rev_ok;
                if (rev_ok) {
                    const cplx lambda = rev_overlap / std::abs(rev_overlap);
                    if (!reversed_phase_ref) {
                        reversed_phase_ref = lambda;
                    } else if (std::abs(lambda - *reversed_phase_ref) >
                               kPhaseCoherenceTol) {
                        reversed_phase_coherent = false;
                    }
                }
            }
        }
    }

    report.worst_fidelity = worst;
    report.matches_per_basis_phase = all_per_basis;
    report.logical_action_matches =
        strict_phase ? (all_per_basis && phase_coherent) : all_per_basis;
    report.stays_in_codespace = all_in_codespace;
    if (reversed_possible) {
        report.reversed_orientation_matches =
            strict_phase ? (reversed_per_basis && reversed_phase_coherent)
                         : reversed_per_basis;
    }
    return report;
}

TGadgetResult t_gadget_check(cplx alpha, cplx beta) {
    check_normalized(alpha, beta);
    StateVector state;
    state.radices = {2, 2};  // wire 0 ancilla, wire 1 data
    state.amps = {alpha, beta, cplx{0.0, 0.0}, cplx{0.0, 0.0}};
    sim::apply_gate_inplace(state, GateBase::H, {}, 0);
    sim::apply_gate_inplace(state, GateBase::T, {}, 0);
    const ControlSpec on_ancilla[] = {{0, 1}};
    sim::apply_gate_inplace(state, GateBase::X, on_ancilla, 1);

    // Reference output.
    StateVector want;
    want.radices = {2};
    const cplx t_phase = std::polar(1.0, std::numbers::pi / 4.0);
    want.amps = {alpha, t_phase * beta};

    TGadgetResult result;
    result.ok = true;
    for (const sim::MeasureBranch& branch : sim::measure_branches(state, 1)) {
        StateVector collapsed = branch.collapsed;
        if (branch.outcome == 1) {
            sim::apply_gate_inplace(collapsed, GateBase::SX, {}, 0);
        }
        StateVector ancilla;
        ancilla.radices = {2};
        ancilla.amps = {collapsed.amps[0 * 2 + branch.outcome],
                        collapsed.amps[1 * 2 + branch.outcome]};
        const cplx overlap = inner(want, ancilla);
        TGadgetBranch b;
        b.outcome = branch.outcome;
        b.probability = branch.probability;
        b.fidelity = std::norm(overlap);
        result.ok = result.ok && sim::equal_up_to_global_phase(ancilla, want, kTol);
        result.branches.push_back(b);
    }
    return result;
}

}  // namespace qftlab::qecc
