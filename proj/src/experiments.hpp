#pragma once

#include <optional>
#include <string>
#include <vector>

#include "codes.hpp"

namespace qftlab::qecc {

struct LeakageResult {
    StateVector final_state;
    bool leaked = false;
    double leak_probability = 0.0;
};

// Encodes alpha|000> + beta|111> on three radix-3 wires, applies X1 on every
// wire, injects an X1 fault on wire 0, then applies X2 on every wire.
// `leaked` reports amplitude outside the all-binary-digit subspace.
LeakageResult leakage_experiment(cplx alpha, cplx beta);

struct ShorCnotResult {
    StateVector control_out;  // 3 qubits
    StateVector target_out;   // 3 qutrits
    bool control_in_codespace = false;
    bool target_in_codespace = false;
};

// Transversal 1-controlled ternary CNOT from a binary Shor block |0>_L onto
// a ternary Shor block |2>_L; factors the product output.
ShorCnotResult shor_cnot_experiment();

struct BasisFidelity {
    int ctrl = 0;
    int tgt = 0;
    double fidelity = 1.0;
};

struct TransversalReport {
    std::string ctrl_code;
    std::string tgt_code;
    std::string gate;
    std::string expected;
    bool strict_phase = true;
    bool logical_action_matches = false;
    bool matches_per_basis_phase = false;
    bool stays_in_codespace = false;
    std::vector<BasisFidelity> fidelities;
    double worst_fidelity = 1.0;
    // Match verdict with logical control and target swapped; absent when the
    // swapped gate is ill-typed for the code pair.
    std::optional<bool> reversed_orientation_matches;
};

// Applies the physical two-wire gate on each of the n aligned (control,
// target) wire pairs of every logical basis product state and compares with
// the expected logical action. Gate labels: CNOT, c1-ternary-cnot,
// c2-ternary-cnot. In strict mode a single common phase is allowed across
// all logical basis images; per-basis mode allows one phase per image.
TransversalReport transversal_check(const StabilizerCode& ctrl_code,
                                    const StabilizerCode& tgt_code,
                                    const std::string& gate_label,
                                    const std::string& expected_label,
                                    bool strict_phase = true);

struct TGadgetBranch {
    int outcome = 0;
    double probability = 0.0;
    double fidelity = 0.0;
};

struct TGadgetResult {
    std::vector<TGadgetBranch> branches;
    bool ok = false;
};

// Runs the teleported-T gadget (ancilla H, T; CNOT onto the data wire;
// measure data; SX on the ancilla when the outcome is 1) over all
// measurement branches and checks each against T|psi> up to global phase.
TGadgetResult t_gadget_check(cplx alpha, cplx beta);

}  // namespace qftlab::qecc
