#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "statevector.hpp"

namespace qftlab::ir {

using sim::ControlSpec;
using sim::GateBase;
using sim::StateVector;
using sim::WireSpec;

struct GateInstance {
    GateBase kind = GateBase::X;
    std::vector<ControlSpec> controls;
    int target = 0;
    // Gate applies only when this classical bit is set (see Circuit::run).
    std::optional<int> classical_bit;
};

bool operator==(const GateInstance& a, const GateInstance& b);

// Gate-type label -> count. Counts are reals because the resource model
// also feeds formula-valued censuses through the same type.
using GateCensus = std::map<std::string, double>;

struct Circuit {
    std::vector<WireSpec> wires;
    std::vector<GateInstance> gates;

    int wire_count() const { return static_cast<int>(wires.size()); }
    int radix_of(int wire) const;
};

bool operator==(const Circuit& a, const Circuit& b);

// Builds an empty circuit over the given radices, wires numbered from 0.
Circuit make_circuit(std::span<const int> radices);

// Validates wire ids (unique, contiguous from 0) and per-gate radix
// legality. Throws ValidationError on violation.
void validate(const Circuit& circuit);

// Appends a gate after checking legality against the circuit's wires.
void append_gate(Circuit& circuit, GateBase kind,
                 std::vector<ControlSpec> controls, int target,
                 std::optional<int> classical_bit = std::nullopt);

// Greedy layering: a gate starts the earliest layer after the last layer
// touching any of its wires. Empty circuit has depth 0.
std::size_t depth(const Circuit& circuit);

// Canonical census label of one gate (CNOT, c1-ternary-cnot, ...). T and
// Tdg are merged into "T-family".
std::string census_label(const Circuit& circuit, const GateInstance& gate);

GateCensus gate_census(const Circuit& circuit);

// Toffoli over (c0, c1, t) in Clifford+T: census {T-family 7, CNOT 6, H 2}.
// All three wires must be radix 2.
void decompose_toffoli_clifford_t(Circuit& circuit, int c0, int c1, int t);

// Toffoli over (c0, c1, t) via an intermediate qutrit: c0 and t radix 2,
// c1 radix 3. Exactly three generalized ternary CNOTs at depth 3.
void decompose_toffoli_qutrit(Circuit& circuit, int c0, int c1, int t);

// Standalone three-wire decompositions.
Circuit toffoli_clifford_t();
Circuit toffoli_qutrit();

// Runs the circuit on `state`. Gates with a classical condition apply only
// when `classical_bits` holds a 1 at that bit (missing bits read as 0).
StateVector run(const Circuit& circuit, const StateVector& state,
                std::span<const int> classical_bits = {});

// Columns are the images of basis states. Total dimension is capped at
// 2^20 (DimensionLimit above).
Eigen::MatrixXcd extract_unitary(const Circuit& circuit);

}  // namespace qftlab::ir
