#include "circuit.hpp"

#include <algorithm>
#include <set>

namespace qftlab::ir {

bool operator==(const GateInstance& a, const GateInstance& b) {
    if (a.kind != b.kind || a.target != b.target ||
        a.classical_bit != b.classical_bit ||
        a.controls.size() != b.controls.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.controls.size(); ++i) {
        if (a.controls[i].wire != b.controls[i].wire ||
            a.controls[i].level != b.controls[i].level) {
            return false;
        }
    }
    return true;
}

bool operator==(const Circuit& a, const Circuit& b) {
    if (a.wires.size() != b.wires.size() || a.gates.size() != b.gates.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.wires.size(); ++i) {
        if (a.wires[i].id != b.wires[i].id || a.wires[i].radix != b.wires[i].radix) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.gates.size(); ++i) {
        if (!(a.gates[i] == b.gates[i])) return false;
    }
    return true;
}

int Circuit::radix_of(int wire) const {
    if (wire < 0 || wire >= wire_count()) {
        fail(Errc::validation_error,
             "wire index " + std::to_string(wire) + " out of range");
    }
    return wires[static_cast<std::size_t>(wire)].radix;
}

Circuit make_circuit(std::span<const int> radices) {
    Circuit c;
    int id = 0;
    for (int r : radices) {
        if (r != 2 && r != 3) {
            fail(Errc::validation_error,
                 "wire radix must be 2 or 3, got " + std::to_string(r));
        }
        c.wires.push_back(WireSpec{id++, r});
    }
    return c;
}

namespace {

void validate_gate(const Circuit& circuit, const GateInstance& g) {
    const int radix = circuit.radix_of(g.target);
    if (sim::gate_radix(g.kind) != radix) {
        fail(Errc::validation_error,
             std::string(sim::gate_name(g.kind)) + " is illegal on radix-" +
                 std::to_string(radix) + " wire " + std::to_string(g.target));
    }
    std::set<int> seen{g.target};
    for (const ControlSpec& c : g.controls) {
        const int cr = circuit.radix_of(c.wire);
        if (!seen.insert(c.wire).second) {
            fail(Errc::validation_error,
                 "wire " + std::to_string(c.wire) + " used twice in one gate");
        }
        if (c.level < 0 || c.level >= cr) {
            fail(Errc::validation_error,
                 "control level " + std::to_string(c.level) +
                     " is illegal on radix-" + std::to_string(cr) + " wire " +
                     std::to_string(c.wire));
        }
    }
    if (g.classical_bit && *g.classical_bit < 0) {
        fail(Errc::validation_error, "classical bit index must be >= 0");
    }
}

}  // namespace

void validate(const Circuit& circuit) {
    for (std::size_t i = 0; i < circuit.wires.size(); ++i) {
        const WireSpec& w = circuit.wires[i];
        if (w.id != static_cast<int>(i)) {
            fail(Errc::validation_error,
                 "wire ids must be contiguous from 0, found id " +
                     std::to_string(w.id) + " at position " + std::to_string(i));
        }
        if (w.radix != 2 && w.radix != 3) {
            fail(Errc::validation_error,
                 "wire " + std::to_string(w.id) + " has radix " +
                     std::to_string(w.radix) + ", expected 2 or 3");
        }
    }
    for (const GateInstance& g : circuit.gates) validate_gate(circuit, g);
}

void append_gate(Circuit& circuit, GateBase kind,
                 std::vector<ControlSpec> controls, int target,
                 std::optional<int> classical_bit) {
    GateInstance g;
    g.kind = kind;
    g.controls = std::move(controls);
    g.target = target;
    g.classical_bit = classical_bit;
    validate_gate(circuit, g);
    circuit.gates.push_back(std::move(g));
}

std::size_t depth(const Circuit& circuit) {
    std::vector<std::size_t> wire_layer(circuit.wires.size(), 0);
    std::size_t d = 0;
    for (const GateInstance& g : circuit.gates) {
        std::size_t layer = 0;
        layer = std::max(layer, wire_layer[static_cast<std::size_t>(g.target)]);
        for (const ControlSpec& c : g.controls) {
            layer = std::max(layer, wire_layer[static_cast<std::size_t>(c.wire)]);
        }
        ++layer;
        wire_layer[static_cast<std::size_t>(g.target)] = layer;
        for (const ControlSpec& c : g.controls) {
            wire_layer[static_cast<std::size_t>(c.wire)] = layer;
        }
        d = std::max(d, layer);
    }
    return d;
}

std::string census_label(const Circuit& circuit, const GateInstance& g) {
    const GateBase k = g.kind;
    if (g.controls.empty()) {
        if (k == GateBase::T || k == GateBase::Tdg) return "T-family";
        return sim::gate_name(k);
    }
    if (g.controls.size() == 1) {
        const ControlSpec& c = g.controls.front();
        const int control_radix = circuit.radix_of(c.wire);
        if (c.level == 1 && (k == GateBase::X1 || k == GateBase::X2)) {
            return "c1-ternary-cnot";
        }
        if (c.level == 2 && (k == GateBase::X || k == GateBase::X01)) {
            return "c2-ternary-cnot";
        }
        if (c.level == 1 && k == GateBase::X && control_radix == 2) {
            return "CNOT";
        }
        return "c" + std::to_string(c.level) + "-" + sim::gate_name(k);
    }
    std::string levels;
    for (const ControlSpec& c : g.controls) levels += std::to_string(c.level);
    return "c" + levels + "-" + sim::gate_name(k);
}

GateCensus gate_census(const Circuit& circuit) {
    GateCensus census;
    for (const GateInstance& g : circuit.gates) {
        census[census_label(circuit, g)] += 1.0;
    }
    return census;
}

void decompose_toffoli_clifford_t(Circuit& circuit, int c0, int c1, int t) {
    for (int w : {c0, c1, t}) {
        if (circuit.radix_of(w) != 2) {
            fail(Errc::radix_mismatch,
                 "Clifford+T Toffoli requires radix-2 wires, wire " +
                     std::to_string(w) + " is radix " +
                     std::to_string(circuit.radix_of(w)));
        }
    }
    if (c0 == c1 || c0 == t || c1 == t) {
        fail(Errc::invalid_argument, "Toffoli wires must be distinct");
    }
    const auto cnot = [&](int ctrl, int tgt) {
        append_gate(circuit, GateBase::X, {{ctrl, 1}}, tgt);
    };
    append_gate(circuit, GateBase::H, {}, t);
    cnot(c1, t);
    append_gate(circuit, GateBase::Tdg, {}, t);
    cnot(c0, t);
    append_gate(circuit, GateBase::T, {}, t);
    cnot(c1, t);
    append_gate(circuit, GateBase::Tdg, {}, t);
    cnot(c0, t);
    append_gate(circuit, GateBase::T, {}, c1);
    append_gate(circuit, GateBase::T, {}, t);
    append_gate(circuit, GateBase::H, {}, t);
    cnot(c0, c1);
    append_gate(circuit, GateBase::T, {}, c0);
    append_gate(circuit, GateBase::Tdg, {}, c1);
    cnot(c0, c1);
}

void decompose_toffoli_qutrit(Circuit& circuit, int c0, int c1, int t) {
    if (circuit.radix_of(c0) != 2 || circuit.radix_of(t) != 2) {
        fail(Errc::radix_mismatch,
             "qutrit Toffoli requires radix-2 wires for c0 and t");
    }
    if (circuit.radix_of(c1) != 3) {
        fail(Errc::radix_mismatch,
             "qutrit Toffoli requires a radix-3 wire for c1");
    }
    if (c0 == c1 || c0 == t || c1 == t) {
        fail(Errc::invalid_argument, "Toffoli wires must be distinct");
    }
    append_gate(circuit, GateBase::X1, {{c0, 1}}, c1);
    append_gate(circuit, GateBase::X, {{c1, 2}}, t);
    append_gate(circuit, GateBase::X2, {{c0, 1}}, c1);
}

Circuit toffoli_clifford_t() {
    const int radices[] = {2, 2, 2};
    Circuit c = make_circuit(radices);
    decompose_toffoli_clifford_t(c, 0, 1, 2);
    return c;
}

Circuit toffoli_qutrit() {
    const int radices[] = {2, 3, 2};
    Circuit c = make_circuit(radices);
    decompose_toffoli_qutrit(c, 0, 1, 2);
    return c;
}

StateVector run(const Circuit& circuit, const StateVector& state,
                std::span<const int> classical_bits) {
    if (state.radices.size() != circuit.wires.size()) {
        fail(Errc::shape_mismatch, "state wire count differs from circuit");
    }
    for (std::size_t w = 0; w < state.radices.size(); ++w) {
        if (state.radices[w] != circuit.wires[w].radix) {
            fail(Errc::shape_mismatch,
                 "state radix differs from circuit on wire " + std::to_string(w));
        }
    }
    StateVector out = state;
    for (const GateInstance& g : circuit.gates) {
        if (g.classical_bit) {
            const std::size_t bit = static_cast<std::size_t>(*g.classical_bit);
            const int value = bit < classical_bits.size() ? classical_bits[bit] : 0;
            if (value == 0) continue;
        }
        sim::apply_gate_inplace(out, g.kind, g.controls, g.target);
    }
    return out;
}

Eigen::MatrixXcd extract_unitary(const Circuit& circuit) {
    validate(circuit);
    std::vector<int> radices;
    radices.reserve(circuit.wires.size());
    for (const WireSpec& w : circuit.wires) radices.push_back(w.radix);
    const std::size_t dim = sim::space_dimension(radices);
    if (dim > (1u << 20)) {
        fail(Errc::dimension_limit,
             "unitary extraction capped at 2^20 dimensions, got " +
                 std::to_string(dim));
    }
    Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    StateVector basis;
    basis.radices = radices;
    basis.amps.assign(dim, sim::cplx{0.0, 0.0});
    for (std::size_t b = 0; b < dim; ++b) {
        basis.amps[b] = sim::cplx{1.0, 0.0};
        StateVector image = run(circuit, basis);
        for (std::size_t rix = 0; rix < dim; ++rix) {
            u(static_cast<Eigen::Index>(rix), static_cast<Eigen::Index>(b)) = image.amps[rix];
        }
        basis.amps[b] = sim::cplx{0.0, 0.0};
    }
    return u;
}

}  // namespace qftlab::ir
