#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace qftlab::sim {

using cplx = std::complex<double>;

// omega = exp(2*pi*i/3), the primitive cube root of unity used by the
// ternary phase gates (Z1|j> = omega^j |j>).
cplx omega();

struct WireSpec {
    int id = 0;
    int radix = 2;  // 2 or 3
};

// Single-wire gate alphabet. Binary gates are legal on radix-2 wires only,
// ternary gates (X01, X1, X2, Z1, Z2) on radix-3 wires only.
enum class GateBase {
    X,
    Z,
    H,
    S,
    T,
    Tdg,
    SX,
    X01,
    X1,
    X2,
    Z1,
    Z2,
};

const char* gate_name(GateBase g);
std::optional<GateBase> gate_from_name(std::string_view name);

// Radix of the wire the gate acts on.
int gate_radix(GateBase g);

// Dense r x r matrix of a single-wire gate (r = gate_radix).
Eigen::MatrixXcd gate_matrix(GateBase g);

struct ControlSpec {
    int wire = 0;
    int level = 1;  // activation level, must be < control wire radix
};

// Dense amplitude vector over the mixed-radix product space.
// Wire 0 is the most significant digit of the basis index.
struct StateVector {
    std::vector<int> radices;
    std::vector<cplx> amps;

    std::size_t dim() const { return amps.size(); }
    int wire_count() const { return static_cast<int>(radices.size()); }
    double norm() const;

    std::size_t stride(int wire) const;
    int digit(std::size_t index, int wire) const;
};

std::size_t space_dimension(std::span<const int> radices);

// Basis state |digits>, wire 0 most significant.
StateVector init_state(std::span<const int> radices, std::string_view digits);

// Tensor product; a's wires come first (most significant).
StateVector tensor(const StateVector& a, const StateVector& b);

// Applies `gate` on `target`, restricted to the subspace where every control
// wire holds its activation level. Pure: returns a new state.
StateVector apply_gate(const StateVector& state, GateBase gate,
                       std::span<const ControlSpec> controls, int target);

// In-place kernel used by apply_gate and the circuit runner.
void apply_gate_inplace(StateVector& state, GateBase gate,
                        std::span<const ControlSpec> controls, int target);

struct MeasureBranch {
    int outcome = 0;
    double probability = 0.0;
    StateVector collapsed;
};

// Enumerates measurement outcomes on one wire. Branches with probability
// below 1e-12 are dropped; collapsed states are renormalized.
std::vector<MeasureBranch> measure_branches(const StateVector& state, int wire);

// True iff a = lambda * b for some unit-modulus lambda, with lambda anchored
// at b's largest-magnitude entry. Max-norm comparison against tol.
bool equal_up_to_global_phase(std::span<const cplx> a, std::span<const cplx> b,
                              double tol);
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol);
bool equal_up_to_global_phase(const Eigen::MatrixXcd& a,
                              const Eigen::MatrixXcd& b, double tol);

}  // namespace qftlab::sim
