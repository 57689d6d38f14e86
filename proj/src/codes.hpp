#pragma once

#include <string>
#include <vector>

#include "statevector.hpp"

namespace qftlab::qecc {

using sim::cplx;
using sim::StateVector;

// Generalized Pauli string over n same-radix wires. Element w acts as
// X^x_pow[w] Z^z_pow[w] with X|j> = |j+1 mod r> and Z|j> = omega_r^j |j>
// (omega_2 = -1, omega_3 = omega). Z is applied before X per wire.
struct PauliString {
    std::vector<int> x_pow;
    std::vector<int> z_pow;

    std::size_t size() const { return x_pow.size(); }
};

PauliString identity_string(std::size_t n);
// Compact builder: place X^a at the given wires (a=1 unless listed in pow).
PauliString x_string(std::size_t n, std::initializer_list<int> wires, int power = 1);
PauliString z_string(std::size_t n, std::initializer_list<std::pair<int, int>> wire_powers);

// Applies the string to the wires [offset, offset + str.size()) of `state`
// (all of which must have radix `radix`).
void apply_pauli(StateVector& state, const PauliString& str, int radix,
                 int offset = 0);

// ||S state - state||_2 without materializing S state.
double pauli_deviation(const StateVector& state, const PauliString& str,
                       int radix, int offset = 0);

// How |0>_L is produced.
enum class CodewordRecipe {
    // Seed |0...0>, apply the X-type generator projectors, normalize.
    seed_projector,
    // Tensor of per-block uniform diagonal states (1/sqrt r) sum_m |m..m>,
    // for GHZ-type codes whose seed projection collapses logical basis states.
    diagonal_blocks,
};

struct StabilizerCode {
    std::string name;
    int wire_radix = 2;
    int n_physical = 0;
    std::vector<PauliString> generators;
    PauliString logical_x;
    int distance = 0;
    CodewordRecipe recipe = CodewordRecipe::seed_projector;
    int block_size = 0;  // for diagonal_blocks

    int correctable() const { return distance / 2; }
    std::vector<int> radices() const {
        return std::vector<int>(static_cast<std::size_t>(n_physical), wire_radix);
    }
};

// Accepted names: rep3-b, rep3-t, shor-block-b, shor-block-t, shor9-b,
// shor9-t, steane7-b, steane7-t. Throws UnknownCode otherwise.
StabilizerCode make_code(const std::string& name);

const std::vector<std::string>& code_names();

// Numerically verifies [S_i, S_j] = 0 on every basis state and that
// logical_x commutes with every generator. Throws CodeConstructionError.
void verify_code(const StabilizerCode& code, double tol = 1e-9);

// Logical basis state |j>_L with the first nonzero amplitude real positive.
StateVector codeword(const StabilizerCode& code, int j);

// True iff ||P state - state|| <= tol, P the product of per-generator
// projectors (1/r)(I + S + ... + S^(r-1)).
bool in_codespace(const StabilizerCode& code, const StateVector& state,
                  double tol = 1e-9);

// Membership for a state holding this code's block at wire `offset`.
bool in_codespace_embedded(const StabilizerCode& code, const StateVector& state,
                           int offset, double tol = 1e-9);

}  // namespace qftlab::qecc
