#include "codes.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qftlab::qecc {

namespace {

constexpr double kAmplitudeEps = 1e-12;

cplx root_of_unity(int radix, int power) {
    const int p = ((power % radix) + radix) % radix;
    if (radix == 2) return p == 0 ? cplx{1.0, 0.0} : cplx{-1.0, 0.0};
    if (p == 0) return cplx{1.0, 0.0};
    const cplx w = sim::omega();
    return p == 1 ? w : w * w;
}

// Image of a basis state under the string: shifts digits, accumulates phase.
void pauli_basis_image(const PauliString& str, int radix,
                       std::vector<int>& digits, cplx& phase) {
    for (std::size_t w = 0; w < str.size(); ++w) {
        phase *= root_of_unity(radix, str.z_pow[w] * digits[w]);
        digits[w] = (digits[w] + str.x_pow[w]) % radix;
    }
}

void normalize(StateVector& state) {
    const double n = state.norm();
    if (n < kAmplitudeEps) {
        fail(Errc::code_construction, "codeword construction annihilated the seed");
    }
    for (cplx& a : state.amps) a /= n;
}

bool is_x_type(const PauliString& s) {
    return std::any_of(s.x_pow.begin(), s.x_pow.end(), [](int p) { return p != 0; });
}

// (1/r) sum_m S^m applied to the block at `offset`.
void apply_projector(StateVector& state, const PauliString& gen, int radix,
                     int offset) {
    StateVector acc = state;
    StateVector power = state;
    for (int m = 1; m < radix; ++m) {
        apply_pauli(power, gen, radix, offset);
        for (std::size_t i = 0; i < acc.amps.size(); ++i) {
            acc.amps[i] += power.amps[i];
        }
    }
    const double scale = 1.0 / radix;
    for (std::size_t i = 0; i < acc.amps.size(); ++i) {
        state.amps[i] = acc.amps[i] * scale;
    }
}

StateVector uniform_diagonal_blocks(int radix, int n_physical, int block_size) {
    StateVector block;
    block.radices.assign(static_cast<std::size_t>(block_size), radix);
    block.amps.assign(sim::space_dimension(block.radices), cplx{0.0, 0.0});
    const double amp = 1.0 / std::sqrt(static_cast<double>(radix));
    for (int m = 0; m < radix; ++m) {
        std::size_t index = 0;
        for (int w = 0; w < block_size; ++w) {
            index = index * static_cast<std::size_t>(radix) + static_cast<std::size_t>(m);
        }
        block.amps[index] = cplx{amp, 0.0};
    }
    StateVector out = block;
    for (int b = block_size; b < n_physical; b += block_size) {
        out = sim::tensor(out, block);
    }
    return out;
}

void fix_global_phase(StateVector& state) {
    for (const cplx& a : state.amps) {
        const double m = std::abs(a);
        if (m > kAmplitudeEps) {
            const cplx rot = std::conj(a) / m;
            for (cplx& v : state.amps) v *= rot;
            return;
        }
    }
}

}  // namespace

PauliString identity_string(std::size_t n) {
    PauliString s;
    s.x_pow.assign(n, 0);
    s.z_pow.assign(n, 0);
    return s;
}

PauliString x_string(std::size_t n, std::initializer_list<int> wires, int power) {
    PauliString s = identity_string(n);
    for (int w : wires) s.x_pow[static_cast<std::size_t>(w)] = power;
    return s;
}

PauliString z_string(std::size_t n,
                     std::initializer_list<std::pair<int, int>> wire_powers) {
    PauliString s = identity_string(n);
    for (const auto& [w, p] : wire_powers) s.z_pow[static_cast<std::size_t>(w)] = p;
    return s;
}

namespace {

// Walks every index of the state with the string's per-index data: the
// target shift of the X part and the Z-phase exponent. The mixed-radix
// odometer keeps per-index work O(1) instead of O(wires).
template <typename Visit>
void scan_pauli(const StateVector& state, const PauliString& str, int radix,
                int offset, Visit&& visit) {
    const std::size_t n = str.size();
    if (offset < 0 || offset + static_cast<int>(n) > state.wire_count()) {
        fail(Errc::shape_mismatch, "Pauli string does not fit the state");
    }
    for (std::size_t w = 0; w < n; ++w) {
        if (state.radices[static_cast<std::size_t>(offset) + w] != radix) {
            fail(Errc::shape_mismatch, "Pauli string radix mismatch");
        }
    }
    const std::size_t wires = static_cast<std::size_t>(state.wire_count());
    std::vector<std::array<std::ptrdiff_t, 3>> shift_of(wires, {0, 0, 0});
    std::vector<std::array<int, 3>> zexp_of(wires, {0, 0, 0});
    for (std::size_t w = 0; w < n; ++w) {
        const std::size_t wire = static_cast<std::size_t>(offset) + w;
        const std::ptrdiff_t stride =
            static_cast<std::ptrdiff_t>(state.stride(static_cast<int>(wire)));
        for (int d = 0; d < radix; ++d) {
            const int nd = (d + str.x_pow[w]) % radix;
            shift_of[wire][static_cast<std::size_t>(d)] = (nd - d) * stride;
            zexp_of[wire][static_cast<std::size_t>(d)] =
                (str.z_pow[w] * d) % radix;
        }
    }
    std::vector<int> digits(wires, 0);
    std::ptrdiff_t shift = 0;
    int zexp = 0;
    for (std::size_t w = 0; w < wires; ++w) {
        shift += shift_of[w][0];
        zexp += zexp_of[w][0];
    }
    for (std::size_t idx = 0;; ++idx) {
        visit(idx, shift, ((zexp % radix) + radix) % radix);
        if (idx + 1 == state.dim()) break;
        // advance the odometer (the last wire is the least significant digit)
        for (std::size_t w = wires; w-- > 0;) {
            const std::size_t d = static_cast<std::size_t>(digits[w]);
            shift -= shift_of[w][d];
            zexp -= zexp_of[w][d];
            if (digits[w] + 1 < state.radices[w]) {
                ++digits[w];
                shift += shift_of[w][d + 1];
                zexp += zexp_of[w][d + 1];
                break;
            }
            digits[w] = 0;
            shift += shift_of[w][0];
            zexp += zexp_of[w][0];
        }
    }
}

}  // namespace

void apply_pauli(StateVector& state, const PauliString& str, int radix,
                 int offset) {
    const cplx phase_table[3] = {root_of_unity(radix, 0), root_of_unity(radix, 1),
                                 root_of_unity(radix, 2)};
    std::vector<cplx> out(state.dim(), cplx{0.0, 0.0});
    scan_pauli(state, str, radix, offset,
               [&](std::size_t idx, std::ptrdiff_t shift, int zexp) {
                   if (state.amps[idx] == cplx{0.0, 0.0}) return;
                   out[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(idx) +
                                                shift)] +=
                       phase_table[zexp] * state.amps[idx];
               });
    state.amps = std::move(out);
}

double pauli_deviation(const StateVector& state, const PauliString& str,
                       int radix, int offset) {
    const cplx phase_table[3] = {root_of_unity(radix, 0), root_of_unity(radix, 1),
                                 root_of_unity(radix, 2)};
    // sum over idx of |phase(idx) psi[idx] - psi[sigma(idx)]|^2, a
    // reindexing of ||S psi - psi||^2 that needs no output buffer.
    double acc = 0.0;
    scan_pauli(state, str, radix, offset,
               [&](std::size_t idx, std::ptrdiff_t shift, int zexp) {
                   const cplx moved = phase_table[zexp] * state.amps[idx];
                   const cplx there =
                       state.amps[static_cast<std::size_t>(
                           static_cast<std::ptrdiff_t>(idx) + shift)];
                   acc += std::norm(moved - there);
               });
    return std::sqrt(acc);
}

StabilizerCode make_code(const std::string& name) {
    StabilizerCode c;
    c.name = name;
    if (name == "rep3-b") {
        c.wire_radix = 2;
        c.n_physical = 3;
        c.generators = {z_string(3, {{0, 1}, {1, 1}}), z_string(3, {{1, 1}, {2, 1}})};
        c.logical_x = x_string(3, {0, 1, 2});
        c.distance = 3;
        c.recipe = CodewordRecipe::seed_projector;
    } else if (name == "rep3-t") {
        c.wire_radix = 3;
        c.n_physical = 3;
        c.generators = {z_string(3, {{0, 1}, {1, 2}}), z_string(3, {{1, 1}, {2, 2}})};
        c.logical_x = x_string(3, {0, 1, 2});
        c.distance = 3;
        c.recipe = CodewordRecipe::seed_projector;
    } else if (name == "shor-block-b") {
        // Single GHZ block: the X-type generator is what flags relative-phase
        // deviations such as |000> + w|111>.
        c.wire_radix = 2;
        c.n_physical = 3;
        c.generators = {x_string(3, {0, 1, 2}), z_string(3, {{0, 1}, {1, 1}})};
        c.logical_x = x_string(3, {2});
        c.distance = 1;
        c.recipe = CodewordRecipe::seed_projector;
    } else if (name == "shor-block-t") {
        // Codewords are the Fourier-phased diagonal states
        // (1/sqrt 3) sum_m w^(j m) |mmm>; logical X is Z1 on one wire.
        c.wire_radix = 3;
        c.n_physical = 3;
        c.generators = {z_string(3, {{0, 1}, {1, 2}}), z_string(3, {{1, 1}, {2, 2}})};
        c.logical_x = z_string(3, {{0, 1}});
        c.distance = 1;
        c.recipe = CodewordRecipe::diagonal_blocks;
        c.block_size = 3;
    } else if (name == "shor9-b") {
        c.wire_radix = 2;
        c.n_physical = 9;
        c.generators = {
            z_string(9, {{0, 1}, {1, 1}}), z_string(9, {{1, 1}, {2, 1}}),
            z_string(9, {{3, 1}, {4, 1}}), z_string(9, {{4, 1}, {5, 1}}),
            z_string(9, {{6, 1}, {7, 1}}), z_string(9, {{7, 1}, {8, 1}}),
            x_string(9, {0, 1, 2, 3, 4, 5}), x_string(9, {3, 4, 5, 6, 7, 8}),
        };
        c.logical_x = z_string(9, {{0, 1}, {3, 1}, {6, 1}});
        c.distance = 3;
        c.recipe = CodewordRecipe::diagonal_blocks;
        c.block_size = 3;
    } else if (name == "shor9-t") {
        PauliString xg1 = identity_string(9);
        PauliString xg2 = identity_string(9);
        for (int w = 0; w < 3; ++w) {
            xg1.x_pow[static_cast<std::size_t>(w)] = 1;
            xg1.x_pow[static_cast<std::size_t>(w + 3)] = 2;
            xg2.x_pow[static_cast<std::size_t>(w + 3)] = 1;
            xg2.x_pow[static_cast<std::size_t>(w + 6)] = 2;
        }
        c.wire_radix = 3;
        c.n_physical = 9;
        c.generators = {
            z_string(9, {{0, 1}, {1, 2}}), z_string(9, {{1, 1}, {2, 2}}),
            z_string(9, {{3, 1}, {4, 2}}), z_string(9, {{4, 1}, {5, 2}}),
            z_string(9, {{6, 1}, {7, 2}}), z_string(9, {{7, 1}, {8, 2}}),
            xg1, xg2,
        };
        c.logical_x = z_string(9, {{0, 1}, {3, 1}, {6, 1}});
        c.distance = 3;
        c.recipe = CodewordRecipe::diagonal_blocks;
        c.block_size = 3;
    } else if (name == "steane7-b" || name == "steane7-t") {
        const bool ternary = name == "steane7-t";
        c.wire_radix = ternary ? 3 : 2;
        c.n_physical = 7;
        c.generators = {
            x_string(7, {3, 4, 5, 6}),
            x_string(7, {1, 2, 5, 6}),
            x_string(7, {0, 2, 4, 6}),
        };
        if (ternary) {
            c.generators.push_back(z_string(7, {{3, 1}, {4, 2}, {5, 2}, {6, 1}}));
            c.generators.push_back(z_string(7, {{1, 1}, {2, 2}, {5, 2}, {6, 1}}));
            c.generators.push_back(z_string(7, {{0, 1}, {2, 2}, {4, 2}, {6, 1}}));
        } else {
            c.generators.push_back(z_string(7, {{3, 1}, {4, 1}, {5, 1}, {6, 1}}));
            c.generators.push_back(z_string(7, {{1, 1}, {2, 1}, {5, 1}, {6, 1}}));
            c.generators.push_back(z_string(7, {{0, 1}, {2, 1}, {4, 1}, {6, 1}}));
        }
        c.logical_x = x_string(7, {0, 1, 2, 3, 4, 5, 6});
        c.distance = 3;
        c.recipe = CodewordRecipe::seed_projector;
    } else {
        fail(Errc::unknown_code, "unknown code name '" + name + "'");
    }
    return c;
}

const std::vector<std::string>& code_names() {
    static const std::vector<std::string> names = {
        "rep3-b",  "rep3-t",  "shor-block-b", "shor-block-t",
        "shor9-b", "shor9-t", "steane7-b",    "steane7-t",
    };
    return names;
}

void verify_code(const StabilizerCode& code, double tol) {
    const std::size_t n = static_cast<std::size_t>(code.n_physical);
    std::vector<PauliString> ops = code.generators;
    ops.push_back(code.logical_x);
    // Commutation is checked on every basis state: both orders must give the
    // same shifted basis state and phase.
    const std::size_t dim = sim::space_dimension(code.radices());
    std::vector<int> digits(n, 0);
    const auto advance = [&]() {
        for (std::size_t w = n; w-- > 0;) {
            if (++digits[w] < code.wire_radix) return true;
            digits[w] = 0;
        }
        return false;
    };
    for (std::size_t a = 0; a < ops.size(); ++a) {
        for (std::size_t b = a + 1; b < ops.size(); ++b) {
            std::fill(digits.begin(), digits.end(), 0);
            std::size_t visited = 0;
            do {
                std::vector<int> ab = digits;
                std::vector<int> ba = digits;
                cplx pab{1.0, 0.0};
                cplx pba{1.0, 0.0};
                pauli_basis_image(ops[b], code.wire_radix, ab, pab);
                pauli_basis_image(ops[a], code.wire_radix, ab, pab);
                pauli_basis_image(ops[a], code.wire_radix, ba, pba);
                pauli_basis_image(ops[b], code.wire_radix, ba, pba);
                if (ab != ba || std::abs(pab - pba) > tol) {
                    const bool with_logical = a >= code.generators.size() ||
                                              b >= code.generators.size();
                    fail(Errc::code_construction,
                         code.name + ": " +
                             (with_logical ? "logical X fails to commute with a generator"
                                           : "generators do not commute"));
                }
                ++visited;
            } while (advance());
            if (visited != dim) {
                fail(Errc::internal, "basis enumeration mismatch");
            }
        }
    }
}

StateVector codeword(const StabilizerCode& code, int j) {
    if (j < 0 || j >= code.wire_radix) {
        fail(Errc::invalid_argument,
             "logical digit " + std::to_string(j) + " out of range for radix " +
                 std::to_string(code.wire_radix));
    }
    StateVector zero;
    if (code.recipe == CodewordRecipe::seed_projector) {
        const std::vector<int> radices = code.radices();
        zero = sim::init_state(radices,
                               std::string(static_cast<std::size_t>(code.n_physical), '0'));
        for (const PauliString& g : code.generators) {
            if (is_x_type(g)) apply_projector(zero, g, code.wire_radix, 0);
        }
        normalize(zero);
    } else {
        zero = uniform_diagonal_blocks(code.wire_radix, code.n_physical,
                                       code.block_size);
    }
    if (!in_codespace(code, zero, 1e-9)) {
        fail(Errc::code_construction,
             code.name + ": constructed |0>_L is not projector-invariant");
    }
    StateVector out = zero;
    for (int k = 0; k < j; ++k) {
        apply_pauli(out, code.logical_x, code.wire_radix, 0);
    }
    fix_global_phase(out);
    return out;
}

bool in_codespace(const StabilizerCode& code, const StateVector& state,
                  double tol) {
    if (state.radices != code.radices()) {
        fail(Errc::shape_mismatch,
             "state dimensions do not match code '" + code.name + "'");
    }
    return in_codespace_embedded(code, state, 0, tol);
}

bool in_codespace_embedded(const StabilizerCode& code, const StateVector& state,
                           int offset, double tol) {
    StateVector projected = state;
    for (const PauliString& g : code.generators) {
        apply_projector(projected, g, code.wire_radix, offset);
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        diff += std::norm(projected.amps[i] - state.amps[i]);
    }
    return std::sqrt(diff) <= tol;
}

}  // namespace qftlab::qecc
