#include "statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qftlab::sim {

namespace {

constexpr double kBranchPrune = 1e-12;

void check_wire(const StateVector& state, int wire) {
    if (wire < 0 || wire >= state.wire_count()) {
        fail(Errc::invalid_argument,
             "wire index " + std::to_string(wire) + " out of range");
    }
}

}  // namespace

cplx omega() {
    const double theta = 2.0 * std::numbers::pi / 3.0;
    return {std::cos(theta), std::sin(theta)};
}

const char* gate_name(GateBase g) {
    switch (g) {
        case GateBase::X: return "X";
        case GateBase::Z: return "Z";
        case GateBase::H: return "H";
        case GateBase::S: return "S";
        case GateBase::T: return "T";
        case GateBase::Tdg: return "Tdg";
        case GateBase::SX: return "SX";
        case GateBase::X01: return "X01";
        case GateBase::X1: return "X1";
        case GateBase::X2: return "X2";
        case GateBase::Z1: return "Z1";
        case GateBase::Z2: return "Z2";
    }
    return "?";
}

std::optional<GateBase> gate_from_name(std::string_view name) {
    static constexpr GateBase all[] = {
        GateBase::X,  GateBase::Z,  GateBase::H,   GateBase::S,
        GateBase::T,  GateBase::Tdg, GateBase::SX, GateBase::X01,
        GateBase::X1, GateBase::X2, GateBase::Z1,  GateBase::Z2,
    };
    for (GateBase g : all) {
        if (name == gate_name(g)) return g;
    }
    return std::nullopt;
}

int gate_radix(GateBase g) {
    switch (g) {
        case GateBase::X01:
        case GateBase::X1:
        case GateBase::X2:
        case GateBase::Z1:
        case GateBase::Z2:
            return 3;
        default:
            return 2;
    }
}

Eigen::MatrixXcd gate_matrix(GateBase g) {
    using std::numbers::pi;
    const cplx i{0.0, 1.0};
    const cplx w = omega();
    switch (g) {
        case GateBase::X: {
            Eigen::MatrixXcd m(2, 2);
            m << 0, 1, 1, 0;
            return m;
        }
        case GateBase::Z: {
            Eigen::MatrixXcd m(2, 2);
            m << 1, 0, 0, -1;
            return m;
        }
        case GateBase::H: {
            const double s = 1.0 / std::sqrt(2.0);
            Eigen::MatrixXcd m(2, 2);
            m << s, s, s, -s;
            return m;
        }
        case GateBase::S: {
            Eigen::MatrixXcd m(2, 2);
            m << 1, 0, 0, i;
            return m;
        }
        case GateBase::T: {
            Eigen::MatrixXcd m(2, 2);
            m << 1, 0, 0, std::polar(1.0, pi / 4.0);
            return m;
        }
        case GateBase::Tdg: {
            Eigen::MatrixXcd m(2, 2);
            m << 1, 0, 0, std::polar(1.0, -pi / 4.0);
            return m;
        }
        case GateBase::SX: {
            // S*X: the measurement correction that closes the T gadget.
            Eigen::MatrixXcd m(2, 2);
            m << 0, 1, i, 0;
            return m;
        }
        case GateBase::X01: {
            Eigen::MatrixXcd m(3, 3);
            m << 0, 1, 0, 1, 0, 0, 0, 0, 1;
            return m;
        }
        case GateBase::X1: {
            // |j> -> |j+1 mod 3>
            Eigen::MatrixXcd m(3, 3);
            m << 0, 0, 1, 1, 0, 0, 0, 1, 0;
            return m;
        }
        case GateBase::X2: {
            // X1^-1
            Eigen::MatrixXcd m(3, 3);
            m << 0, 1, 0, 0, 0, 1, 1, 0, 0;
            return m;
        }
        case GateBase::Z1: {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
            m(0, 0) = 1;
            m(1, 1) = w;
            m(2, 2) = w * w;
            return m;
        }
        case GateBase::Z2: {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
            m(0, 0) = 1;
            m(1, 1) = w * w;
            m(2, 2) = w;
            return m;
        }
    }
    fail(Errc::internal, "unhandled gate");
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

std::size_t StateVector::stride(int wire) const {
    std::size_t s = 1;
    for (int w = wire_count() - 1; w > wire; --w) {
        s *= static_cast<std::size_t>(radices[static_cast<std::size_t>(w)]);
    }
    return s;
}

int StateVector::digit(std::size_t index, int wire) const {
    const std::size_t r = static_cast<std::size_t>(radices[static_cast<std::size_t>(wire)]);
    return static_cast<int>((index / stride(wire)) % r);
}

std::size_t space_dimension(std::span<const int> radices) {
    std::size_t d = 1;
    for (int r : radices) {
        if (r != 2 && r != 3) {
            fail(Errc::validation_error,
                 "wire radix must be 2 or 3, got " + std::to_string(r));
        }
        d *= static_cast<std::size_t>(r);
    }
    return d;
}

StateVector init_state(std::span<const int> radices, std::string_view digits) {
    StateVector st;
    st.radices.assign(radices.begin(), radices.end());
    const std::size_t d = space_dimension(radices);
    if (digits.size() != radices.size()) {
        fail(Errc::invalid_basis_state,
             "expected " + std::to_string(radices.size()) + " digits, got " +
                 std::to_string(digits.size()));
    }
    std::size_t index = 0;
    for (std::size_t w = 0; w < radices.size(); ++w) {
        const char c = digits[w];
        if (c < '0' || c >= '0' + radices[w]) {
            fail(Errc::invalid_basis_state,
                 std::string("digit '") + c + "' out of range for radix " +
                     std::to_string(radices[w]) + " wire " + std::to_string(w));
        }
        index = index * static_cast<std::size_t>(radices[w]) +
                static_cast<std::size_t>(c - '0');
    }
    st.amps.assign(d, cplx{0.0, 0.0});
    st.amps[index] = cplx{1.0, 0.0};
    return st;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector out;
    out.radices = a.radices;
    out.radices.insert(out.radices.end(), b.radices.begin(), b.radices.end());
    out.amps.resize(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out.amps[i * b.dim() + j] = a.amps[i] * b.amps[j];
        }
    }
    return out;
}

void apply_gate_inplace(StateVector& state, GateBase gate,
                        std::span<const ControlSpec> controls, int target) {
    check_wire(state, target);
    const int r = state.radices[static_cast<std::size_t>(target)];
    if (gate_radix(gate) != r) {
        fail(Errc::radix_mismatch,
             std::string(gate_name(gate)) + " is illegal on a radix-" +
                 std::to_string(r) + " wire");
    }
    for (const ControlSpec& c : controls) {
        check_wire(state, c.wire);
        if (c.wire == target) {
            fail(Errc::invalid_argument, "control wire equals target wire");
        }
        const int cr = state.radices[static_cast<std::size_t>(c.wire)];
        if (c.level < 0 || c.level >= cr) {
            fail(Errc::radix_mismatch,
                 "control level " + std::to_string(c.level) +
                     " is illegal on a radix-" + std::to_string(cr) + " wire");
        }
    }

    const Eigen::MatrixXcd u = gate_matrix(gate);
    const std::size_t stride = state.stride(target);
    const std::size_t ur = static_cast<std::size_t>(r);
    std::vector<cplx> scratch(ur);

    struct ControlStride {
        std::size_t stride;
        std::size_t radix;
        int level;
    };
    std::vector<ControlStride> ctl;
    ctl.reserve(controls.size());
    for (const ControlSpec& c : controls) {
        ctl.push_back({state.stride(c.wire),
                       static_cast<std::size_t>(
                           state.radices[static_cast<std::size_t>(c.wire)]),
                       c.level});
    }

    for (std::size_t base = 0; base < state.dim(); ++base) {
        if ((base / stride) % ur != 0) continue;
        bool active = true;
        for (const ControlStride& c : ctl) {
            if (static_cast<int>((base / c.stride) % c.radix) != c.level) {
                active = false;
                break;
            }
        }
        if (!active) continue;
        for (std::size_t j = 0; j < ur; ++j) scratch[j] = state.amps[base + j * stride];
        for (std::size_t j = 0; j < ur; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < ur; ++k) {
                acc += u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) * scratch[k];
            }
            state.amps[base + j * stride] = acc;
        }
    }
}

StateVector apply_gate(const StateVector& state, GateBase gate,
                       std::span<const ControlSpec> controls, int target) {
    StateVector out = state;
    apply_gate_inplace(out, gate, controls, target);
    return out;
}

std::vector<MeasureBranch> measure_branches(const StateVector& state, int wire) {
    check_wire(state, wire);
    const int r = state.radices[static_cast<std::size_t>(wire)];
    std::vector<MeasureBranch> branches;
    for (int outcome = 0; outcome < r; ++outcome) {
        double prob = 0.0;
        for (std::size_t i = 0; i < state.dim(); ++i) {
            if (state.digit(i, wire) == outcome) prob += std::norm(state.amps[i]);
        }
        if (prob < kBranchPrune) continue;
        MeasureBranch b;
        b.outcome = outcome;
        b.probability = prob;
        b.collapsed.radices = state.radices;
        b.collapsed.amps.assign(state.dim(), cplx{0.0, 0.0});
        const double scale = 1.0 / std::sqrt(prob);
        for (std::size_t i = 0; i < state.dim(); ++i) {
            if (state.digit(i, wire) == outcome) {
                b.collapsed.amps[i] = state.amps[i] * scale;
            }
        }
        branches.push_back(std::move(b));
    }
    return branches;
}

bool equal_up_to_global_phase(std::span<const cplx> a, std::span<const cplx> b,
                              double tol) {
    if (a.size() != b.size()) {
        fail(Errc::shape_mismatch, "size mismatch in phase comparison");
    }
    std::size_t anchor = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double m = std::abs(b[i]);
        if (m > best) {
            best = m;
            anchor = i;
        }
    }
    if (best <= tol) {
        // b is (numerically) zero; equal iff a is too.
        for (const cplx& v : a) {
            if (std::abs(v) > tol) return false;
        }
        return true;
    }
    const cplx ratio = a[anchor] / b[anchor];
    const double mag = std::abs(ratio);
    if (mag < 1e-300) return false;
    const cplx lambda = ratio / mag;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - lambda * b[i]) > tol) return false;
    }
    return true;
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol) {
    if (a.radices != b.radices) {
        fail(Errc::shape_mismatch, "radix vectors differ in phase comparison");
    }
    return equal_up_to_global_phase(std::span<const cplx>(a.amps),
                                    std::span<const cplx>(b.amps), tol);
}

bool equal_up_to_global_phase(const Eigen::MatrixXcd& a,
                              const Eigen::MatrixXcd& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(Errc::shape_mismatch, "matrix shapes differ in phase comparison");
    }
    return equal_up_to_global_phase(
        std::span<const cplx>(a.data(), static_cast<std::size_t>(a.size())),
        std::span<const cplx>(b.data(), static_cast<std::size_t>(b.size())), tol);
}

}  // namespace qftlab::sim
