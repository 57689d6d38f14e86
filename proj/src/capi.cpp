#include "qftlab/qftlab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "circuit_json.hpp"
#include "codes.hpp"
#include "concat.hpp"
#include "experiments.hpp"
#include "reports.hpp"
#include "resource.hpp"
#include "statevector.hpp"

struct qftlab_circuit {
    qftlab::ir::Circuit value;
};

struct qftlab_state {
    qftlab::sim::StateVector value;
};

namespace {

thread_local std::string g_last_error;

qftlab_status to_status(qftlab::Errc code) {
    using qftlab::Errc;
    switch (code) {
        case Errc::ok: return QFTLAB_OK;
        case Errc::invalid_argument: return QFTLAB_ERR_INVALID_ARGUMENT;
        case Errc::invalid_basis_state: return QFTLAB_ERR_INVALID_BASIS_STATE;
        case Errc::radix_mismatch: return QFTLAB_ERR_RADIX_MISMATCH;
        case Errc::dimension_limit: return QFTLAB_ERR_DIMENSION_LIMIT;
        case Errc::shape_mismatch: return QFTLAB_ERR_SHAPE;
        case Errc::parse_error: return QFTLAB_ERR_PARSE;
        case Errc::validation_error: return QFTLAB_ERR_VALIDATION;
        case Errc::above_threshold: return QFTLAB_ERR_ABOVE_THRESHOLD;
        case Errc::qutrit_above_threshold: return QFTLAB_ERR_QUTRIT_ABOVE_THRESHOLD;
        case Errc::oracle_overflow: return QFTLAB_ERR_ORACLE_OVERFLOW;
        case Errc::invalid_width: return QFTLAB_ERR_INVALID_WIDTH;
        case Errc::unknown_gate_type: return QFTLAB_ERR_UNKNOWN_GATE_TYPE;
        case Errc::code_construction: return QFTLAB_ERR_CODE_CONSTRUCTION;
        case Errc::factorization: return QFTLAB_ERR_FACTORIZATION;
        case Errc::invalid_state: return QFTLAB_ERR_INVALID_STATE;
        case Errc::unknown_code: return QFTLAB_ERR_UNKNOWN_CODE;
        case Errc::internal: return QFTLAB_ERR_INTERNAL;
    }
    return QFTLAB_ERR_INTERNAL;
}

template <typename Fn>
qftlab_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return QFTLAB_OK;
    } catch (const qftlab::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QFTLAB_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return QFTLAB_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void require(bool condition, const char* message) {
    if (!condition) {
        qftlab::fail(qftlab::Errc::invalid_argument, message);
    }
}

std::vector<int> parse_bit_string(const char* bits) {
    std::vector<int> out;
    if (bits == nullptr) return out;
    for (const char* p = bits; *p != '\0'; ++p) {
        if (*p != '0' && *p != '1') {
            qftlab::fail(qftlab::Errc::invalid_argument,
                         "classical bit string must contain only 0/1");
        }
        out.push_back(*p - '0');
    }
    return out;
}

// Rows/columns of the all-binary-digit subspace, in index order.
std::vector<Eigen::Index> qubit_subspace_indices(const qftlab::sim::StateVector& shape) {
    std::vector<Eigen::Index> keep;
    for (std::size_t idx = 0; idx < shape.dim(); ++idx) {
        bool binary = true;
        for (int w = 0; w < shape.wire_count() && binary; ++w) {
            binary = shape.digit(idx, w) <= 1;
        }
        if (binary) keep.push_back(static_cast<Eigen::Index>(idx));
    }
    return keep;
}

}  // namespace

extern "C" {

const char* qftlab_version(void) { return "0.1.0"; }

const char* qftlab_status_name(qftlab_status status) {
    switch (status) {
        case QFTLAB_OK: return "Ok";
        case QFTLAB_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case QFTLAB_ERR_INVALID_BASIS_STATE: return "InvalidBasisState";
        case QFTLAB_ERR_RADIX_MISMATCH: return "RadixMismatch";
        case QFTLAB_ERR_DIMENSION_LIMIT: return "DimensionLimit";
        case QFTLAB_ERR_SHAPE: return "ShapeError";
        case QFTLAB_ERR_PARSE: return "ParseError";
        case QFTLAB_ERR_VALIDATION: return "ValidationError";
        case QFTLAB_ERR_ABOVE_THRESHOLD: return "AboveThreshold";
        case QFTLAB_ERR_QUTRIT_ABOVE_THRESHOLD: return "QutritAboveThreshold";
        case QFTLAB_ERR_ORACLE_OVERFLOW: return "OracleOverflow";
        case QFTLAB_ERR_INVALID_WIDTH: return "InvalidWidth";
        case QFTLAB_ERR_UNKNOWN_GATE_TYPE: return "UnknownGateType";
        case QFTLAB_ERR_CODE_CONSTRUCTION: return "CodeConstructionError";
        case QFTLAB_ERR_FACTORIZATION: return "FactorizationError";
        case QFTLAB_ERR_INVALID_STATE: return "InvalidState";
        case QFTLAB_ERR_UNKNOWN_CODE: return "UnknownCode";
        case QFTLAB_ERR_INTERNAL: return "InternalError";
    }
    return "UnknownError";
}

const char* qftlab_last_error(void) { return g_last_error.c_str(); }

void qftlab_string_free(char* text) { std::free(text); }

void qftlab_circuit_free(qftlab_circuit* circuit) { delete circuit; }

void qftlab_state_free(qftlab_state* state) { delete state; }

qftlab_status qftlab_circuit_parse(const char* json_text, qftlab_circuit** out) {
    return guarded([&] {
        require(json_text != nullptr && out != nullptr, "null argument");
        auto circuit = std::make_unique<qftlab_circuit>();
        circuit->value = qftlab::ir::parse(json_text);
        *out = circuit.release();
    });
}

qftlab_status qftlab_circuit_serialize(const qftlab_circuit* circuit,
                                       char** out) {
    return guarded([&] {
        require(circuit != nullptr && out != nullptr, "null argument");
        *out = dup_string(qftlab::ir::serialize(circuit->value));
    });
}

qftlab_status qftlab_circuit_census(const qftlab_circuit* circuit, char** out) {
    return guarded([&] {
        require(circuit != nullptr && out != nullptr, "null argument");
        const qftlab::ir::GateCensus census = qftlab::ir::gate_census(circuit->value);
        std::string json = "{";
        bool first = true;
        for (const auto& [label, count] : census) {
            if (!first) json += ',';
            first = false;
            json += '"' + label + "\":" + std::to_string(static_cast<long long>(count));
        }
        json += '}';
        *out = dup_string(json);
    });
}

qftlab_status qftlab_circuit_gate_count(const qftlab_circuit* circuit,
                                        size_t* out) {
    return guarded([&] {
        require(circuit != nullptr && out != nullptr, "null argument");
        *out = circuit->value.gates.size();
    });
}

qftlab_status qftlab_circuit_depth(const qftlab_circuit* circuit, size_t* out) {
    return guarded([&] {
        require(circuit != nullptr && out != nullptr, "null argument");
        *out = qftlab::ir::depth(circuit->value);
    });
}

qftlab_status qftlab_circuit_wire_count(const qftlab_circuit* circuit,
                                        size_t* out) {
    return guarded([&] {
        require(circuit != nullptr && out != nullptr, "null argument");
        *out = circuit->value.wires.size();
    });
}

qftlab_status qftlab_circuit_wire_radix(const qftlab_circuit* circuit,
                                        size_t wire, int* out) {
    return guarded([&] {
        require(circuit != nullptr && out != nullptr, "null argument");
        require(wire < circuit->value.wires.size(), "wire index out of range");
        *out = circuit->value.wires[wire].radix;
    });
}

qftlab_status qftlab_toffoli_decomposition(const char* mode,
                                           qftlab_circuit** out) {
    return guarded([&] {
        require(mode != nullptr && out != nullptr, "null argument");
        auto circuit = std::make_unique<qftlab_circuit>();
        const std::string m = mode;
        if (m == "clifford-t") {
            circuit->value = qftlab::ir::toffoli_clifford_t();
        } else if (m == "qutrit") {
            circuit->value = qftlab::ir::toffoli_qutrit();
        } else {
            qftlab::fail(qftlab::Errc::invalid_argument,
                         "mode must be 'clifford-t' or 'qutrit'");
        }
        *out = circuit.release();
    });
}

qftlab_status qftlab_toffoli_equivalence(const qftlab_circuit* circuit,
                                         double tol, int* out_matches) {
    return guarded([&] {
        require(circuit != nullptr && out_matches != nullptr, "null argument");
        require(circuit->value.wire_count() == 3,
                "Toffoli equivalence expects a 3-wire circuit");
        const Eigen::MatrixXcd u = qftlab::ir::extract_unitary(circuit->value);
        qftlab::sim::StateVector shape;
        for (const auto& w : circuit->value.wires) shape.radices.push_back(w.radix);
        shape.amps.assign(static_cast<std::size_t>(u.rows()), {0.0, 0.0});
        const std::vector<Eigen::Index> keep = qubit_subspace_indices(shape);
        require(keep.size() == 8, "qubit subspace dimension must be 8");
        Eigen::MatrixXcd sub(8, 8);
        for (int r = 0; r < 8; ++r) {
            for (int c = 0; c < 8; ++c) {
                sub(r, c) = u(keep[static_cast<std::size_t>(r)],
                              keep[static_cast<std::size_t>(c)]);
            }
        }
        Eigen::MatrixXcd toffoli = Eigen::MatrixXcd::Zero(8, 8);
        for (int b = 0; b < 8; ++b) {
            const int b0 = (b >> 2) & 1;
            const int b1 = (b >> 1) & 1;
            const int b2 = b & 1;
            const int image = (b0 == 1 && b1 == 1) ? (b ^ 1) : b;
            (void)b2;
            toffoli(image, b) = 1.0;
        }
        *out_matches =
            qftlab::sim::equal_up_to_global_phase(sub, toffoli, tol) ? 1 : 0;
    });
}

qftlab_status qftlab_state_prepare(const int* radices, size_t wire_count,
                                   const char* digits, qftlab_state** out) {
    return guarded([&] {
        require(radices != nullptr && digits != nullptr && out != nullptr,
                "null argument");
        auto state = std::make_unique<qftlab_state>();
        state->value = qftlab::sim::init_state(
            std::span<const int>(radices, wire_count), digits);
        *out = state.release();
    });
}

qftlab_status qftlab_state_apply(qftlab_state* state,
                                 const qftlab_circuit* circuit,
                                 const char* classical_bits) {
    return guarded([&] {
        require(state != nullptr && circuit != nullptr, "null argument");
        const std::vector<int> bits = parse_bit_string(classical_bits);
        state->value = qftlab::ir::run(circuit->value, state->value, bits);
    });
}

qftlab_status qftlab_state_serialize(const qftlab_state* state,
                                     int float_digits, char** out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        *out = dup_string(qftlab::reports::state_json(state->value, float_digits));
    });
}

qftlab_status qftlab_qecc_leakage(double alpha_re, double alpha_im,
                                  double beta_re, double beta_im,
                                  int float_digits, char** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const qftlab::sim::cplx alpha{alpha_re, alpha_im};
        const qftlab::sim::cplx beta{beta_re, beta_im};
        const qftlab::qecc::LeakageResult result =
            qftlab::qecc::leakage_experiment(alpha, beta);
        *out = dup_string(
            qftlab::reports::leakage_report(result, alpha, beta, float_digits));
    });
}

qftlab_status qftlab_qecc_shor_cnot(int float_digits, char** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const qftlab::qecc::ShorCnotResult result =
            qftlab::qecc::shor_cnot_experiment();
        *out = dup_string(qftlab::reports::shor_cnot_report(result, float_digits));
    });
}

qftlab_status qftlab_qecc_transversal(const char* ctrl_code,
                                      const char* tgt_code, const char* gate,
                                      const char* expected,
                                      int per_basis_phase, int float_digits,
                                      char** out) {
    return guarded([&] {
        require(ctrl_code != nullptr && tgt_code != nullptr && gate != nullptr &&
                    expected != nullptr && out != nullptr,
                "null argument");
        const qftlab::qecc::StabilizerCode ctrl = qftlab::qecc::make_code(ctrl_code);
        const qftlab::qecc::StabilizerCode tgt = qftlab::qecc::make_code(tgt_code);
        const qftlab::qecc::TransversalReport report =
            qftlab::qecc::transversal_check(ctrl, tgt, gate, expected,
                                            per_basis_phase == 0);
        *out = dup_string(qftlab::reports::transversal_report(report, float_digits));
    });
}

qftlab_status qftlab_qecc_t_gadget(int has_custom, double alpha_re,
                                   double alpha_im, double beta_re,
                                   double beta_im, int float_digits,
                                   char** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        using qftlab::sim::cplx;
        std::vector<qftlab::reports::TGadgetCase> cases;
        if (has_custom != 0) {
            const cplx alpha{alpha_re, alpha_im};
            const cplx beta{beta_re, beta_im};
            cases.push_back({"custom", alpha, beta,
                             qftlab::qecc::t_gadget_check(alpha, beta)});
        } else {
            const double s = 1.0 / std::sqrt(2.0);
            const cplx zero{0.0, 0.0};
            const cplx one{1.0, 0.0};
            const cplx plus{s, 0.0};
            cases.push_back({"0", one, zero, qftlab::qecc::t_gadget_check(one, zero)});
            cases.push_back({"1", zero, one, qftlab::qecc::t_gadget_check(zero, one)});
            cases.push_back({"+", plus, plus, qftlab::qecc::t_gadget_check(plus, plus)});
        }
        *out = dup_string(qftlab::reports::t_gadget_report(cases, float_digits));
    });
}

qftlab_status qftlab_concat_accuracy(double c, double p, int k, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = qftlab::concat::accuracy_after_levels(c, p, k);
    });
}

qftlab_status qftlab_concat_levels(double c, double p, double epsilon,
                                   int* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = qftlab::concat::levels_for_accuracy(c, p, epsilon);
    });
}

qftlab_status qftlab_concat_delta(double c2, double p2, double c3, double p23,
                                  int k, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const qftlab::concat::NoiseParams params(c2, p2, c3, p23, 0.0);
        *out = qftlab::concat::delta_for_equal_levels(params, k);
    });
}

qftlab_status qftlab_concat_k3(double c2, double p2, double c3, double p23,
                               int k2, int* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const qftlab::concat::NoiseParams params(c2, p2, c3, p23, 0.0);
        *out = qftlab::concat::k3_for_same_accuracy(params, k2);
    });
}

qftlab_status qftlab_concat_hybrid_levels(double c2, double p2, double c3,
                                          double p23, double epsilon,
                                          int* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const qftlab::concat::NoiseParams params(c2, p2, c3, p23, epsilon);
        *out = qftlab::concat::hybrid_required_levels(params);
    });
}

qftlab_status qftlab_concat_gap(double cp23, double delta, int* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = static_cast<int>(
            std::ceil(qftlab::concat::level_gap_real(cp23, delta)));
    });
}

qftlab_status qftlab_adder_toffoli_count(int n, int exact_weights,
                                         double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = qftlab::resource::adder_toffoli_count(
            n, exact_weights != 0 ? qftlab::resource::WeightMode::exact
                                  : qftlab::resource::WeightMode::simplified);
    });
}

qftlab_status qftlab_estimate_adder(int n, const char* decomposition,
                                    const char* census_source, double kappa_g,
                                    int levels, int float_digits, char** out) {
    return guarded([&] {
        require(decomposition != nullptr && out != nullptr, "null argument");
        const std::string decomp = decomposition;
        qftlab::resource::Decomposition d;
        if (decomp == "qubit") {
            d = qftlab::resource::Decomposition::qubit;
        } else if (decomp == "qutrit") {
            d = qftlab::resource::Decomposition::qutrit;
        } else {
            qftlab::fail(qftlab::Errc::invalid_argument,
                         "decomposition must be 'qubit' or 'qutrit'");
        }
        qftlab::resource::CensusSource source =
            qftlab::resource::CensusSource::reference_table;
        if (census_source != nullptr) {
            const std::string s = census_source;
            if (s == "reference") {
                source = qftlab::resource::CensusSource::reference_table;
            } else if (s == "compositional") {
                source = qftlab::resource::CensusSource::compositional;
            } else {
                qftlab::fail(qftlab::Errc::invalid_argument,
                             "census source must be 'reference' or 'compositional'");
            }
        }
        *out = dup_string(qftlab::reports::estimate_adder_json(
            n, d, source, kappa_g, levels, float_digits));
    });
}

qftlab_status qftlab_table1_csv(int float_digits, char** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = dup_string(qftlab::reports::table1_csv(float_digits));
    });
}

qftlab_status qftlab_fig4_csv(int n, const double* kappas, size_t kappa_count,
                              const int* k2s, size_t k2_count,
                              const double* pairs, size_t pair_count,
                              int float_digits, char** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        std::vector<double> kappa_list =
            kappas != nullptr && kappa_count > 0
                ? std::vector<double>(kappas, kappas + kappa_count)
                : qftlab::resource::default_sweep_kappas();
        std::vector<int> k2_list = k2s != nullptr && k2_count > 0
                                       ? std::vector<int>(k2s, k2s + k2_count)
                                       : qftlab::resource::default_sweep_k2s();
        std::vector<std::pair<double, double>> pair_list;
        if (pairs != nullptr && pair_count > 0) {
            for (size_t i = 0; i < pair_count; ++i) {
                pair_list.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
            }
        } else {
            pair_list = qftlab::resource::default_sweep_line_pairs();
        }
        *out = dup_string(qftlab::reports::fig4_csv(n, kappa_list, k2_list,
                                                    pair_list, float_digits));
    });
}

}  // extern "C"
