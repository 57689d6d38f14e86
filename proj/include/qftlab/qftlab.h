/*
 * qft-lab public C API.
 *
 * A verification and cost-modeling toolkit for fault-tolerant hybrid
 * qubit-qutrit circuits: mixed-radix statevector simulation, Toffoli
 * decomposition passes, stabilizer-code experiments, concatenation-level
 * calculators, and adder resource estimates.
 *
 * Conventions:
 *   - Every fallible call returns qftlab_status; QFTLAB_OK is 0.
 *   - On failure, qftlab_last_error() returns a thread-local description.
 *   - Strings returned through char** are heap-allocated; release them with
 *     qftlab_string_free(). Handles are released with their _free function.
 *   - float_digits controls significant digits in emitted JSON/CSV
 *     (clamped to [3, 17]; 6 is the conventional default).
 */

#ifndef QFTLAB_H
#define QFTLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qftlab_status {
    QFTLAB_OK = 0,
    QFTLAB_ERR_INVALID_ARGUMENT = 1,
    QFTLAB_ERR_INVALID_BASIS_STATE = 2,
    QFTLAB_ERR_RADIX_MISMATCH = 3,
    QFTLAB_ERR_DIMENSION_LIMIT = 4,
    QFTLAB_ERR_SHAPE = 5,
    QFTLAB_ERR_PARSE = 6,
    QFTLAB_ERR_VALIDATION = 7,
    QFTLAB_ERR_ABOVE_THRESHOLD = 8,
    QFTLAB_ERR_QUTRIT_ABOVE_THRESHOLD = 9,
    QFTLAB_ERR_ORACLE_OVERFLOW = 10,
    QFTLAB_ERR_INVALID_WIDTH = 11,
    QFTLAB_ERR_UNKNOWN_GATE_TYPE = 12,
    QFTLAB_ERR_CODE_CONSTRUCTION = 13,
    QFTLAB_ERR_FACTORIZATION = 14,
    QFTLAB_ERR_INVALID_STATE = 15,
    QFTLAB_ERR_UNKNOWN_CODE = 16,
    QFTLAB_ERR_INTERNAL = 17
} qftlab_status;

typedef struct qftlab_circuit qftlab_circuit;
typedef struct qftlab_state qftlab_state;

const char* qftlab_version(void);
const char* qftlab_status_name(qftlab_status status);

/* Description of the most recent failure on this thread. */
const char* qftlab_last_error(void);

void qftlab_string_free(char* text);
void qftlab_circuit_free(qftlab_circuit* circuit);
void qftlab_state_free(qftlab_state* state);

/* ---- circuits -------------------------------------------------------- */

/* Parses the circuit JSON schema:
 * {"wires":[{"id":0,"radix":2},...],
 *  "gates":[{"kind":"X1","controls":[{"wire":0,"level":1}],
 *            "target":1,"classical":null},...]} */
qftlab_status qftlab_circuit_parse(const char* json_text, qftlab_circuit** out);
qftlab_status qftlab_circuit_serialize(const qftlab_circuit* circuit, char** out);

/* Census JSON mapping canonical gate-type labels to counts. */
qftlab_status qftlab_circuit_census(const qftlab_circuit* circuit, char** out);
qftlab_status qftlab_circuit_gate_count(const qftlab_circuit* circuit,
                                        size_t* out);
qftlab_status qftlab_circuit_depth(const qftlab_circuit* circuit, size_t* out);
qftlab_status qftlab_circuit_wire_count(const qftlab_circuit* circuit,
                                        size_t* out);
qftlab_status qftlab_circuit_wire_radix(const qftlab_circuit* circuit,
                                        size_t wire, int* out);

/* mode: "clifford-t" (census {T-family 7, CNOT 6, H 2}) or "qutrit"
 * (three generalized ternary CNOTs at depth 3). */
qftlab_status qftlab_toffoli_decomposition(const char* mode,
                                           qftlab_circuit** out);

/* Extracted unitary equals the 8x8 Toffoli on the qubit subspace, up to a
 * global phase within tol. */
qftlab_status qftlab_toffoli_equivalence(const qftlab_circuit* circuit,
                                         double tol, int* out_matches);

/* ---- simulation ------------------------------------------------------ */

/* Basis state over the given radices (each 2 or 3); `digits` holds one
 * base-radix digit per wire, wire 0 most significant. */
qftlab_status qftlab_state_prepare(const int* radices, size_t wire_count,
                                   const char* digits, qftlab_state** out);

/* Runs the circuit. `classical_bits` is an optional '0'/'1' string backing
 * classically conditioned gates (NULL reads as all zeros). */
qftlab_status qftlab_state_apply(qftlab_state* state,
                                 const qftlab_circuit* circuit,
                                 const char* classical_bits);

/* {"radices":[...],"amplitudes":[{"basis":"012","re":..,"im":..},...]},
 * amplitudes below 1e-12 pruned. */
qftlab_status qftlab_state_serialize(const qftlab_state* state,
                                     int float_digits, char** out);

/* ---- stabilizer-code experiments ------------------------------------- */

/* Code names: rep3-b, rep3-t, shor-block-b, shor-block-t, shor9-b, shor9-t,
 * steane7-b, steane7-t. */

/* Bit-flip fault injected while a rep-3 encoded qubit visits |2>. */
qftlab_status qftlab_qecc_leakage(double alpha_re, double alpha_im,
                                  double beta_re, double beta_im,
                                  int float_digits, char** out);

/* Transversal 1-controlled ternary CNOT between Shor blocks; the control
 * block leaves its codespace. */
qftlab_status qftlab_qecc_shor_cnot(int float_digits, char** out);

/* Transversal check of `gate` from ctrl_code onto tgt_code against the
 * expected logical action. Gate labels: CNOT, c1-ternary-cnot,
 * c2-ternary-cnot. per_basis_phase = 0 requires one common phase across the
 * logical basis (strict mode). */
qftlab_status qftlab_qecc_transversal(const char* ctrl_code,
                                      const char* tgt_code, const char* gate,
                                      const char* expected,
                                      int per_basis_phase, int float_digits,
                                      char** out);

/* Teleported-T gadget over both measurement branches. With has_custom = 0
 * the canonical inputs |0>, |1>, |+> are checked; otherwise the given
 * alpha|0> + beta|1>. */
qftlab_status qftlab_qecc_t_gadget(int has_custom, double alpha_re,
                                   double alpha_im, double beta_re,
                                   double beta_im, int float_digits,
                                   char** out);

/* ---- concatenation calculators --------------------------------------- */

/* (1/c)(c p)^(2^k) */
qftlab_status qftlab_concat_accuracy(double c, double p, int k, double* out);

/* Smallest k with accuracy <= epsilon. */
qftlab_status qftlab_concat_levels(double c, double p, double epsilon,
                                   int* out);

/* Accuracy ratio delta after k levels on both species. */
qftlab_status qftlab_concat_delta(double c2, double p2, double c3, double p23,
                                  int k, double* out);

/* Qutrit levels matching the qubit accuracy at k2. */
qftlab_status qftlab_concat_k3(double c2, double p2, double c3, double p23,
                               int k2, int* out);

/* Shared level count for a hybrid circuit: max of both requirements. */
qftlab_status qftlab_concat_hybrid_levels(double c2, double p2, double c3,
                                          double p23, double epsilon,
                                          int* out);

/* ceil(k3 - k2) for the c2 = c3 case, from c*p23 and delta alone. */
qftlab_status qftlab_concat_gap(double cp23, double delta, int* out);

/* ---- resource model --------------------------------------------------- */

/* In-place n-qubit adder Toffoli count; exact_weights selects true Hamming
 * weights over the simplified w(n) = n form. */
qftlab_status qftlab_adder_toffoli_count(int n, int exact_weights,
                                         double* out);

/* Estimate JSON {n, mode, census, kappa_g, nft, k, metadata}.
 * decomposition: "qubit" or "qutrit"; census_source: "reference" or
 * "compositional" (qubit only). kappa_g prices the non-transversal
 * 2-controlled ternary CNOT; levels is the concatenation depth k >= 1. */
qftlab_status qftlab_estimate_adder(int n, const char* decomposition,
                                    const char* census_source, double kappa_g,
                                    int levels, int float_digits, char** out);

/* CSV `cp23,delta,cp2,gap` with the ten bundled reference rows. */
qftlab_status qftlab_table1_csv(int float_digits, char** out);

/* CSV `n,kind,kappa,k2,cp2,delta,value` for the advantage-inequality sweep;
 * `pairs` holds pair_count (cp2, delta) pairs interleaved. Pass NULL/0 for
 * any list to use the built-in defaults. */
qftlab_status qftlab_fig4_csv(int n, const double* kappas, size_t kappa_count,
                              const int* k2s, size_t k2_count,
                              const double* pairs, size_t pair_count,
                              int float_digits, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QFTLAB_H */
