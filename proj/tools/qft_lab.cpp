// Command-line front end. Talks to the core exclusively through the
// public C API in qftlab/qftlab.h.

#include <CLI11.hpp>
#include <cstdio>
#include <cstring>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qftlab/qftlab.h"

namespace {

constexpr int kUsageError = 2;

int float_digits() {
    const char* env = std::getenv("QFT_LAB_FLOAT_DIGITS");
    if (env == nullptr || *env == '\0') return 6;
    const int digits = std::atoi(env);
    return digits > 0 ? digits : 6;
}

struct StringGuard {
    char* value = nullptr;
    ~StringGuard() { qftlab_string_free(value); }
};

struct CircuitGuard {
    qftlab_circuit* value = nullptr;
    ~CircuitGuard() { qftlab_circuit_free(value); }
};

struct StateGuard {
    qftlab_state* value = nullptr;
    ~StateGuard() { qftlab_state_free(value); }
};

// Prints a domain-error diagnostic and maps it to exit code 1.
int domain_error(qftlab_status status) {
    std::fprintf(stderr, "error: %s: %s\n", qftlab_status_name(status),
                 qftlab_last_error());
    return 1;
}

int emit(const char* text) {
    std::fputs(text, stdout);
    const size_t len = std::strlen(text);
    if (len == 0 || text[len - 1] != '\n') std::fputc('\n', stdout);
    return 0;
}

bool parse_pairs(const std::vector<std::string>& specs,
                 std::vector<double>& flat) {
    for (const std::string& spec : specs) {
        const std::size_t colon = spec.find(':');
        if (colon == std::string::npos) return false;
        try {
            flat.push_back(std::stod(spec.substr(0, colon)));
            flat.push_back(std::stod(spec.substr(colon + 1)));
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fault-tolerance toolkit for hybrid qubit-qutrit circuits"};
    app.require_subcommand(1);
    const int digits = float_digits();

    // ---- reproduce ----
    CLI::App* reproduce =
        app.add_subcommand("reproduce", "Emit bundled reference datasets");
    reproduce->require_subcommand(1);
    reproduce->add_subcommand("table1",
                              "Concatenation-level gap table (CSV)");
    CLI::App* fig4 = reproduce->add_subcommand(
        "fig4", "Advantage-inequality sweep for the adder (CSV)");
    int fig4_n = 0;
    std::vector<double> fig4_kappas;
    std::vector<int> fig4_k2s;
    std::vector<std::string> fig4_pairs;
    fig4->add_option("--n", fig4_n, "Adder register width")->required();
    fig4->add_option("--kappa", fig4_kappas,
                     "kappa_g values for the 2-controlled ternary CNOT")
        ->delimiter(',');
    fig4->add_option("--k2", fig4_k2s, "Concatenation levels for the bars")
        ->delimiter(',');
    fig4->add_option("--pairs", fig4_pairs,
                     "cp2:delta pairs for the horizontal lines")
        ->delimiter(',');

    // ---- decompose ----
    CLI::App* decompose =
        app.add_subcommand("decompose", "Gate decomposition passes");
    CLI::App* decompose_toffoli =
        decompose->add_subcommand("toffoli", "Emit a Toffoli decomposition");
    decompose->require_subcommand(1);
    std::string mode;
    bool verify = false;
    decompose_toffoli->add_option("--mode", mode, "Decomposition flavor")
        ->required()
        ->check(CLI::IsMember({"clifford-t", "qutrit"}));
    decompose_toffoli->add_flag("--verify", verify,
                                "Check the unitary against the 8x8 Toffoli");

    // ---- qecc ----
    CLI::App* qecc = app.add_subcommand("qecc", "Stabilizer-code experiments");
    qecc->require_subcommand(1);
    const std::vector<std::string> code_names = {
        "rep3-b",  "rep3-t",  "shor-block-b", "shor-block-t",
        "shor9-b", "shor9-t", "steane7-b",    "steane7-t"};
    const std::vector<std::string> gate_names = {"CNOT", "c1-ternary-cnot",
                                                 "c2-ternary-cnot"};

    CLI::App* leakage = qecc->add_subcommand(
        "leakage", "Bit-flip fault during a temporary |2> excursion");
    double leak_alpha = 0.0;
    double leak_beta = 0.0;
    leakage->add_option("--alpha", leak_alpha, "Amplitude of |0>")->required();
    leakage->add_option("--beta", leak_beta, "Amplitude of |1>")->required();

    qecc->add_subcommand("shor-cnot",
                         "Transversal CNOT between Shor blocks");

    CLI::App* transversal =
        qecc->add_subcommand("transversal", "Transversal gate check");
    std::string ctrl_code;
    std::string tgt_code;
    std::string gate;
    std::string expect;
    bool per_basis_phase = false;
    transversal->add_option("--ctrl", ctrl_code, "Control-block code")
        ->required()
        ->check(CLI::IsMember(code_names));
    transversal->add_option("--tgt", tgt_code, "Target-block code")
        ->required()
        ->check(CLI::IsMember(code_names));
    transversal->add_option("--gate", gate, "Physical per-pair gate")
        ->required()
        ->check(CLI::IsMember(gate_names));
    transversal->add_option("--expect", expect, "Expected logical gate")
        ->required()
        ->check(CLI::IsMember(gate_names));
    transversal->add_flag("--per-basis-phase", per_basis_phase,
                          "Allow an independent phase per logical basis state");

    CLI::App* t_gadget =
        qecc->add_subcommand("t-gadget", "Teleported-T gadget check");
    double tg_alpha = 0.0;
    double tg_beta = 0.0;
    CLI::Option* tg_alpha_opt =
        t_gadget->add_option("--alpha", tg_alpha, "Amplitude of |0>");
    t_gadget->add_option("--beta", tg_beta, "Amplitude of |1>")
        ->needs(tg_alpha_opt);
    tg_alpha_opt->needs(t_gadget->get_option("--beta"));

    // ---- concat ----
    CLI::App* concat =
        app.add_subcommand("concat", "Concatenation-level calculators");
    concat->require_subcommand(1);

    CLI::App* levels = concat->add_subcommand(
        "levels", "Levels needed to reach a target accuracy");
    double cl_c = 0.0, cl_p = 0.0, cl_eps = 0.0;
    levels->add_option("--c", cl_c, "Inverse threshold")->required();
    levels->add_option("--p", cl_p, "Error probability")->required();
    levels->add_option("--epsilon", cl_eps, "Target accuracy")->required();

    CLI::App* gap = concat->add_subcommand(
        "gap", "ceil(k3 - k2) from c*p23 and delta (c2 = c3)");
    double gap_cp23 = 0.0, gap_delta = 0.0;
    gap->add_option("--cp23", gap_cp23, "c times p23")->required();
    gap->add_option("--delta", gap_delta, "p23 / p2")->required();

    CLI::App* delta_cmd = concat->add_subcommand(
        "delta", "Accuracy ratio after equal levels on both species");
    double d_c2 = 0.0, d_p2 = 0.0, d_c3 = 0.0, d_p23 = 0.0;
    int d_k = 0;
    delta_cmd->add_option("--c2", d_c2, "Binary inverse threshold")->required();
    delta_cmd->add_option("--p2", d_p2, "Qubit error probability")->required();
    delta_cmd->add_option("--c3", d_c3, "Ternary inverse threshold")->required();
    delta_cmd->add_option("--p23", d_p23, "Qutrit error probability")->required();
    delta_cmd->add_option("--k", d_k, "Concatenation levels")->required();

    CLI::App* hybrid = concat->add_subcommand(
        "hybrid", "Shared level count for a hybrid circuit");
    double h_c2 = 0.0, h_p2 = 0.0, h_c3 = 0.0, h_p23 = 0.0, h_eps = 0.0;
    hybrid->add_option("--c2", h_c2, "Binary inverse threshold")->required();
    hybrid->add_option("--p2", h_p2, "Qubit error probability")->required();
    hybrid->add_option("--c3", h_c3, "Ternary inverse threshold")->required();
    hybrid->add_option("--p23", h_p23, "Qutrit error probability")->required();
    hybrid->add_option("--epsilon", h_eps, "Target accuracy")->required();

    // ---- estimate ----
    CLI::App* estimate =
        app.add_subcommand("estimate", "Fault-tolerant gate-count estimates");
    estimate->require_subcommand(1);
    CLI::App* adder = estimate->add_subcommand("adder", "In-place n-qubit adder");
    int est_n = 0;
    std::string est_decomp;
    std::string est_table_mode = "reference";
    double est_kappa = 1.0;
    int est_k = 1;
    adder->add_option("--n", est_n, "Register width")->required();
    adder->add_option("--decomp", est_decomp, "Decomposition flavor")
        ->required()
        ->check(CLI::IsMember({"qubit", "qutrit"}));
    adder->add_option("--table-mode", est_table_mode, "Qubit census source")
        ->check(CLI::IsMember({"reference", "compositional"}));
    adder->add_option("--kappa", est_kappa,
                      "kappa_g of the 2-controlled ternary CNOT");
    adder->add_option("--k", est_k, "Concatenation levels");

    // ---- sim ----
    CLI::App* sim = app.add_subcommand("sim", "Statevector simulation");
    sim->require_subcommand(1);
    CLI::App* sim_run = sim->add_subcommand("run", "Run a circuit JSON file");
    std::string circuit_path;
    std::string initial_digits;
    std::string classical_bits;
    sim_run->add_option("circuit", circuit_path, "Circuit JSON file")->required();
    sim_run->add_option("--initial", initial_digits, "Initial basis digits")
        ->required();
    sim_run->add_option("--bits", classical_bits,
                        "Classical bits backing conditioned gates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    qftlab_status status = QFTLAB_OK;

    if (reproduce->parsed()) {
        StringGuard text;
        if (reproduce->get_subcommand("table1")->parsed()) {
            status = qftlab_table1_csv(digits, &text.value);
        } else {
            std::vector<double> flat_pairs;
            if (!parse_pairs(fig4_pairs, flat_pairs)) {
                std::fprintf(stderr, "error: --pairs expects cp2:delta entries\n");
                return kUsageError;
            }
            status = qftlab_fig4_csv(
                fig4_n, fig4_kappas.empty() ? nullptr : fig4_kappas.data(),
                fig4_kappas.size(), fig4_k2s.empty() ? nullptr : fig4_k2s.data(),
                fig4_k2s.size(), flat_pairs.empty() ? nullptr : flat_pairs.data(),
                flat_pairs.size() / 2, digits, &text.value);
        }
        if (status != QFTLAB_OK) return domain_error(status);
        return emit(text.value);
    }

    if (decompose->parsed()) {
        CircuitGuard circuit;
        status = qftlab_toffoli_decomposition(mode.c_str(), &circuit.value);
        if (status != QFTLAB_OK) return domain_error(status);
        StringGuard text;
        status = qftlab_circuit_serialize(circuit.value, &text.value);
        if (status != QFTLAB_OK) return domain_error(status);
        emit(text.value);
        if (verify) {
            int matches = 0;
            status = qftlab_toffoli_equivalence(circuit.value, 1e-9, &matches);
            if (status != QFTLAB_OK) return domain_error(status);
            std::printf("{\"unitary_matches_toffoli\":%s}\n",
                        matches != 0 ? "true" : "false");
            if (matches == 0) {
                std::fprintf(stderr,
                             "error: decomposition does not match the Toffoli\n");
                return 1;
            }
        }
        return 0;
    }

    if (qecc->parsed()) {
        StringGuard text;
        if (leakage->parsed()) {
            status = qftlab_qecc_leakage(leak_alpha, 0.0, leak_beta, 0.0, digits,
                                         &text.value);
        } else if (qecc->get_subcommand("shor-cnot")->parsed()) {
            status = qftlab_qecc_shor_cnot(digits, &text.value);
        } else if (transversal->parsed()) {
            status = qftlab_qecc_transversal(ctrl_code.c_str(), tgt_code.c_str(),
                                             gate.c_str(), expect.c_str(),
                                             per_basis_phase ? 1 : 0, digits,
                                             &text.value);
        } else {
            const bool custom = tg_alpha_opt->count() > 0;
            status = qftlab_qecc_t_gadget(custom ? 1 : 0, tg_alpha, 0.0, tg_beta,
                                          0.0, digits, &text.value);
        }
        if (status != QFTLAB_OK) return domain_error(status);
        return emit(text.value);
    }

    if (concat->parsed()) {
        char buffer[256];
        if (levels->parsed()) {
            int k = 0;
            status = qftlab_concat_levels(cl_c, cl_p, cl_eps, &k);
            if (status != QFTLAB_OK) return domain_error(status);
            std::snprintf(buffer, sizeof(buffer),
                          "{\"c\":%.*g,\"p\":%.*g,\"epsilon\":%.*g,\"k\":%d}",
                          digits, cl_c, digits, cl_p, digits, cl_eps, k);
        } else if (gap->parsed()) {
            int g = 0;
            status = qftlab_concat_gap(gap_cp23, gap_delta, &g);
            if (status != QFTLAB_OK) return domain_error(status);
            std::snprintf(buffer, sizeof(buffer),
                          "{\"cp23\":%.*g,\"delta\":%.*g,\"cp2\":%.*g,\"gap\":%d}",
                          digits, gap_cp23, digits, gap_delta, digits,
                          gap_cp23 / gap_delta, g);
        } else if (delta_cmd->parsed()) {
            double delta_value = 0.0;
            status = qftlab_concat_delta(d_c2, d_p2, d_c3, d_p23, d_k,
                                         &delta_value);
            if (status != QFTLAB_OK) return domain_error(status);
            std::snprintf(buffer, sizeof(buffer), "{\"k\":%d,\"delta\":%.*g}",
                          d_k, digits, delta_value);
        } else {
            int k = 0;
            status = qftlab_concat_hybrid_levels(h_c2, h_p2, h_c3, h_p23, h_eps,
                                                 &k);
            if (status != QFTLAB_OK) return domain_error(status);
            std::snprintf(buffer, sizeof(buffer), "{\"epsilon\":%.*g,\"k\":%d}",
                          digits, h_eps, k);
        }
        std::printf("%s\n", buffer);
        return 0;
    }

    if (estimate->parsed()) {
        StringGuard text;
        status = qftlab_estimate_adder(est_n, est_decomp.c_str(),
                                       est_table_mode.c_str(), est_kappa, est_k,
                                       digits, &text.value);
        if (status != QFTLAB_OK) return domain_error(status);
        return emit(text.value);
    }

    if (sim->parsed()) {
        std::ifstream in(circuit_path);
        if (!in) {
            std::fprintf(stderr, "error: cannot read '%s'\n",
                         circuit_path.c_str());
            return 1;
        }
        std::ostringstream contents;
        contents << in.rdbuf();
        const std::string json_text = contents.str();

        CircuitGuard circuit;
        status = qftlab_circuit_parse(json_text.c_str(), &circuit.value);
        if (status != QFTLAB_OK) return domain_error(status);

        size_t wires = 0;
        status = qftlab_circuit_wire_count(circuit.value, &wires);
        if (status != QFTLAB_OK) return domain_error(status);
        std::vector<int> radices(wires, 2);
        for (size_t w = 0; w < wires; ++w) {
            status = qftlab_circuit_wire_radix(circuit.value, w, &radices[w]);
            if (status != QFTLAB_OK) return domain_error(status);
        }
        StateGuard state;
        status = qftlab_state_prepare(radices.data(), radices.size(),
                                      initial_digits.c_str(), &state.value);
        if (status != QFTLAB_OK) return domain_error(status);
        status = qftlab_state_apply(
            state.value, circuit.value,
            classical_bits.empty() ? nullptr : classical_bits.c_str());
        if (status != QFTLAB_OK) return domain_error(status);
        StringGuard text;
        status = qftlab_state_serialize(state.value, digits, &text.value);
        if (status != QFTLAB_OK) return domain_error(status);
        return emit(text.value);
    }

    return kUsageError;
}
