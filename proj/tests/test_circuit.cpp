#include <doctest.h>

#include <random>

#include "circuit.hpp"
#include "circuit_json.hpp"

using namespace qftlab;
using namespace qftlab::ir;

namespace {

// Independent reference: the 8x8 Toffoli permutation over (b0, b1, b2)
// with b0 the most significant bit.
Eigen::MatrixXcd toffoli_matrix() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
    for (int b = 0; b < 8; ++b) {
        const int b0 = (b >> 2) & 1;
        const int b1 = (b >> 1) & 1;
        const int image = (b0 == 1 && b1 == 1) ? (b ^ 1) : b;
        m(image, b) = 1.0;
    }
    return m;
}

// Rows/columns of the 12-dim [2,3,2] space whose qutrit digit is 0 or 1,
// ordered as binary (q0, q1, q2).
std::vector<Eigen::Index> qubit_subspace_12() {
    std::vector<Eigen::Index> keep;
    for (int d0 = 0; d0 < 2; ++d0) {
        for (int d1 = 0; d1 < 2; ++d1) {
            for (int d2 = 0; d2 < 2; ++d2) {
                keep.push_back(d0 * 6 + d1 * 2 + d2);
            }
        }
    }
    return keep;
}

}  // namespace

TEST_CASE("Clifford+T Toffoli census and unitary") {
    const Circuit c = toffoli_clifford_t();
    const GateCensus census = gate_census(c);
    REQUIRE(census.size() == 3);
    CHECK(census.at("T-family") == 7.0);
    CHECK(census.at("CNOT") == 6.0);
    CHECK(census.at("H") == 2.0);
    CHECK(c.gates.size() == 15);

    const Eigen::MatrixXcd u = extract_unitary(c);
    CHECK(sim::equal_up_to_global_phase(u, toffoli_matrix(), 1e-9));

    const int radices[] = {2, 2, 2};
    const sim::StateVector out = run(c, sim::init_state(radices, "110"));
    CHECK(std::abs(out.amps[7] - sim::cplx{1.0, 0.0}) < 1e-9);
}

TEST_CASE("qutrit Toffoli structure") {
    const Circuit c = toffoli_qutrit();
    REQUIRE(c.gates.size() == 3);
    CHECK(depth(c) == 3);
    CHECK(c.gates[0].kind == GateBase::X1);
    REQUIRE(c.gates[0].controls.size() == 1);
    CHECK(c.gates[0].controls[0].wire == 0);
    CHECK(c.gates[0].controls[0].level == 1);
    CHECK(c.gates[0].target == 1);
    CHECK(c.gates[1].kind == GateBase::X);
    CHECK(c.gates[1].controls[0].wire == 1);
    CHECK(c.gates[1].controls[0].level == 2);
    CHECK(c.gates[1].target == 2);
    CHECK(c.gates[2].kind == GateBase::X2);

    const GateCensus census = gate_census(c);
    CHECK(census.at("c1-ternary-cnot") == 2.0);
    CHECK(census.at("c2-ternary-cnot") == 1.0);
}

TEST_CASE("qutrit Toffoli reproduces the truth table with no residual |2>") {
    const Circuit c = toffoli_qutrit();
    const int radices[] = {2, 3, 2};
    for (int b = 0; b < 8; ++b) {
        const int b0 = (b >> 2) & 1;
        const int b1 = (b >> 1) & 1;
        const int b2 = b & 1;
        std::string digits;
        digits += static_cast<char>('0' + b0);
        digits += static_cast<char>('0' + b1);
        digits += static_cast<char>('0' + b2);
        const sim::StateVector out = run(c, sim::init_state(radices, digits));
        const int expect_b2 = (b0 == 1 && b1 == 1) ? 1 - b2 : b2;
        const std::size_t want = static_cast<std::size_t>(b0 * 6 + b1 * 2 + expect_b2);
        CHECK(std::abs(out.amps[want] - sim::cplx{1.0, 0.0}) < 1e-9);
        // the intermediate qutrit must come back to the {|0>,|1>} subspace
        for (std::size_t idx = 0; idx < out.dim(); ++idx) {
            if (out.digit(idx, 1) == 2) CHECK(std::abs(out.amps[idx]) < 1e-12);
        }
    }
}

TEST_CASE("both decompositions agree on the qubit subspace") {
    const Eigen::MatrixXcd u_ct = extract_unitary(toffoli_clifford_t());
    const Eigen::MatrixXcd u_qt = extract_unitary(toffoli_qutrit());
    const auto keep = qubit_subspace_12();
    Eigen::MatrixXcd sub(8, 8);
    for (int r = 0; r < 8; ++r) {
        for (int cix = 0; cix < 8; ++cix) {
            sub(r, cix) = u_qt(keep[static_cast<std::size_t>(r)],
                               keep[static_cast<std::size_t>(cix)]);
        }
    }
    CHECK(sim::equal_up_to_global_phase(sub, u_ct, 1e-9));
    CHECK(sim::equal_up_to_global_phase(sub, toffoli_matrix(), 1e-9));
}

TEST_CASE("extract_unitary basics") {
    const int qq[] = {2, 2};
    const Circuit empty = make_circuit(qq);
    CHECK((extract_unitary(empty) - Eigen::MatrixXcd::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    const int t[] = {3};
    Circuit x1 = make_circuit(t);
    append_gate(x1, GateBase::X1, {}, 0);
    Eigen::MatrixXcd want(3, 3);
    want << 0, 0, 1, 1, 0, 0, 0, 1, 0;
    CHECK((extract_unitary(x1) - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("extract_unitary composes in gate order") {
    std::mt19937 rng(4242);
    const int radices[] = {2, 3};
    const GateBase qubit_gates[] = {GateBase::H, GateBase::T, GateBase::X};
    const GateBase qutrit_gates[] = {GateBase::X1, GateBase::Z1, GateBase::X01};
    for (int trial = 0; trial < 10; ++trial) {
        Circuit c1 = make_circuit(radices);
        Circuit c2 = make_circuit(radices);
        Circuit chained = make_circuit(radices);
        std::uniform_int_distribution<int> pick(0, 2);
        for (int g = 0; g < 4; ++g) {
            const GateBase a = qubit_gates[pick(rng)];
            const GateBase b = qutrit_gates[pick(rng)];
            append_gate(c1, a, {}, 0);
            append_gate(c1, b, {}, 1);
            append_gate(c2, b, {}, 1);
            append_gate(c2, a, {}, 0);
        }
        for (const GateInstance& g : c1.gates) chained.gates.push_back(g);
        for (const GateInstance& g : c2.gates) chained.gates.push_back(g);
        const Eigen::MatrixXcd lhs = extract_unitary(chained);
        const Eigen::MatrixXcd rhs = extract_unitary(c2) * extract_unitary(c1);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("extract_unitary enforces the dimension cap") {
    std::vector<int> radices(21, 2);
    const Circuit big = make_circuit(radices);
    try {
        extract_unitary(big);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::dimension_limit);
    }
}

TEST_CASE("greedy depth shares layers across disjoint wires") {
    const int radices[] = {2, 2, 2, 2};
    Circuit c = make_circuit(radices);
    append_gate(c, GateBase::H, {}, 0);
    append_gate(c, GateBase::H, {}, 1);  // same layer as the first H
    CHECK(depth(c) == 1);
    append_gate(c, GateBase::X, {{0, 1}}, 1);
    CHECK(depth(c) == 2);
    append_gate(c, GateBase::H, {}, 2);  // layer 1 again
    CHECK(depth(c) == 2);
    CHECK(depth(make_circuit(radices)) == 0);
}

TEST_CASE("census of an empty circuit is empty") {
    const int radices[] = {2, 3};
    CHECK(gate_census(make_circuit(radices)).empty());
}

TEST_CASE("c1 count is twice the c2 count for stacked qutrit Toffolis") {
    std::mt19937 rng(11);
    const int radices[] = {2, 3, 2, 3, 2};
    for (int trial = 0; trial < 8; ++trial) {
        Circuit c = make_circuit(radices);
        std::uniform_int_distribution<int> reps(1, 6);
        const int n = reps(rng);
        for (int i = 0; i < n; ++i) {
            decompose_toffoli_qutrit(c, 0, 1, 2);
            decompose_toffoli_qutrit(c, 2, 3, 4);
        }
        const GateCensus census = gate_census(c);
        CHECK(census.at("c1-ternary-cnot") == 2.0 * census.at("c2-ternary-cnot"));
    }
}

TEST_CASE("decomposition passes validate wire radices") {
    const int radices[] = {2, 2, 2};
    Circuit c = make_circuit(radices);
    try {
        decompose_toffoli_qutrit(c, 0, 1, 2);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::radix_mismatch);
    }
    const int mixed[] = {2, 3, 2};
    Circuit m = make_circuit(mixed);
    try {
        decompose_toffoli_clifford_t(m, 0, 1, 2);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::radix_mismatch);
    }
}

TEST_CASE("JSON round trip preserves structure and census") {
    Circuit c = toffoli_qutrit();
    append_gate(c, GateBase::X, {}, 2, 0);  // classically conditioned
    const std::string text = serialize(c);
    const Circuit back = parse(text);
    CHECK(back == c);
    CHECK(gate_census(back) == gate_census(c));
    CHECK(serialize(back) == text);

    const Circuit ct = toffoli_clifford_t();
    CHECK(parse(serialize(ct)) == ct);
}

TEST_CASE("parse rejects schema violations") {
    try {
        parse(R"({"wires":[{"id":0,"radix":4}],"gates":[]})");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::validation_error);
    }
    try {
        parse(R"({"wires":[{"id":0,"radix":2},{"id":1,"radix":2}],)"
              R"("gates":[{"kind":"X","controls":[{"wire":0,"level":2}],)"
              R"("target":1,"classical":null}]})");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::validation_error);
    }
    try {
        parse(R"({"wires":[{"id":0,"radix":2},{"id":2,"radix":2}],"gates":[]})");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::validation_error);
    }
    try {
        parse(R"({"wires":[{"id":0,"radix":2}],"gates":[{"kind":"Q",)"
              R"("controls":[],"target":0,"classical":null}]})");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::validation_error);
    }
}

TEST_CASE("parse reports the position of malformed text") {
    try {
        parse("{\"wires\":[\n{\"id\":0,,]}");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::parse_error);
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("classically conditioned gates follow the bit environment") {
    const int radices[] = {2};
    Circuit c = make_circuit(radices);
    append_gate(c, GateBase::X, {}, 0, 1);  // conditioned on bit 1
    const sim::StateVector zero = sim::init_state(radices, "0");

    const sim::StateVector skipped = run(c, zero);
    CHECK(std::abs(skipped.amps[0] - sim::cplx{1.0, 0.0}) < 1e-12);

    const int bits[] = {0, 1};
    const sim::StateVector applied = run(c, zero, bits);
    CHECK(std::abs(applied.amps[1] - sim::cplx{1.0, 0.0}) < 1e-12);
}
