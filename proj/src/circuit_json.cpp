#include "circuit_json.hpp"

#include <json.hpp>

namespace qftlab::ir {

namespace {

using nlohmann::json;

// nlohmann reports a byte offset; turn it into line/column for diagnostics.
std::pair<std::size_t, std::size_t> line_col(const std::string& text,
                                             std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

int require_int(const json& j, const char* key, const char* where) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        fail(Errc::validation_error,
             std::string(where) + " requires integer field '" + key + "'");
    }
    return j[key].get<int>();
}

}  // namespace

std::string serialize(const Circuit& circuit) {
    json root;
    root["wires"] = json::array();
    for (const WireSpec& w : circuit.wires) {
        root["wires"].push_back(json{{"id", w.id}, {"radix", w.radix}});
    }
    root["gates"] = json::array();
    for (const GateInstance& g : circuit.gates) {
        json gate;
        gate["kind"] = sim::gate_name(g.kind);
        gate["controls"] = json::array();
        for (const ControlSpec& c : g.controls) {
            gate["controls"].push_back(json{{"wire", c.wire}, {"level", c.level}});
        }
        gate["target"] = g.target;
        gate["classical"] =
            g.classical_bit ? json{{"bit", *g.classical_bit}} : json(nullptr);
        root["gates"].push_back(std::move(gate));
    }
    return root.dump();
}

Circuit parse(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        fail(Errc::parse_error, "malformed JSON at line " + std::to_string(line) +
                                    ", column " + std::to_string(col) + ": " +
                                    e.what());
    }
    if (!root.is_object() || !root.contains("wires") || !root["wires"].is_array() ||
        !root.contains("gates") || !root["gates"].is_array()) {
        fail(Errc::validation_error,
             "circuit JSON must be an object with 'wires' and 'gates' arrays");
    }
    Circuit circuit;
    for (const json& jw : root["wires"]) {
        WireSpec w;
        w.id = require_int(jw, "id", "wire");
        w.radix = require_int(jw, "radix", "wire");
        circuit.wires.push_back(w);
    }
    for (const json& jg : root["gates"]) {
        GateInstance g;
        if (!jg.contains("kind") || !jg["kind"].is_string()) {
            fail(Errc::validation_error, "gate requires string field 'kind'");
        }
        const std::string kind = jg["kind"].get<std::string>();
        const auto base = sim::gate_from_name(kind);
        if (!base) {
            fail(Errc::validation_error, "unknown gate kind '" + kind + "'");
        }
        g.kind = *base;
        if (jg.contains("controls")) {
            if (!jg["controls"].is_array()) {
                fail(Errc::validation_error, "'controls' must be an array");
            }
            for (const json& jc : jg["controls"]) {
                ControlSpec c;
                c.wire = require_int(jc, "wire", "control");
                c.level = require_int(jc, "level", "control");
                g.controls.push_back(c);
            }
        }
        g.target = require_int(jg, "target", "gate");
        if (jg.contains("classical") && !jg["classical"].is_null()) {
            if (!jg["classical"].is_object()) {
                fail(Errc::validation_error,
                     "'classical' must be null or {\"bit\": n}");
            }
            g.classical_bit = require_int(jg["classical"], "bit", "classical");
        }
        circuit.gates.push_back(std::move(g));
    }
    validate(circuit);
    return circuit;
}

}  // namespace qftlab::ir
