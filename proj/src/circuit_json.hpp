#pragma once

#include <string>

#include "circuit.hpp"

namespace qftlab::ir {

// Compact JSON form:
// {"wires":[{"id":0,"radix":2},...],
//  "gates":[{"kind":"X1","controls":[{"wire":0,"level":1}],
//            "target":1,"classical":null},...]}
std::string serialize(const Circuit& circuit);

// Throws ParseError (with line/column) on malformed text and
// ValidationError on schema or invariant violations.
Circuit parse(const std::string& text);

}  // namespace qftlab::ir
