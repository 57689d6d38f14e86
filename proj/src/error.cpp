#include "error.hpp"

namespace qftlab {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::ok: return "Ok";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::invalid_basis_state: return "InvalidBasisState";
        case Errc::radix_mismatch: return "RadixMismatch";
        case Errc::dimension_limit: return "DimensionLimit";
        case Errc::shape_mismatch: return "ShapeError";
        case Errc::parse_error: return "ParseError";
        case Errc::validation_error: return "ValidationError";
        case Errc::above_threshold: return "AboveThreshold";
        case Errc::qutrit_above_threshold: return "QutritAboveThreshold";
        case Errc::oracle_overflow: return "OracleOverflow";
        case Errc::invalid_width: return "InvalidWidth";
        case Errc::unknown_gate_type: return "UnknownGateType";
        case Errc::code_construction: return "CodeConstructionError";
        case Errc::factorization: return "FactorizationError";
        case Errc::invalid_state: return "InvalidState";
        case Errc::unknown_code: return "UnknownCode";
        case Errc::internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace qftlab
