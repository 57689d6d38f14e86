#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qftlab {

// Error categories shared by the C++ core and the C API surface.
enum class Errc {
    ok = 0,
    invalid_argument,
    invalid_basis_state,
    radix_mismatch,
    dimension_limit,
    shape_mismatch,
    parse_error,
    validation_error,
    above_threshold,
    qutrit_above_threshold,
    oracle_overflow,
    invalid_width,
    unknown_gate_type,
    code_construction,
    factorization,
    invalid_state,
    unknown_code,
    internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace qftlab
