#pragma once

#include <stdexcept>
#include <string>

namespace seshadri {

// Every failure the library can signal, so callers (CLI, bindings) can map
// classes of failure to exit codes without string-matching.
enum class ErrorCode {
    invalid_spec,
    context_mismatch,
    division_by_zero,
    parse,
    degenerate_input,
    undefined_multiplicity,
    no_incidence,
    missing_geometry,
    out_of_range,
    unknown_catalog,
    genericity,
    invalid_certificate,
    unsupported_factor,
    internal_consistency,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace seshadri
