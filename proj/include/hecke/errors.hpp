#pragma once

#include <stdexcept>

namespace hecke {

// Malformed text input (grammar violations in the CLI / parsers).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input outside the mathematical domain of an operation
// (context mismatch, non-hyperbolic matrix, not a Gamma-form, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A safety cap fired. Signals either invalid input that slipped past
// validation or an internal bug; never expected on valid input.
struct DiagnosticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hecke
