// Error types shared across the library.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidwrench {

// Operands live in braid groups with different strand counts.
struct StrandMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Constructor or family parameters out of range.
struct BadParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Handle reduction hit its step cap. Termination is guaranteed
// mathematically; the cap is a safety valve for fuzzing.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Artin-action oracle grew past its image-length cap.
struct OracleBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation outside the domain of a piecewise-linear function.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Braid-word grammar violation; `position` is a byte offset into the input.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

}  // namespace braidwrench
