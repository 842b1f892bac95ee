#pragma once

#include <stdexcept>
#include <string>

namespace osl {

// Malformed structure: out-of-range state, asymmetric matrix, bad dimensions.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// A declared precondition does not hold (e.g. restricting to a non-flat).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap was exceeded; never reported as a silent negative.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text that does not conform to one of the published grammars.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation cannot proceed (e.g. an atom without an assigned flat).
struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace osl
