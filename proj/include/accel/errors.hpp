#pragma once

#include <stdexcept>
#include <string>

namespace accel {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: config files, manifests, serialized programs. CLI exit 2.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A layer (or whole model) cannot be scheduled under the given
// architecture and strategy. CLI exit 1.
struct InfeasibleError : Error {
  explicit InfeasibleError(const std::string& msg) : Error(msg) {}
};

// A result-level assertion failed (e.g. the throughput ordering the
// benchmark suite enforces). CLI exit 3.
struct CheckError : Error {
  explicit CheckError(const std::string& msg) : Error(msg) {}
};

// Raw accumulator overflow during execution. Indicates a scheduling bug,
// not bad data, so it is not recoverable.
struct AccumOverflow : Error {
  explicit AccumOverflow(const std::string& msg) : Error(msg) {}
};

// Address range violation while executing a program.
struct AddressFault : Error {
  explicit AddressFault(const std::string& msg) : Error(msg) {}
};

}  // namespace accel
