#pragma once

#include <stdexcept>
#include <string>

namespace rlalg {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user-facing input: malformed polynomial text, invalid transfer
// function, unusable CLI arguments. Maps to exit code 2 in the CLI.
struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

struct ParseError : InvalidInputError {
    ParseError(const std::string& msg, std::size_t pos)
        : InvalidInputError(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Internal limits hit or invariants broken mid-computation.
struct ComputationError : Error {
    explicit ComputationError(const std::string& msg) : Error(msg) {}
};

}  // namespace rlalg
