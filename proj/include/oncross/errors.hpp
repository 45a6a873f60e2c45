#pragma once

#include <stdexcept>
#include <string>

namespace oncross {

// Violation of a mathematical precondition (size mismatch, non-monotone map
// where a monotone one is required, vertex outside the skeleton, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Violation of a configured guard (n too large for an exhaustive operation,
// wall-clock budget exceeded). Guards are configuration, not constants.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input (JSON files, CLI partition strings).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oncross
