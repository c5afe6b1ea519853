#pragma once

#include <stdexcept>
#include <string>

namespace riemax {

/// Invalid point representations, malformed clouds, parameters outside the
/// range an operation is defined on.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Floating-point trouble: a clamp slack was exceeded, an eigensolver did not
/// converge, or a root search ran out of iterations.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// A solver or CLI configuration that violates a documented precondition.
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace riemax
