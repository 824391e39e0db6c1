#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

/// Malformed input: bad group spec, bad weight, out-of-level data.
class invalid_input : public std::invalid_argument {
public:
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// Request outside the supported theory: non-admissible level for a
/// quotient group, fixed-point fusion, unknown fundamental level.
class unsupported_request : public std::runtime_error {
public:
  explicit unsupported_request(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap (basis size, Weyl group size, dimension)
/// would be exceeded.
class resource_limit : public std::runtime_error {
public:
  explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency failure; indicates a bug, not a user error.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace verlinde
