#pragma once

#include <stdexcept>
#include <string>

namespace revcirc {

/// Thrown on contract violations: malformed gates, bad wiring, size guards,
/// parse failures. The message is meant to be shown to the user as-is.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace revcirc
