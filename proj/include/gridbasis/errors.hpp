#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridbasis {

// Malformed textual input (a permutation or a class/grid spec). Carries the
// offending token and its byte offset within the parsed string.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::string token, std::size_t position)
      : std::runtime_error(message + " (token \"" + token + "\" at position " +
                           std::to_string(position) + ")"),
        token_(std::move(token)),
        position_(position) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

// A run exceeded a configured cap (enumeration length or memory budget).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation's contract was violated (e.g. a membership decider that turns
// out not to be downward closed, or an invalid option combination).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gridbasis
