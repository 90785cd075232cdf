#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qsc {

enum class ErrorKind {
  RejectedInput,
  Parse,
  IllFormedMorphism,
  UndefinedGcd,
  Divisibility,
  InvariantViolation,
  Unsupported,
  DegenerateWall,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `position` is set for parse errors
/// and holds the byte offset into the offending input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

[[noreturn]] inline void reject(const std::string& message) {
  throw Error(ErrorKind::RejectedInput, message);
}

}  // namespace qsc
