#pragma once

#include <stdexcept>
#include <string>

namespace rlw {

enum class ErrorKind {
  InvalidBits,
  OrderViolation,
  Range,
  Capacity,
  Precondition,
  Cycle,
  Parse,
  NotGenerable,
  PaletteCollision,
  PaletteInfinite,
  InconsistentModel,
  MissingSubvalue,
  Schema,
  Usage,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace rlw
