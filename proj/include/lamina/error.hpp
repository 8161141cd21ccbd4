#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lamina {

// Every failure the library reports is one of these kinds. The CLI maps each
// kind to its own process exit code (see exit_code()).
enum class ErrorKind {
  Domain,
  Overflow,
  MixedDegree,
  NoExactForm,
  Precondition,
  Capacity,
  Accuracy,
  Divergence,
  UnsupportedStructure,
  NotApplicable,
  Dependency,
  InternalInconsistency,
  Config,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

std::string_view to_string(ErrorKind kind) noexcept;

// 0 is success, 1 is reserved for unexpected exceptions, 2 for usage errors
// raised by the argument parser itself.
int exit_code(ErrorKind kind) noexcept;

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace lamina
