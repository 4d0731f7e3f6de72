#pragma once

#include <stdexcept>
#include <string>

namespace isoharmonic {

enum class ErrorKind {
  argument,
  pole,
  domain,
  degenerate,
  conditioning,
  convergence,
  region,
  contour,
  regularity,
  conservation,
};

const char* to_string(ErrorKind k);

class NumericalError : public std::runtime_error {
 public:
  NumericalError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw NumericalError(kind, what);
}

}  // namespace isoharmonic
