// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hpcalc {

enum class ErrorKind {
  Configuration,
  Domain,
  Accuracy,
  Truncation,
  Rejection,
  Singularity,
  Io,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double measured = 0.0)
      : std::runtime_error(what), kind_(kind), measured_(measured) {}

  ErrorKind kind() const { return kind_; }
  // Achieved residual or defect for accuracy/truncation failures.
  double measured() const { return measured_; }

 private:
  ErrorKind kind_;
  double measured_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what, double measured = 0.0) {
  throw Error(kind, what, measured);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace hpcalc
