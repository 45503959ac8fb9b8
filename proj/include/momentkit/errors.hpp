#pragma once

#include <stdexcept>
#include <string>

namespace momentkit {

enum class ErrorKind {
  dimension_mismatch,  // operands live in different variable counts
  degree_overflow,     // operation needs moments beyond the stored truncation
  invalid_input,       // malformed or inconsistent user data
  non_psd,             // input fails a positivity precondition
  numeric,             // numerically ambiguous or unstable situation
  overflow_guard,      // combinatorial size guard tripped
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_degree_overflow(int required, int available) {
  throw Error(ErrorKind::degree_overflow,
              "degree overflow: needs degree " + std::to_string(required) +
                  ", available " + std::to_string(available));
}

}  // namespace momentkit
