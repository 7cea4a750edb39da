#ifndef WITTFORGE_ERRORS_HPP
#define WITTFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace wittforge {

// Domain errors carry a stable machine-readable code (e.g. "MixedFields",
// "Degenerate") next to the human-readable message; the CLI surfaces the
// code in its structured JSON error output.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Internal invariant violations: reaching one of these is a bug, not a
// caller mistake.
class LogicError : public std::logic_error {
 public:
  explicit LogicError(const std::string& message) : std::logic_error(message) {}
};

[[noreturn]] inline void fail(const char* code, const std::string& message) {
  throw DomainError(code, message);
}

}  // namespace wittforge

#endif
