#ifndef CONESPEC_ERROR_HPP
#define CONESPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace conespec {

// Rejected user input. `code` is a stable machine-readable tag such as
// "E_WEIGHTS_NOT_COPRIME"; `line` is 1-based, or 0 when not tied to a line.
class InputError : public std::runtime_error {
public:
  InputError(std::string code, const std::string& message, int line = 0)
      : std::runtime_error(format(code, message, line)), code_(std::move(code)), message_(message), line_(line) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  int line() const noexcept { return line_; }

private:
  static std::string format(const std::string& code, const std::string& message, int line) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    out += message + " [" + code + "]";
    return out;
  }

  std::string code_;
  std::string message_;
  int line_;
};

// Broken internal contract (e.g. a Milnor number that should be integral is not).
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace conespec

#endif  // CONESPEC_ERROR_HPP
