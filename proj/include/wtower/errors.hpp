#ifndef WTOWER_ERRORS_HPP
#define WTOWER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wtower {

// Domain error with a stable machine-readable code ("RepeatingTree",
// "LabelOutOfRange", ...). The CLI prints the code and exits 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Parse error with position information. The CLI exits 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error(what), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace wtower

#endif
