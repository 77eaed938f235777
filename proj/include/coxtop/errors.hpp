#ifndef COXTOP_ERRORS_HPP
#define COXTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxtop {

/// Bad input: malformed files, violated preconditions, unsupported parameters.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parse failure that remembers the offending line (1-based).
class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// A computed object contradicts an identity that must hold for valid input
/// (non-unimodular decomposition witness, torsion in D^T, ...). Signals a
/// bug or a counterexample rather than bad input.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coxtop

#endif
