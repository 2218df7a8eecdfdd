#ifndef RINV_ERRORS_HPP
#define RINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rinv {

// Every failure the toolkit can signal. Codes are stable; the CLI maps
// user-input problems to exit 2 and mathematical refusals to exit 3.
enum class Errc {
  NotDivisible,
  DomainMismatch,
  UndefinedGcd,
  DivisionByZero,
  InvalidAction,
  EmptySection,
  NotACrossSection,
  UndefinedOnGroup,
  NotInvariantOrNotRational,
  JetOrderExceeded,
  DegenerateAction,
  VerticalCurve,
  UnsupportedDegree,
  ExceptionalCurve,
  NotACurve,
  SpecError,
  SyntaxError,
  Usage,
};

const char* errc_name(Errc c);

// True for conditions that are mathematical refusals rather than malformed
// input (CLI exit code 3).
bool errc_is_mathematical(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace rinv

#endif
