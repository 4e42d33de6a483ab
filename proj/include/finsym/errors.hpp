#ifndef FINSYM_ERRORS_HPP
#define FINSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace finsym {

enum class Errc {
  BadToken,
  InvalidInverse,
  IndexOutOfRange,
  BadMultiIndex,
  LengthMismatch,
  EntryOutOfRange,
  DimMismatch,
  NotAPermutation,
  StageIndexError,
  NegativeDim,
  ForbiddenSymbol,
  NotMonotonic,
  NotQuasiMonotonic,
  ZeroExcluded,
  ContainsT0,
  NotZeroFixing,
  UnknownFamily,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Word text that cannot be tokenized at all.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a precondition or dimension constraint.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace finsym

#endif  // FINSYM_ERRORS_HPP
