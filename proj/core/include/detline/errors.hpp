#pragma once

#include <stdexcept>
#include <string>

namespace detline {

/// Base of every error raised by the library. `kind()` is the stable
/// name printed by the CLI and recorded in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DETLINE_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

DETLINE_DEFINE_ERROR(PoleAtOne);
DETLINE_DEFINE_ERROR(DomainError);
DETLINE_DEFINE_ERROR(EvaluationError);
DETLINE_DEFINE_ERROR(DegenerateSpectrum);
DETLINE_DEFINE_ERROR(WindowOverflow);
DETLINE_DEFINE_ERROR(NotDetClass);
DETLINE_DEFINE_ERROR(NotCommensurable);
DETLINE_DEFINE_ERROR(NotInvertible);
DETLINE_DEFINE_ERROR(DivisionByZeroPoint);
DETLINE_DEFINE_ERROR(IoError);

#undef DETLINE_DEFINE_ERROR

}  // namespace detline
