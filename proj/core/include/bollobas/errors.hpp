#pragma once

#include <stdexcept>
#include <string>

namespace bollobas {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two parts of one tuple share an element. Parts are reported 1-based.
class OverlapError : public Error {
public:
  OverlapError(int p, int q, int element);

  int first_part() const noexcept { return p_; }
  int second_part() const noexcept { return q_; }
  int element() const noexcept { return element_; }

private:
  int p_;
  int q_;
  int element_;
};

#define BOLLOBAS_DECLARE_ERROR(Name)                                           \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

BOLLOBAS_DECLARE_ERROR(RangeError);
BOLLOBAS_DECLARE_ERROR(ArityError);
BOLLOBAS_DECLARE_ERROR(MismatchError);
BOLLOBAS_DECLARE_ERROR(DomainError);
BOLLOBAS_DECLARE_ERROR(SizeError);
BOLLOBAS_DECLARE_ERROR(IndexError);
BOLLOBAS_DECLARE_ERROR(DimensionError);
BOLLOBAS_DECLARE_ERROR(GradeError);
BOLLOBAS_DECLARE_ERROR(RetriesExhausted);
BOLLOBAS_DECLARE_ERROR(TypeError);
BOLLOBAS_DECLARE_ERROR(ParseError);

#undef BOLLOBAS_DECLARE_ERROR

} // namespace bollobas
