#pragma once

#include <stdexcept>
#include <string>

namespace hopfgen {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HOPFGEN_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

HOPFGEN_DEFINE_ERROR(DivisionByZero);
HOPFGEN_DEFINE_ERROR(RangeError);
HOPFGEN_DEFINE_ERROR(FieldMismatch);
HOPFGEN_DEFINE_ERROR(InvalidGroup);
HOPFGEN_DEFINE_ERROR(InvalidAction);
HOPFGEN_DEFINE_ERROR(DatumError);
HOPFGEN_DEFINE_ERROR(UnsupportedFamily);
HOPFGEN_DEFINE_ERROR(NotInvertible);
HOPFGEN_DEFINE_ERROR(InvalidCocycle);
HOPFGEN_DEFINE_ERROR(NotPointedOrder);
HOPFGEN_DEFINE_ERROR(UnknownLabel);
HOPFGEN_DEFINE_ERROR(NotHopfMap);
HOPFGEN_DEFINE_ERROR(CocycleMismatch);
HOPFGEN_DEFINE_ERROR(NotDegreeZero);
HOPFGEN_DEFINE_ERROR(OutOfLocalization);
HOPFGEN_DEFINE_ERROR(WitnessFailure);
HOPFGEN_DEFINE_ERROR(SingularJacobian);
HOPFGEN_DEFINE_ERROR(IndexMismatch);
HOPFGEN_DEFINE_ERROR(UnsupportedKind);
HOPFGEN_DEFINE_ERROR(TrivialActionViolated);
HOPFGEN_DEFINE_ERROR(WordTooLong);
HOPFGEN_DEFINE_ERROR(FormatError);

#undef HOPFGEN_DEFINE_ERROR

/// Syntax error in an expression; `position` is the 0-based offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("ParseError at " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

}  // namespace hopfgen
