#ifndef GORHOM_ERRORS_HPP
#define GORHOM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gorhom {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GORHOM_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

GORHOM_DEFINE_ERROR(DimensionMismatch);
GORHOM_DEFINE_ERROR(FieldMismatch);
GORHOM_DEFINE_ERROR(AlgebraMismatch);
GORHOM_DEFINE_ERROR(NotAdmissible);
GORHOM_DEFINE_ERROR(InhomogeneousRelation);
GORHOM_DEFINE_ERROR(InvalidPresentation);
GORHOM_DEFINE_ERROR(InadmissibleSeries);
GORHOM_DEFINE_ERROR(UnknownName);
GORHOM_DEFINE_ERROR(IndexError);
GORHOM_DEFINE_ERROR(TooLarge);
GORHOM_DEFINE_ERROR(PreconditionUnmet);
GORHOM_DEFINE_ERROR(InternalInconsistency);
GORHOM_DEFINE_ERROR(UsageError);

/// A computation would exceed the configured size budget (see Settings).
GORHOM_DEFINE_ERROR(ResourceLimit);

#undef GORHOM_DEFINE_ERROR

/// Syntax or schema error with a location: a character offset for module
/// expressions, a JSON pointer-like path for algebra files.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace gorhom

#endif  // GORHOM_ERRORS_HPP
