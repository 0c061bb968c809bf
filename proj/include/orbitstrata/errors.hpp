#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace orbitstrata {

/// Every domain failure raised by the library derives from this type.
/// `kind()` is the stable machine-readable name surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }
  std::string detail() const { return what(); }
  virtual std::optional<std::size_t> location() const { return std::nullopt; }

 private:
  std::string kind_;
};

#define ORBITSTRATA_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& detail) : Error(#Name, detail) {} \
  }

ORBITSTRATA_DEFINE_ERROR(SingularMatrix);
ORBITSTRATA_DEFINE_ERROR(NotUnimodular);
ORBITSTRATA_DEFINE_ERROR(InvalidElement);
ORBITSTRATA_DEFINE_ERROR(NotRepresentable);
ORBITSTRATA_DEFINE_ERROR(InvalidDims);
ORBITSTRATA_DEFINE_ERROR(InvalidLattice);
ORBITSTRATA_DEFINE_ERROR(LatticeMismatch);
ORBITSTRATA_DEFINE_ERROR(SolveFailed);
ORBITSTRATA_DEFINE_ERROR(InvalidParams);
ORBITSTRATA_DEFINE_ERROR(NotInClosure);
ORBITSTRATA_DEFINE_ERROR(IndexError);
ORBITSTRATA_DEFINE_ERROR(DegreeInfeasible);
ORBITSTRATA_DEFINE_ERROR(RadicalViolation);
ORBITSTRATA_DEFINE_ERROR(ParseError);

#undef ORBITSTRATA_DEFINE_ERROR

/// Malformed polynomial text; carries the byte offset of the problem.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& detail, std::size_t offset)
      : Error("SyntaxError", detail + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  std::optional<std::size_t> location() const override { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace orbitstrata
