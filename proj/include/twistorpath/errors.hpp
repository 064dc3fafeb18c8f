#pragma once

#include <stdexcept>
#include <string>

namespace twistorpath {

/// Base for all domain errors.  `code()` is a stable machine-readable tag
/// used by the CLI to build typed error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define TWISTORPATH_DEFINE_ERROR(Name, tag)                    \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& message = #Name)          \
        : Error(tag, message) {}                               \
  }

TWISTORPATH_DEFINE_ERROR(DegenerateLattice, "degenerate_lattice");
TWISTORPATH_DEFINE_ERROR(IndefiniteLattice, "indefinite_lattice");
TWISTORPATH_DEFINE_ERROR(ModelMismatch, "model_mismatch");
TWISTORPATH_DEFINE_ERROR(ZeroVector, "zero_vector");
TWISTORPATH_DEFINE_ERROR(NotPrimitive, "not_primitive");
TWISTORPATH_DEFINE_ERROR(WrongSquare, "wrong_square");
TWISTORPATH_DEFINE_ERROR(SquareMismatch, "square_mismatch");
TWISTORPATH_DEFINE_ERROR(NotIsometry, "not_isometry");
TWISTORPATH_DEFINE_ERROR(WrongSignature, "wrong_signature");
TWISTORPATH_DEFINE_ERROR(NotPositiveDefinite, "not_positive_definite");
TWISTORPATH_DEFINE_ERROR(DependentBasis, "dependent_basis");
TWISTORPATH_DEFINE_ERROR(NotContained, "not_contained");
TWISTORPATH_DEFINE_ERROR(NotRational, "not_rational");
TWISTORPATH_DEFINE_ERROR(InvariantViolation, "invariant_violation");
TWISTORPATH_DEFINE_ERROR(EndpointsIntersect, "endpoints_intersect");
TWISTORPATH_DEFINE_ERROR(IntersectionNonzero, "intersection_nonzero");
TWISTORPATH_DEFINE_ERROR(RetriesExhausted, "retries_exhausted");
TWISTORPATH_DEFINE_ERROR(MoveNotApplicable, "move_not_applicable");
TWISTORPATH_DEFINE_ERROR(NotBreve5, "not_breve5");
TWISTORPATH_DEFINE_ERROR(InvalidPath, "invalid_path");
TWISTORPATH_DEFINE_ERROR(OutOfRange, "out_of_range");
TWISTORPATH_DEFINE_ERROR(UnknownCommand, "unknown_command");
TWISTORPATH_DEFINE_ERROR(SchemaViolation, "schema_violation");

#undef TWISTORPATH_DEFINE_ERROR

}  // namespace twistorpath
