#pragma once

#include <stdexcept>
#include <string>

namespace arsob {

// Error taxonomy. Every failure mode named by the module contracts maps to a
// Kind so callers (and the CLI) can react without string matching.
enum class ErrorKind {
  // quiver_core
  NotBijective,
  AxiomViolation,
  ValuationMismatch,
  DoubleArrow,
  OrbitNotClosed,
  ResultNotTranslationQuiver,
  SizeLimitExceeded,
  UnknownComponent,
  // path_algebra
  SyntaxError,
  UnknownArrow,
  UnknownVertex,
  NonComposablePath,
  MixedEndpointsInRelation,
  RelationTooShort,
  NotAdmissibleWithinCap,
  FieldMismatch,
  BasisMismatch,
  // rep_theory
  AlgebraMismatch,
  GorensteinUnverified,
  BudgetExceeded,
  // ar_catalogue / mesh_and_reduction
  OutOfCatalogue,
  ReductionMismatch,
  CatalogueLoadError,
  // geometry_bridge
  NotVanishingAtOrigin,
  ZeroLinearPart,
  NotMutuallyPrime,
  EmptyConfiguration,
  // engine / cli
  EvenDimension,
  InvalidInput,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

const char* error_kind_name(ErrorKind kind);

}  // namespace arsob
