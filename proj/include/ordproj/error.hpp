#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordproj {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  NotPSD,
  ShapeMismatch,
  ShapeError,
  ModelMismatch,
  NotSelfAdjoint,
  NotPositive,
  ZeroElement,
  NotProjection,
  NotPartialSymmetry,
  NotPartialIsometry,
  NotPartialUnitary,
  NotOrthogonal,
  NotUnitary,
  NotIsometry,
  CertificationFailed,
  RankOutOfRange,
  NotEquivalent,
  NotSubEquivalent,
  NotUnitarilyEquivalent,
  NotDominated,
  SupportMismatch,
  PreconditionViolated,
  AmbientMismatch,
  NotInfinite,
  ZeroProjection,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `residual` carries the certification
/// defect when the failure came from a numerical test, otherwise 0.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double residual = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        residual_(residual) {}

  ErrorKind kind() const noexcept { return kind_; }
  double residual() const noexcept { return residual_; }

 private:
  ErrorKind kind_;
  double residual_;
};

/// Raised by the comparison deciders; carries the per-block ranks that
/// decided the outcome.
class RankError : public Error {
 public:
  RankError(ErrorKind kind, const std::string& what, std::vector<std::size_t> lhs,
            std::vector<std::size_t> rhs)
      : Error(kind, what), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  const std::vector<std::size_t>& lhs_ranks() const noexcept { return lhs_; }
  const std::vector<std::size_t>& rhs_ranks() const noexcept { return rhs_; }

 private:
  std::vector<std::size_t> lhs_;
  std::vector<std::size_t> rhs_;
};

}  // namespace ordproj
