#pragma once

#include <stdexcept>
#include <string>

namespace hunter {

enum class ErrorCode {
  Domain,
  SonicSingular,
  OriginSingular,
  BranchLost,
  DegenerateBranch,
  Resonant,
  ResonantOrder,
  TrustRegionExceeded,
  ConvergenceFailure,
  OutsideWindow,
  FitUnreliable,
  StiffnessFailure,
  GlueMismatch,
  AmbiguousCrossing,
  PositivityViolation,
  Config,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorCode::Domain, w) {}
};

struct SonicSingularError : Error {
  explicit SonicSingularError(const std::string& w)
      : Error(ErrorCode::SonicSingular, w) {}
};

struct OriginSingularError : Error {
  explicit OriginSingularError(const std::string& w)
      : Error(ErrorCode::OriginSingular, w) {}
};

struct BranchLostError : Error {
  explicit BranchLostError(const std::string& w)
      : Error(ErrorCode::BranchLost, w) {}
};

struct DegenerateBranchError : Error {
  explicit DegenerateBranchError(const std::string& w)
      : Error(ErrorCode::DegenerateBranch, w) {}
};

struct ResonantError : Error {
  explicit ResonantError(const std::string& w) : Error(ErrorCode::Resonant, w) {}
};

// Near-singular coefficient solve at a specific series order.
struct ResonantOrderError : Error {
  ResonantOrderError(int order, const std::string& w)
      : Error(ErrorCode::ResonantOrder, w), order(order) {}
  int order;
};

struct TrustRegionError : Error {
  explicit TrustRegionError(const std::string& w)
      : Error(ErrorCode::TrustRegionExceeded, w) {}
};

struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& w)
      : Error(ErrorCode::ConvergenceFailure, w) {}
};

struct OutsideWindowError : Error {
  explicit OutsideWindowError(const std::string& w)
      : Error(ErrorCode::OutsideWindow, w) {}
};

struct FitUnreliableError : Error {
  explicit FitUnreliableError(const std::string& w)
      : Error(ErrorCode::FitUnreliable, w) {}
};

struct StiffnessError : Error {
  explicit StiffnessError(const std::string& w)
      : Error(ErrorCode::StiffnessFailure, w) {}
};

struct GlueMismatchError : Error {
  explicit GlueMismatchError(const std::string& w)
      : Error(ErrorCode::GlueMismatch, w) {}
};

struct AmbiguousCrossingError : Error {
  explicit AmbiguousCrossingError(const std::string& w)
      : Error(ErrorCode::AmbiguousCrossing, w) {}
};

struct PositivityViolationError : Error {
  explicit PositivityViolationError(const std::string& w)
      : Error(ErrorCode::PositivityViolation, w) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ErrorCode::Config, w) {}
};

}  // namespace hunter
