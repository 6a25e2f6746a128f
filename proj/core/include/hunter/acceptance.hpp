#pragma once

#include <string>
#include <vector>

namespace hunter {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

/// Runs the full acceptance suite (constant identities, explicit solutions,
/// sonic data, series launcher, Lane-Emden, linear analysis, Hunter
/// enumeration, pointwise bounds, determinism). Criteria never throw; a
/// failure is reported in the result.
std::vector<CriterionResult> run_acceptance();

/// Single criterion by id (1-based); throws DomainError for unknown ids.
CriterionResult run_criterion(int id);

}  // namespace hunter
