#pragma once

#include <string>
#include <vector>

#include "skewalg/algebra.hpp"

namespace skewalg::verify {

struct Check {
  std::string description;
  bool passed = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<Check> checks;
  double seconds = 0;
  double limit_seconds = 0;

  bool within_limit() const { return seconds <= limit_seconds; }
  bool passed() const;
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion (1..kCriterionCount). Never throws for a
/// mathematical mismatch; an unexpected exception becomes a failed check.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

/// "PASS\t<id>\t<name>" or "FAIL\t<id>\t<name>"; no timings, so byte-stable.
std::string summary_line(const CriterionResult& r);
/// Indented per-check lines.
std::string detail_lines(const CriterionResult& r);

/// Zero algebras, one-dimensional algebras, every two-dimensional algebra with
/// structure constants in {-1, 0, 1}, the Heisenberg algebra and I4.
std::vector<nalg::StructureAlgebra> algebra_corpus();

}  // namespace skewalg::verify
