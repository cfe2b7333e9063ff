#pragma once

#include <string>
#include <vector>

namespace ordproj {

/// One checked statement inside a report.
struct Clause {
  std::string label;
  bool pass = false;
  double residual = 0.0;
  std::string note;
};

/// Outcome of a check_* operation: a list of labelled clauses with the
/// numerical margin each one was decided at.
struct CheckReport {
  std::vector<Clause> clauses;

  void add(std::string label, bool pass, double residual = 0.0, std::string note = {});
  /// Appends every clause of `other`, prefixing labels with `prefix`.
  void merge(const CheckReport& other, const std::string& prefix = {});
  bool all_pass() const;
  double worst_residual() const;
  /// First clause with this label, or nullptr.
  const Clause* find(const std::string& label) const;
  /// Labels of failing clauses joined by ", ".
  std::string failures() const;
};

}  // namespace ordproj
