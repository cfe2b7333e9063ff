#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordproj/document.hpp"
#include "ordproj/linalg.hpp"
#include "ordproj/report.hpp"

namespace ordproj {

struct SuiteOptions {
  std::string id;
  std::uint64_t seed = 0;
  std::size_t cases = 200;
  std::vector<std::size_t> dims{1, 2, 3};
  std::vector<std::vector<std::size_t>> blocks{{2}, {3}, {1, 2}};
  TolerancePolicy tol;
  /// 0 picks the hardware concurrency.
  std::size_t threads = 1;
};

struct CaseFailure {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::vector<std::size_t> blocks;
  std::string operation;
  double residual = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string id;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t passed = 0;
  double worst_residual = 0.0;
  std::vector<CaseFailure> failures;
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::size_t>> blocks;
  std::string timestamp;

  bool ok() const { return failures.empty(); }
  json to_json(bool with_timestamp = true) const;
  std::string summary() const;
};

struct SuiteInfo {
  std::string id;
  std::string statement;
};

/// Every suite id with the statement it exercises.
const std::vector<SuiteInfo>& suite_catalog();
bool is_known_suite(const std::string& id);

/// Case i runs at n = dims[i mod |dims|] over blocks[(i / |dims|) mod |blocks|]
/// with its own seed derive_seed(seed, i), so thread count never changes the
/// report. Throws PreconditionViolated for an unknown id or empty dims.
SuiteReport run_suite(const SuiteOptions& options);

/// One case of a suite, as the runner sees it.
CheckReport run_suite_case(const std::string& id, const std::vector<std::size_t>& block_dims, std::size_t n,
                           std::uint64_t case_seed, const SuiteOptions& options);

}  // namespace ordproj
