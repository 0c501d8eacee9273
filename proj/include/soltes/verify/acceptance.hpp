#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace soltes {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool gating = true;  // extended runs are reported but never gate
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  bool extended = false;
  std::uint64_t seed = 0x50174e5ULL;
  std::uint64_t lemma_samples = 100000;
  std::uint64_t identity_samples = 10000;
  std::uint64_t relabel_pairs = 1000;
  std::size_t partitions = 1;
  std::size_t graph_sweep_order = 9;  // extended run only
};

using CriterionCallback = std::function<void(const CriterionResult&)>;

/// Runs every criterion in order; `on_result` sees each one as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const CriterionCallback& on_result = {});

bool all_gating_passed(const std::vector<CriterionResult>& results);

std::string format_line(const CriterionResult& r);
nlohmann::json to_json(const CriterionResult& r);

}  // namespace soltes
