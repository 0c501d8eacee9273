#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "soltes/hypergraph.hpp"

namespace soltes {

/// Distance profile of a connected 4-uniform hypergraph on 8 vertices, as
/// used by the structural bounds checked in lemma_suite.
struct Order8Profile {
  std::size_t size = 0;
  std::uint64_t diameter = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t n3 = 0;
  std::uint64_t wiener = 0;
};

Order8Profile order8_profile(const Hypergraph& h);

struct LemmaCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};

struct LemmaReport {
  std::uint64_t exhaustive_classes = 0;
  std::uint64_t random_samples = 0;
  std::vector<LemmaCheck> checks;
  std::vector<Hypergraph> counterexamples;  // first few offenders
  std::uint64_t size3_diameter3 = 0;        // configurations with two disjoint edges and one more

  bool ok() const;
};

/// Lemma checks (by name) that `p` violates; empty when all hold.
std::vector<std::string> violated_lemmas(const Order8Profile& p);

/// Checks every connected 4-uniform order-8 class of size <= exhaustive_max_size
/// and `sample_size` random connected ones of larger size.
LemmaReport lemma_suite(std::uint64_t sample_size, std::uint64_t seed, std::size_t exhaustive_max_size = 5);

nlohmann::json to_json(const LemmaReport& report);

}  // namespace soltes
