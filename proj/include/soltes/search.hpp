#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "soltes/canonical.hpp"
#include "soltes/hypergraph.hpp"

namespace soltes {

/// Upper bounds on W(H - v) taken from the known extremal Wiener index of
/// connected 3-uniform hypergraphs (tight paths). These are trusted external
/// inputs and only used when a spec opts in via `deletion_wiener_upper_bound`.
inline constexpr std::uint64_t kMaxWiener3UniformOrder7 = 38;
inline constexpr std::uint64_t kMaxWiener3UniformOrder8 = 57;

struct SearchSpec {
  std::size_t n = 0;
  std::size_t k = 2;
  std::size_t m_min = 0;
  std::size_t m_max = 0;
  bool require_connected = true;
  bool require_all_deletions_connected = false;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> wiener_bounds;
  std::size_t partitions = 1;

  /// Disables every shortcut in search_soltes; each class then goes through
  /// the full Soltes report.
  bool pruning = true;
  /// Opt-in: discard H when W(H) exceeds this (any Soltes H has W(H) = W(H - v)).
  std::optional<std::uint64_t> deletion_wiener_upper_bound;

  /// Budgets; zero means unlimited.
  std::uint64_t node_cap = 0;
  double time_limit_seconds = 0;

  /// Throws ErrorCode::kParamOutOfRange when the spec is inconsistent.
  void validate() const;
};

nlohmann::json to_json(const SearchSpec& spec);
SearchSpec search_spec_from_json(const nlohmann::json& j);

enum class SearchStatus { kComplete, kExhaustedBudget };

std::string_view to_string(SearchStatus s);

struct PruneStats {
  std::uint64_t component_cuts = 0;          // subtrees that cannot become connected within m_max
  std::uint64_t disconnected = 0;            // classes rejected as disconnected
  std::uint64_t deletion_disconnected = 0;   // some H - v disconnected
  std::uint64_t wiener_bound = 0;            // W(H) above the opt-in bound
  std::uint64_t delta_nonzero = 0;           // some W(H - v) != W(H)
  std::uint64_t full_reports = 0;            // classes checked with soltes_report
};

struct SearchResult {
  SearchSpec spec;
  SearchStatus status = SearchStatus::kComplete;
  std::uint64_t classes_visited = 0;
  std::uint64_t nodes_expanded = 0;
  std::vector<std::uint64_t> classes_by_size;  // index m
  std::vector<Hypergraph> witnesses;           // sorted by canonical code
  PruneStats prune;
  double wall_seconds = 0;
};

nlohmann::json summary_json(const SearchResult& r);
nlohmann::json witness_json(const Hypergraph& h);

/// Receives one representative per isomorphism class passing the structural
/// filters. Called concurrently from different shards when partitions > 1.
using ClassVisitor = std::function<void(const Hypergraph&)>;

/// Isomorph-free generation by canonical augmentation: each node is extended
/// by one edge, and a child is kept only when removing its canonically
/// chosen edge gives back (a copy of) the parent. Children of one parent are
/// deduplicated by canonical code.
SearchResult enumerate(const SearchSpec& spec, const ClassVisitor& visitor = {});

/// All classes within the spec whose Soltes verdict is true.
SearchResult search_soltes(const SearchSpec& spec);

}  // namespace soltes
