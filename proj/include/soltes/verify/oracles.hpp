#pragma once

// Slow reference implementations used to cross-check the library. They share
// no code with the optimized paths beyond the Hypergraph container.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "soltes/hypergraph.hpp"
#include "soltes/weighted_graph.hpp"

namespace soltes::oracle {

using Rng = std::mt19937_64;
using MaybeDistance = std::optional<std::uint64_t>;

/// Floyd-Warshall on the 2-section, built by scanning edges for each pair.
std::vector<std::vector<MaybeDistance>> pair_distances(const Hypergraph& h);

/// Sum over unordered pairs; nullopt when some pair is disconnected.
MaybeDistance wiener(const Hypergraph& h);

/// Removes v and the edges through it, relabeling survivors downward.
Hypergraph remove_vertex(const Hypergraph& h, Vertex v);

/// Soltes test straight from the definition.
bool is_soltes(const Hypergraph& h);

/// Floyd-Warshall over exact rationals; nullopt means unreachable.
std::vector<std::vector<std::optional<Rational>>> pair_distances(const WeightedGraph& g);
std::optional<Rational> wiener(const WeightedGraph& g);
bool is_soltes(const WeightedGraph& g);

/// Number of isomorphism classes of k-uniform hypergraphs on n vertices for
/// each size m (index m), by canonizing every labeled edge set over all n!
/// permutations. Only feasible for C(n, k) <= 20 and n <= 7.
std::vector<std::uint64_t> class_counts(std::size_t n, std::size_t k, bool connected_only);

Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t k, std::size_t m);

/// Random connected hypergraph with 2 <= n <= max_order and 2 <= k <= n.
Hypergraph random_connected_hypergraph(Rng& rng, std::size_t max_order);

std::vector<Vertex> random_permutation(Rng& rng, std::size_t n);

}  // namespace soltes::oracle
