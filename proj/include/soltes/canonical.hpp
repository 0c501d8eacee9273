#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "soltes/hypergraph.hpp"

namespace soltes {

/// Byte string identifying an isomorphism class of hypergraphs.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

struct CanonicalLabeling {
  /// position[v] is the canonical label of input vertex v.
  std::vector<Vertex> position;
  CanonicalCode code;
  /// Input index of the edge whose relabeled image is largest in the code.
  std::size_t top_edge = 0;
};

/// Canonical labeling of the vertex/edge incidence structure.
///
/// Vertices are ordered by iterated degree refinement (edges coloured by the
/// multiset of their vertex cells, vertices by the multiset of incident edge
/// colours); ties are broken by individualising vertices and backtracking,
/// keeping the least code over all leaves. Automorphisms discovered at equal
/// leaves prune sibling subtrees.
CanonicalLabeling canonical_labeling(std::size_t n, std::size_t k,
                                     std::span<const std::vector<Vertex>> edges);
CanonicalLabeling canonical_labeling(const Hypergraph& h);

CanonicalCode canonical_code(const Hypergraph& h);

/// `h` relabeled by its canonical labeling.
Hypergraph canonical_form(const Hypergraph& h);

/// Relabels vertex v as perm[v].
Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm);

}  // namespace soltes
