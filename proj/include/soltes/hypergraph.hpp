#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "soltes/extended.hpp"
#include "soltes/vertex_set.hpp"

namespace soltes {

using Distance = Extended<std::uint64_t>;
using SignedDistance = Extended<std::int64_t>;

/// A k-uniform hypergraph on the vertices 0..n-1.
///
/// Edges are kept sorted lexicographically (by their ascending element
/// sequences) so that two hypergraphs with the same edge set compare equal.
/// Construction rejects edges of the wrong size, out-of-range vertices and
/// duplicate edges.
class Hypergraph {
 public:
  Hypergraph(std::size_t n, std::size_t k);
  Hypergraph(std::size_t n, std::size_t k, std::vector<VertexSet> edges);
  Hypergraph(std::size_t n, std::size_t k, const std::vector<std::vector<Vertex>>& edges);

  std::size_t order() const { return n_; }
  std::size_t uniformity() const { return k_; }
  std::size_t size() const { return edges_.size(); }

  std::span<const VertexSet> edges() const { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<VertexSet> edges_;
};

/// The 2-section: u ~ v iff u != v and some edge contains both.
class Adjacency {
 public:
  using Word = VertexSet::Word;

  explicit Adjacency(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::span<const Word> row(Vertex u) const { return {bits_.data() + u * words_, words_}; }
  std::span<Word> row(Vertex u) { return {bits_.data() + u * words_, words_}; }
  std::size_t neighbor_count(Vertex u) const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<Word> bits_;
};

/// All-pairs distances; unreachable pairs hold the infinite value.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, Distance::infinite()) {
    for (std::size_t i = 0; i < n; ++i) d_[i * n + i] = Distance(0);
  }

  std::size_t order() const { return n_; }
  const Distance& operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  Distance& operator()(Vertex u, Vertex v) { return d_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<Distance> d_;
};

/// n_i for every distance i that occurs, plus the infinite entry.
struct DistanceDistribution {
  std::map<Distance, std::uint64_t> counts;

  std::uint64_t count(const Distance& d) const {
    auto it = counts.find(d);
    return it == counts.end() ? 0 : it->second;
  }
  std::uint64_t total() const;
};

struct VertexReport {
  Vertex label = 0;  // index in the input hypergraph
  Distance transmission;
  Distance detour_sum;
  Distance wiener_after_deletion;
  SignedDistance delta;
};

struct SoltesReport {
  Distance wiener;
  std::vector<VertexReport> per_vertex;
  bool verdict = false;
};

Adjacency two_section_adjacency(const Hypergraph& h);
DistanceMatrix distance_matrix(const Hypergraph& h);
DistanceMatrix distance_matrix(const Adjacency& adjacency);

Distance wiener(const Hypergraph& h);
Distance wiener(const DistanceMatrix& d);
Distance transmission(const Hypergraph& h, Vertex v);
Distance transmission(const DistanceMatrix& d, Vertex v);

/// Removes v together with every edge through v; remaining vertices keep
/// their relative order.
Hypergraph delete_vertex(const Hypergraph& h, Vertex v);

/// Sum over pairs u, w != v of d_{H-v}(u, w) - d_H(u, w).
/// Throws ErrorCode::kNotConnected if h is disconnected; infinite if H - v is.
Distance detour_sum(const Hypergraph& h, Vertex v);

SoltesReport soltes_report(const Hypergraph& h);

DistanceDistribution distance_distribution(const Hypergraph& h);
DistanceDistribution distance_distribution(const DistanceMatrix& d);

Distance diameter(const Hypergraph& h);
bool is_connected(const Hypergraph& h);
std::size_t degree(const Hypergraph& h, Vertex v);
std::size_t pair_degree(const Hypergraph& h, Vertex u, Vertex v);

}  // namespace soltes
