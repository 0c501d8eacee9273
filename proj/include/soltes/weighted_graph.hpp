#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "soltes/extended.hpp"
#include "soltes/rational.hpp"
#include "soltes/vertex_set.hpp"

namespace soltes {

using WeightedDistance = Extended<Rational>;

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Rational weight;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Simple undirected graph with exact nonnegative rational edge weights.
/// Edges are normalised to u < v and sorted by endpoint pair.
class WeightedGraph {
 public:
  struct Arc {
    Vertex to;
    std::size_t edge;
  };

  WeightedGraph(std::size_t n, std::vector<WeightedEdge> edges);

  std::size_t order() const { return n_; }
  std::span<const WeightedEdge> edges() const { return edges_; }
  std::span<const Arc> arcs(Vertex u) const { return adjacency_[u]; }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<Arc>> adjacency_;
};

struct WeightedVertexReport {
  Vertex label = 0;
  WeightedDistance transmission;
  WeightedDistance detour_sum;
  WeightedDistance wiener_after_deletion;
  WeightedDistance delta;
};

struct WeightedSoltesReport {
  WeightedDistance wiener;
  std::vector<WeightedVertexReport> per_vertex;
  bool verdict = false;
};

/// Exact single-source shortest path lengths; unreachable vertices are infinite.
std::vector<WeightedDistance> dijkstra(const WeightedGraph& g, Vertex source);

WeightedDistance wiener(const WeightedGraph& g);
WeightedDistance transmission(const WeightedGraph& g, Vertex v);
WeightedGraph delete_vertex(const WeightedGraph& g, Vertex v);
/// Throws ErrorCode::kNotConnected if g is disconnected.
WeightedDistance detour_sum(const WeightedGraph& g, Vertex v);
WeightedSoltesReport soltes_report(const WeightedGraph& g);

/// Rung weight (2k^2 - 6k + 16) / (k^2 - 9k + 12) of the weighted prism.
Rational prism_rung_weight(long long k);

/// Prism C_{2k} x K_2 with unit rim weights and rungs of prism_rung_weight(k).
/// Vertices 0..2k-1 form the outer rim, 2k..4k-1 the inner one, rung i joins
/// i and i + 2k. Requires k >= 20.
WeightedGraph prism_soltes(long long k);

/// Scales all weights by the least positive rational making them coprime
/// integers. Throws ErrorCode::kAllZero when every weight is zero.
WeightedGraph integerize(const WeightedGraph& g);

/// C_10 whose edges {i, i+1} weigh 0 for even i and 1 for odd i.
WeightedGraph cycle_alternating_01();

/// ".wg" text format: header `n m`, then `u v num/den` per edge.
WeightedGraph read_wg(std::istream& in);
WeightedGraph read_wg_file(const std::string& path);
void write_wg(std::ostream& out, const WeightedGraph& g, const std::vector<std::string>& comments = {});

nlohmann::json to_json(const WeightedDistance& d);
nlohmann::json to_json(const WeightedSoltesReport& report);

}  // namespace soltes
