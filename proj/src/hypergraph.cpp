#include "soltes/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "soltes/error.hpp"

namespace soltes {

namespace {

std::string describe(const VertexSet& e) {
  std::string out = "{";
  bool first = true;
  e.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

Vertex reindexed(Vertex x, Vertex removed) { return x < removed ? x : x - 1; }

// Detour sum of v given the distance matrices of H and of H - v.
Distance detour_from(const DistanceMatrix& full, const DistanceMatrix& reduced, Vertex v) {
  const std::size_t n = full.order();
  std::uint64_t sum = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    for (Vertex w = u + 1; w < n; ++w) {
      if (w == v) continue;
      const Distance& after = reduced(reindexed(u, v), reindexed(w, v));
      if (after.is_infinite()) return Distance::infinite();
      sum += after.value() - full(u, w).value();
    }
  }
  return Distance(sum);
}

bool all_finite(const DistanceMatrix& d) {
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex w = u + 1; w < d.order(); ++w) {
      if (d(u, w).is_infinite()) return false;
    }
  }
  return true;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (k < 1) throw Error(ErrorCode::kInvalidHypergraph, "uniformity must be positive");
}

Hypergraph::Hypergraph(std::size_t n, std::size_t k, std::vector<VertexSet> edges)
    : Hypergraph(n, k) {
  for (const auto& e : edges) {
    if (e.universe() != n) {
      throw Error(ErrorCode::kInvalidHypergraph, "edge over a universe of " +
                                                     std::to_string(e.universe()) +
                                                     " vertices, expected " + std::to_string(n));
    }
    if (e.size() != k) {
      throw Error(ErrorCode::kInvalidHypergraph,
                  "edge " + describe(e) + " does not have " + std::to_string(k) + " vertices");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const VertexSet& a, const VertexSet& b) {
    return lex_less(a, b);
  });
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(ErrorCode::kInvalidHypergraph, "duplicate edge " + describe(*dup));
  }
  edges_ = std::move(edges);
}

namespace {

std::vector<VertexSet> to_sets(std::size_t n, const std::vector<std::vector<Vertex>>& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& e : edges) {
    VertexSet s(n);
    for (Vertex v : e) {
      if (v >= n) {
        throw Error(ErrorCode::kInvalidHypergraph,
                    "vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
      }
      if (s.contains(v)) {
        throw Error(ErrorCode::kInvalidHypergraph, "repeated vertex " + std::to_string(v));
      }
      s.insert(v);
    }
    sets.push_back(std::move(s));
  }
  return sets;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::size_t k, const std::vector<std::vector<Vertex>>& edges)
    : Hypergraph(n, k, to_sets(n, edges)) {}

Adjacency::Adjacency(std::size_t n)
    : n_(n), words_(VertexSet::word_count(n)), bits_(n * words_, 0) {}

std::size_t Adjacency::neighbor_count(Vertex u) const {
  std::size_t total = 0;
  for (Word w : row(u)) total += std::popcount(w);
  return total;
}

std::uint64_t DistanceDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [d, c] : counts) t += c;
  return t;
}

Adjacency two_section_adjacency(const Hypergraph& h) {
  Adjacency adj(h.order());
  for (const auto& e : h.edges()) {
    auto ew = e.words();
    e.for_each([&](Vertex u) {
      auto r = adj.row(u);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] |= ew[i];
    });
  }
  for (Vertex u = 0; u < h.order(); ++u) {
    adj.row(u)[u / 64] &= ~(Adjacency::Word{1} << (u % 64));
  }
  return adj;
}

DistanceMatrix distance_matrix(const Adjacency& adj) {
  using Word = Adjacency::Word;
  const std::size_t n = adj.order();
  const std::size_t words = adj.words_per_row();
  DistanceMatrix d(n);
  std::vector<Word> visited(words), frontier(words), next(words);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    visited[s / 64] = frontier[s / 64] = Word{1} << (s % 64);
    for (std::uint64_t level = 1;; ++level) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t w = 0; w < words; ++w) {
        for (Word bits = frontier[w]; bits; bits &= bits - 1) {
          auto r = adj.row(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
          for (std::size_t i = 0; i < words; ++i) next[i] |= r[i];
        }
      }
      bool grew = false;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] &= ~visited[w];
        visited[w] |= next[w];
        for (Word bits = next[w]; bits; bits &= bits - 1) {
          d(s, static_cast<Vertex>(w * 64 + std::countr_zero(bits))) = Distance(level);
          grew = true;
        }
      }
      if (!grew) break;
      frontier.swap(next);
    }
  }
  return d;
}

DistanceMatrix distance_matrix(const Hypergraph& h) {
  return distance_matrix(two_section_adjacency(h));
}

Distance wiener(const DistanceMatrix& d) {
  Distance total(0);
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex w = u + 1; w < d.order(); ++w) {
      total += d(u, w);
      if (total.is_infinite()) return total;
    }
  }
  return total;
}

Distance wiener(const Hypergraph& h) { return wiener(distance_matrix(h)); }

Distance transmission(const DistanceMatrix& d, Vertex v) {
  Distance total(0);
  for (Vertex u = 0; u < d.order(); ++u) total += d(v, u);
  return total;
}

Distance transmission(const Hypergraph& h, Vertex v) {
  if (v >= h.order()) throw Error(ErrorCode::kParamOutOfRange, "vertex out of range");
  return transmission(distance_matrix(h), v);
}

Hypergraph delete_vertex(const Hypergraph& h, Vertex v) {
  if (v >= h.order()) throw Error(ErrorCode::kParamOutOfRange, "vertex out of range");
  const std::size_t n = h.order() - 1;
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges()) {
    if (e.contains(v)) continue;
    VertexSet moved(n);
    e.for_each([&](Vertex x) { moved.insert(reindexed(x, v)); });
    edges.push_back(std::move(moved));
  }
  return Hypergraph(n, h.uniformity(), std::move(edges));
}

Distance detour_sum(const Hypergraph& h, Vertex v) {
  if (v >= h.order()) throw Error(ErrorCode::kParamOutOfRange, "vertex out of range");
  DistanceMatrix full = distance_matrix(h);
  if (!all_finite(full)) throw Error(ErrorCode::kNotConnected, "detour sum of a disconnected hypergraph");
  return detour_from(full, distance_matrix(delete_vertex(h, v)), v);
}

SoltesReport soltes_report(const Hypergraph& h) {
  SoltesReport report;
  const DistanceMatrix full = distance_matrix(h);
  const bool connected = all_finite(full);
  report.wiener = wiener(full);
  report.verdict = h.order() > 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    const DistanceMatrix reduced = distance_matrix(delete_vertex(h, v));
    VertexReport vr;
    vr.label = v;
    vr.transmission = transmission(full, v);
    vr.wiener_after_deletion = wiener(reduced);
    vr.detour_sum = connected ? detour_from(full, reduced, v) : Distance::infinite();
    vr.delta = extended_difference<std::int64_t>(vr.wiener_after_deletion, report.wiener);

    // W(H - v) = W(H) - sigma(v) + detours, whenever everything is finite.
    if (connected) {
      if (vr.detour_sum.is_finite() != vr.wiener_after_deletion.is_finite()) {
        throw Error(ErrorCode::kInvariantViolated,
                    "detour sum and W(H - " + std::to_string(v) + ") disagree on finiteness");
      }
      if (vr.detour_sum.is_finite() &&
          report.wiener.value() - vr.transmission.value() + vr.detour_sum.value() !=
              vr.wiener_after_deletion.value()) {
        throw Error(ErrorCode::kInvariantViolated,
                    "vertex-deletion identity fails at vertex " + std::to_string(v));
      }
    }
    if (vr.delta != SignedDistance(0)) report.verdict = false;
    report.per_vertex.push_back(vr);
  }
  return report;
}

DistanceDistribution distance_distribution(const DistanceMatrix& d) {
  DistanceDistribution dist;
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex w = u + 1; w < d.order(); ++w) ++dist.counts[d(u, w)];
  }
  return dist;
}

DistanceDistribution distance_distribution(const Hypergraph& h) {
  return distance_distribution(distance_matrix(h));
}

Distance diameter(const Hypergraph& h) {
  const DistanceMatrix d = distance_matrix(h);
  Distance best(0);
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex w = u + 1; w < d.order(); ++w) best = std::max(best, d(u, w));
  }
  return best;
}

bool is_connected(const Hypergraph& h) { return all_finite(distance_matrix(h)); }

std::size_t degree(const Hypergraph& h, Vertex v) {
  return static_cast<std::size_t>(std::count_if(h.edges().begin(), h.edges().end(),
                                                [v](const VertexSet& e) { return e.contains(v); }));
}

std::size_t pair_degree(const Hypergraph& h, Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorCode::kParamOutOfRange, "pair degree needs two distinct vertices");
  return static_cast<std::size_t>(
      std::count_if(h.edges().begin(), h.edges().end(),
                    [u, v](const VertexSet& e) { return e.contains(u) && e.contains(v); }));
}

}  // namespace soltes
