#include "soltes/verify/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "soltes/error.hpp"

namespace soltes::oracle {

std::vector<std::vector<MaybeDistance>> pair_distances(const Hypergraph& h) {
  const std::size_t n = h.order();
  std::vector<std::vector<MaybeDistance>> d(n, std::vector<MaybeDistance>(n));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      for (const auto& e : h.edges()) {
        if (e.contains(u) && e.contains(v)) {
          d[u][v] = 1;
          break;
        }
      }
    }
  }
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (!d[u][w] || !d[w][v]) continue;
        const std::uint64_t via = *d[u][w] + *d[w][v];
        if (!d[u][v] || via < *d[u][v]) d[u][v] = via;
      }
  return d;
}

MaybeDistance wiener(const Hypergraph& h) {
  const auto d = pair_distances(h);
  std::uint64_t total = 0;
  for (std::size_t u = 0; u < d.size(); ++u)
    for (std::size_t v = u + 1; v < d.size(); ++v) {
      if (!d[u][v]) return std::nullopt;
      total += *d[u][v];
    }
  return total;
}

Hypergraph remove_vertex(const Hypergraph& h, Vertex v) {
  std::vector<std::vector<Vertex>> kept;
  for (const auto& e : h.edges()) {
    if (e.contains(v)) continue;
    std::vector<Vertex> moved;
    for (Vertex x : e.elements()) moved.push_back(x > v ? x - 1 : x);
    kept.push_back(std::move(moved));
  }
  return Hypergraph(h.order() - 1, h.uniformity(), kept);
}

bool is_soltes(const Hypergraph& h) {
  if (h.order() == 0) return false;
  const MaybeDistance w = oracle::wiener(h);
  if (!w) return false;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (oracle::wiener(remove_vertex(h, v)) != w) return false;
  }
  return true;
}

std::vector<std::vector<std::optional<Rational>>> pair_distances(const WeightedGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::optional<Rational>>> d(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t u = 0; u < n; ++u) d[u][u] = Rational(0);
  for (const auto& e : g.edges()) {
    if (!d[e.u][e.v] || e.weight < *d[e.u][e.v]) d[e.u][e.v] = d[e.v][e.u] = e.weight;
  }
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (!d[u][w] || !d[w][v]) continue;
        Rational via = *d[u][w] + *d[w][v];
        if (!d[u][v] || via < *d[u][v]) d[u][v] = std::move(via);
      }
  return d;
}

std::optional<Rational> wiener(const WeightedGraph& g) {
  const auto d = pair_distances(g);
  Rational total(0);
  for (std::size_t u = 0; u < d.size(); ++u)
    for (std::size_t v = u + 1; v < d.size(); ++v) {
      if (!d[u][v]) return std::nullopt;
      total += *d[u][v];
    }
  return total;
}

bool is_soltes(const WeightedGraph& g) {
  if (g.order() == 0) return false;
  const auto w = oracle::wiener(g);
  if (!w) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<WeightedEdge> kept;
    for (const auto& e : g.edges()) {
      if (e.u == v || e.v == v) continue;
      kept.push_back({e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v, e.weight});
    }
    if (oracle::wiener(WeightedGraph(g.order() - 1, kept)) != w) return false;
  }
  return true;
}

namespace {

std::vector<std::uint32_t> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) == k) out.push_back(mask);
  }
  return out;
}

bool masks_connected(std::size_t n, const std::vector<std::uint32_t>& edges) {
  if (n <= 1) return true;
  std::uint32_t reached = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t e : edges) {
      if ((e & reached) && (e & ~reached)) {
        reached |= e;
        grew = true;
      }
    }
  }
  return reached == (1U << n) - 1;
}

}  // namespace

std::vector<std::uint64_t> class_counts(std::size_t n, std::size_t k, bool connected_only) {
  const auto pool = k_subsets(n, k);
  if (pool.size() > 20 || n > 7) throw Error(ErrorCode::kParamOutOfRange, "oracle too large");
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0U);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::set<std::vector<std::uint32_t>>> seen(pool.size() + 1);
  for (std::uint32_t choice = 0; choice < (1U << pool.size()); ++choice) {
    std::vector<std::uint32_t> edges;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (choice >> i & 1) edges.push_back(pool[i]);
    }
    if (connected_only && !masks_connected(n, edges)) continue;
    std::vector<std::uint32_t> best;
    for (const auto& perm : perms) {
      std::vector<std::uint32_t> image;
      for (std::uint32_t e : edges) {
        std::uint32_t moved = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (e >> x & 1) moved |= 1U << perm[x];
        }
        image.push_back(moved);
      }
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = std::move(image);
    }
    seen[edges.size()].insert(std::move(best));
  }
  std::vector<std::uint64_t> counts;
  for (const auto& s : seen) counts.push_back(s.size());
  return counts;
}

Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t k, std::size_t m) {
  std::set<std::vector<Vertex>> edges;
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0U);
  std::size_t attempts = 0;
  while (edges.size() < m && attempts++ < 50 * m + 100) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> e(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(e.begin(), e.end());
    edges.insert(std::move(e));
  }
  return Hypergraph(n, k, std::vector<std::vector<Vertex>>(edges.begin(), edges.end()));
}

Hypergraph random_connected_hypergraph(Rng& rng, std::size_t max_order) {
  std::uniform_int_distribution<std::size_t> order(2, max_order);
  for (;;) {
    const std::size_t n = order(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, n)(rng);
    // Enough edges to usually connect, plus a random surplus.
    const std::size_t base = (n - 1 + k - 2) / (k - 1);
    const std::size_t m = base + std::uniform_int_distribution<std::size_t>(0, n)(rng);
    Hypergraph h = random_hypergraph(rng, n, k, m);
    if (is_connected(h)) return h;
  }
}

std::vector<Vertex> random_permutation(Rng& rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0U);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace soltes::oracle
