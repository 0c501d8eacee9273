#include "soltes/weighted_graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "soltes/error.hpp"

namespace soltes {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<WeightedEdge> edges)
    : n_(n), adjacency_(n) {
  for (auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::kInvalidGraph, "loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= n) throw Error(ErrorCode::kInvalidGraph, "vertex " + std::to_string(e.v) + " out of range");
    if (e.weight.sign() < 0) {
      throw Error(ErrorCode::kNegativeWeight, "edge {" + std::to_string(e.u) + "," +
                                                  std::to_string(e.v) + "} has weight " +
                                                  e.weight.to_string());
    }
  }
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw Error(ErrorCode::kInvalidGraph, "parallel edges {" + std::to_string(edges[i].u) + "," +
                                                std::to_string(edges[i].v) + "}");
    }
  }
  edges_ = std::move(edges);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adjacency_[edges_[i].u].push_back({edges_[i].v, i});
    adjacency_[edges_[i].v].push_back({edges_[i].u, i});
  }
}

namespace {

// The graph with every weight multiplied by `scale`, the lcm of the
// denominators, so that shortest paths run on integers.
struct ScaledGraph {
  mpz_class scale = 1;
  std::vector<mpz_class> weight;  // per edge
};

ScaledGraph scaled_with(const WeightedGraph& g, const mpz_class& scale) {
  ScaledGraph s;
  s.scale = scale;
  s.weight.reserve(g.edges().size());
  for (const auto& e : g.edges()) s.weight.push_back(e.weight.numerator() * (scale / e.weight.denominator()));
  return s;
}

ScaledGraph scaled(const WeightedGraph& g) {
  mpz_class scale = 1;
  for (const auto& e : g.edges()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.weight.denominator().get_mpz_t());
  }
  return scaled_with(g, scale);
}

// Shortest path lengths in scaled units; `reached[v]` false means infinite.
void scaled_dijkstra(const WeightedGraph& g, const ScaledGraph& s, Vertex source,
                     std::vector<mpz_class>& dist, std::vector<char>& reached) {
  const std::size_t n = g.order();
  dist.assign(n, 0);
  reached.assign(n, 0);
  std::vector<char> done(n, 0);
  using Entry = std::pair<mpz_class, Vertex>;
  auto greater = [](const Entry& a, const Entry& b) {
    int c = cmp(a.first, b.first);
    return c > 0 || (c == 0 && a.second > b.second);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(greater)> queue(greater);
  reached[source] = 1;
  queue.emplace(0, source);
  mpz_class candidate;
  while (!queue.empty()) {
    Vertex u = queue.top().second;
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const auto& arc : g.arcs(u)) {
      if (done[arc.to]) continue;
      candidate = dist[u] + s.weight[arc.edge];
      if (!reached[arc.to] || candidate < dist[arc.to]) {
        reached[arc.to] = 1;
        dist[arc.to] = candidate;
        queue.emplace(candidate, arc.to);
      }
    }
  }
}

// Row sums and pair sums of the all-pairs distance matrix, in scaled units.
struct ScaledDistances {
  std::size_t n = 0;
  std::vector<mpz_class> d;
  bool connected = true;

  const mpz_class& at(Vertex u, Vertex v) const { return d[u * n + v]; }
};

ScaledDistances all_pairs(const WeightedGraph& g, const ScaledGraph& s) {
  ScaledDistances out;
  out.n = g.order();
  out.d.resize(out.n * out.n);
  std::vector<mpz_class> dist;
  std::vector<char> reached;
  for (Vertex u = 0; u < out.n; ++u) {
    scaled_dijkstra(g, s, u, dist, reached);
    for (Vertex v = 0; v < out.n; ++v) {
      if (!reached[v]) out.connected = false;
      out.d[u * out.n + v] = dist[v];
    }
  }
  return out;
}

WeightedDistance unscale(const mpz_class& value, const mpz_class& scale) {
  return WeightedDistance(Rational(mpq_class(value, scale)));
}

WeightedDistance scaled_wiener(const ScaledDistances& d, const mpz_class& scale) {
  if (!d.connected) return WeightedDistance::infinite();
  mpz_class total = 0;
  for (Vertex u = 0; u < d.n; ++u) {
    for (Vertex v = u + 1; v < d.n; ++v) total += d.at(u, v);
  }
  return unscale(total, scale);
}

WeightedDistance scaled_transmission(const ScaledDistances& d, const mpz_class& scale, Vertex v) {
  if (!d.connected) return WeightedDistance::infinite();
  mpz_class total = 0;
  for (Vertex u = 0; u < d.n; ++u) total += d.at(v, u);
  return unscale(total, scale);
}

Vertex reindexed(Vertex x, Vertex removed) { return x < removed ? x : x - 1; }

WeightedDistance scaled_detour(const ScaledDistances& full, const ScaledDistances& reduced,
                               const mpz_class& scale, Vertex v) {
  if (!reduced.connected) return WeightedDistance::infinite();
  mpz_class total = 0;
  for (Vertex u = 0; u < full.n; ++u) {
    if (u == v) continue;
    for (Vertex w = u + 1; w < full.n; ++w) {
      if (w == v) continue;
      total += reduced.at(reindexed(u, v), reindexed(w, v)) - full.at(u, w);
    }
  }
  return unscale(total, scale);
}

void check_vertex(const WeightedGraph& g, Vertex v) {
  if (v >= g.order()) throw Error(ErrorCode::kParamOutOfRange, "vertex out of range");
}

}  // namespace

std::vector<WeightedDistance> dijkstra(const WeightedGraph& g, Vertex source) {
  check_vertex(g, source);
  ScaledGraph s = scaled(g);
  std::vector<mpz_class> dist;
  std::vector<char> reached;
  scaled_dijkstra(g, s, source, dist, reached);
  std::vector<WeightedDistance> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out.push_back(reached[v] ? unscale(dist[v], s.scale) : WeightedDistance::infinite());
  }
  return out;
}

WeightedDistance wiener(const WeightedGraph& g) {
  ScaledGraph s = scaled(g);
  return scaled_wiener(all_pairs(g, s), s.scale);
}

WeightedDistance transmission(const WeightedGraph& g, Vertex v) {
  check_vertex(g, v);
  WeightedDistance total(0);
  for (const auto& d : dijkstra(g, v)) total += d;
  return total;
}

WeightedGraph delete_vertex(const WeightedGraph& g, Vertex v) {
  check_vertex(g, v);
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    edges.push_back({reindexed(e.u, v), reindexed(e.v, v), e.weight});
  }
  return WeightedGraph(g.order() - 1, std::move(edges));
}

WeightedDistance detour_sum(const WeightedGraph& g, Vertex v) {
  check_vertex(g, v);
  ScaledGraph s = scaled(g);
  ScaledDistances full = all_pairs(g, s);
  if (!full.connected) throw Error(ErrorCode::kNotConnected, "detour sum of a disconnected graph");
  // H - v reuses the scale of H so both matrices share units.
  WeightedGraph reduced_graph = delete_vertex(g, v);
  ScaledGraph rs = scaled_with(reduced_graph, s.scale);
  return scaled_detour(full, all_pairs(reduced_graph, rs), s.scale, v);
}

WeightedSoltesReport soltes_report(const WeightedGraph& g) {
  WeightedSoltesReport report;
  const ScaledGraph s = scaled(g);
  const ScaledDistances full = all_pairs(g, s);
  report.wiener = scaled_wiener(full, s.scale);
  report.verdict = g.order() > 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    WeightedGraph reduced_graph = delete_vertex(g, v);
    ScaledGraph rs = scaled_with(reduced_graph, s.scale);
    const ScaledDistances reduced = all_pairs(reduced_graph, rs);

    WeightedVertexReport vr;
    vr.label = v;
    vr.transmission = scaled_transmission(full, s.scale, v);
    vr.wiener_after_deletion = scaled_wiener(reduced, s.scale);
    vr.detour_sum = full.connected ? scaled_detour(full, reduced, s.scale, v)
                                   : WeightedDistance::infinite();
    if (report.wiener.is_finite() && vr.wiener_after_deletion.is_finite()) {
      vr.delta = WeightedDistance(vr.wiener_after_deletion.value() - report.wiener.value());
    } else {
      vr.delta = WeightedDistance::infinite();
    }
    if (full.connected && vr.detour_sum.is_finite()) {
      if (report.wiener.value() - vr.transmission.value() + vr.detour_sum.value() !=
          vr.wiener_after_deletion.value()) {
        throw Error(ErrorCode::kInvariantViolated,
                    "vertex-deletion identity fails at vertex " + std::to_string(v));
      }
    }
    if (vr.delta != WeightedDistance(0)) report.verdict = false;
    report.per_vertex.push_back(std::move(vr));
  }
  return report;
}

Rational prism_rung_weight(long long k) {
  return Rational(2 * k * k - 6 * k + 16, k * k - 9 * k + 12);
}

WeightedGraph prism_soltes(long long k) {
  if (k < 20) throw Error(ErrorCode::kParamOutOfRange, "prism needs k >= 20, got " + std::to_string(k));
  const Rational x = prism_rung_weight(k);
  if (!(Rational(2) < x && x <= Rational(3))) {
    throw Error(ErrorCode::kInvariantViolated, "rung weight " + x.to_string() + " outside (2, 3]");
  }
  const auto cycle = static_cast<Vertex>(2 * k);
  std::vector<WeightedEdge> edges;
  for (Vertex i = 0; i < cycle; ++i) {
    Vertex next = (i + 1) % cycle;
    edges.push_back({i, next, Rational(1)});
    edges.push_back({cycle + i, cycle + next, Rational(1)});
    edges.push_back({i, cycle + i, x});
  }
  return WeightedGraph(2 * cycle, std::move(edges));
}

WeightedGraph integerize(const WeightedGraph& g) {
  const ScaledGraph s = scaled(g);
  mpz_class divisor = 0;
  for (const auto& w : s.weight) mpz_gcd(divisor.get_mpz_t(), divisor.get_mpz_t(), w.get_mpz_t());
  if (divisor == 0) throw Error(ErrorCode::kAllZero, "every weight is zero");
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < s.weight.size(); ++i) {
    const auto& e = g.edges()[i];
    edges.push_back({e.u, e.v, Rational(mpq_class(s.weight[i] / divisor))});
  }
  return WeightedGraph(g.order(), std::move(edges));
}

WeightedGraph cycle_alternating_01() {
  std::vector<WeightedEdge> edges;
  for (Vertex i = 0; i < 10; ++i) edges.push_back({i, (i + 1) % 10, Rational(i % 2 == 0 ? 0 : 1)});
  return WeightedGraph(10, std::move(edges));
}

WeightedGraph read_wg(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) {
    return Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + msg);
  };
  if (!next_line()) throw Error(ErrorCode::kParse, "missing header line");
  long long n = -1, m = -1;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra) || n < 0 || m < 0) throw fail("header must be `n m`");
  }
  std::vector<WeightedEdge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw Error(ErrorCode::kParse, "expected " + std::to_string(m) + " edges");
    std::istringstream ss(line);
    long long u = -1, v = -1;
    std::string w, extra;
    if (!(ss >> u >> v >> w) || (ss >> extra)) throw fail("edge must be `u v num/den`");
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), Rational::parse(w)});
  }
  if (next_line()) throw fail("trailing content");
  return WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
}

WeightedGraph read_wg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return read_wg(in);
}

void write_wg(std::ostream& out, const WeightedGraph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.order() << ' ' << g.edges().size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.weight.to_string() << '\n';
}

nlohmann::json to_json(const WeightedDistance& d) {
  if (d.is_infinite()) return "inf";
  return d.value().to_string();
}

nlohmann::json to_json(const WeightedSoltesReport& report) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : report.per_vertex) {
    vertices.push_back({{"label", v.label},
                        {"sigma", to_json(v.transmission)},
                        {"detour_sum", to_json(v.detour_sum)},
                        {"wiener_after", to_json(v.wiener_after_deletion)},
                        {"delta", to_json(v.delta)}});
  }
  return {{"wiener", to_json(report.wiener)}, {"vertices", vertices}, {"verdict", report.verdict}};
}

}  // namespace soltes
