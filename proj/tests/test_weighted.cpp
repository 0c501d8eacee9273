#include <set>

#include "doctest.h"
#include "soltes/error.hpp"
#include "soltes/verify/oracles.hpp"
#include "soltes/weighted_graph.hpp"

using namespace soltes;

namespace {

WeightedGraph uniform_cycle(std::size_t n, long long weight) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), Rational(weight)});
  }
  return WeightedGraph(n, edges);
}

WeightedDistance exact(long long num, long long den = 1) { return WeightedDistance(Rational(num, den)); }

}  // namespace

TEST_CASE("rationals") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(5).to_string() == "5/1");
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("4") == Rational(4));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("1/x"), Error);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("weighted graph validation") {
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 0, Rational(1)}}), Error);
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 3, Rational(1)}}), Error);
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, Rational(1)}, {1, 0, Rational(2)}}), Error);
  try {
    WeightedGraph(2, {{0, 1, Rational(-1)}});
    FAIL("negative weight accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNegativeWeight);
  }
}

TEST_CASE("dijkstra") {
  const WeightedGraph path(3, {{0, 1, Rational(1)}, {1, 2, Rational(1)}});
  CHECK(dijkstra(path, 0)[2] == exact(2));
  const WeightedGraph split(3, {{0, 1, Rational(1, 2)}});
  CHECK(dijkstra(split, 0)[2].is_infinite());
  CHECK(wiener(split).is_infinite());
}

TEST_CASE("alternating 0/1 ten-cycle") {
  const WeightedGraph g = cycle_alternating_01();
  const auto reference = oracle::pair_distances(g);
  std::set<Rational> sigmas;
  for (Vertex u = 0; u < 10; ++u) {
    const auto d = dijkstra(g, u);
    Rational eccentricity(0);
    for (Vertex v = 0; v < 10; ++v) {
      CHECK(d[v] == WeightedDistance(*reference[u][v]));
      eccentricity = std::max(eccentricity, d[v].value());
    }
    // Contracting the zero edges leaves a 5-cycle, so every vertex reaches all others within 2.
    CHECK(eccentricity == Rational(2));
    sigmas.insert(transmission(g, u).value());
  }
  CHECK(wiener(g) == exact(60));
  CHECK(sigmas == std::set<Rational>{Rational(12)});
  const WeightedSoltesReport r = soltes_report(g);
  CHECK(r.verdict);
  CHECK(oracle::is_soltes(g));
}

TEST_CASE("prism rung weights") {
  CHECK(prism_rung_weight(20) == Rational(3));
  CHECK(prism_rung_weight(21) == Rational(193, 66));
  CHECK(prism_rung_weight(40) == Rational(744, 313));
  CHECK_THROWS_AS(prism_soltes(19), Error);
  for (long long k = 20; k <= 40; ++k) {
    const Rational x = prism_rung_weight(k);
    CHECK(x > Rational(2));
    CHECK(x <= Rational(3));
  }
}

TEST_CASE("prism with k = 20") {
  const WeightedGraph g = prism_soltes(20);
  CHECK(g.order() == 80);
  CHECK(dijkstra(g, 0)[20] == exact(20));
  CHECK(wiener(g) == exact(36800));
  const WeightedSoltesReport r = soltes_report(g);
  CHECK(r.verdict);
  for (const auto& v : r.per_vertex) {
    CHECK(v.transmission == exact(920));
    CHECK(v.detour_sum == exact(920));
  }
  CHECK(oracle::wiener(g) == std::optional<Rational>(Rational(36800)));
}

TEST_CASE("prism reports agree with the Floyd-Warshall oracle") {
  for (long long k : {21LL, 26LL}) {
    const WeightedGraph g = prism_soltes(k);
    const auto reference = oracle::pair_distances(g);
    for (Vertex u : {0U, 5U, static_cast<Vertex>(2 * k + 3)}) {
      const auto d = dijkstra(g, u);
      for (Vertex v = 0; v < g.order(); ++v) CHECK(d[v] == WeightedDistance(*reference[u][v]));
    }
    const WeightedGraph reduced = delete_vertex(g, 0);
    CHECK(wiener(reduced) == WeightedDistance(*oracle::wiener(reduced)));
    CHECK(wiener(reduced) == wiener(g));
  }
}

TEST_CASE("integerize") {
  const WeightedGraph p20 = prism_soltes(20);
  const WeightedGraph same = integerize(p20);
  CHECK(std::equal(same.edges().begin(), same.edges().end(), p20.edges().begin(), p20.edges().end()));

  const WeightedGraph p21 = integerize(prism_soltes(21));
  std::set<Rational> weights;
  for (const auto& e : p21.edges()) weights.insert(e.weight);
  CHECK(weights == std::set<Rational>{Rational(66), Rational(193)});
  CHECK(soltes_report(p21).verdict);

  const WeightedGraph c11 = integerize(uniform_cycle(11, 5));
  for (const auto& e : c11.edges()) CHECK(e.weight == Rational(1));
  CHECK(soltes_report(c11).verdict);

  try {
    integerize(WeightedGraph(3, {{0, 1, Rational(0)}, {1, 2, Rational(0)}}));
    FAIL("all-zero weights accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAllZero);
  }
}

TEST_CASE("property: random weighted graphs against the oracle") {
  oracle::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
    std::vector<WeightedEdge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (std::bernoulli_distribution(0.45)(rng)) {
          edges.push_back({u, v, Rational(std::uniform_int_distribution<long long>(0, 6)(rng),
                                          std::uniform_int_distribution<long long>(1, 4)(rng))});
        }
      }
    const WeightedGraph g(n, edges);
    const auto reference = oracle::wiener(g);
    CHECK(wiener(g) == (reference ? WeightedDistance(*reference) : WeightedDistance::infinite()));
    const WeightedSoltesReport r = soltes_report(g);
    CHECK(r.verdict == oracle::is_soltes(g));
    if (r.wiener.is_finite()) {
      Rational total(0);
      for (const auto& v : r.per_vertex) total += v.transmission.value();
      CHECK(total == r.wiener.value() * Rational(2));
    }
  }
}
