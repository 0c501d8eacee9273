#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>

#include "doctest.h"
#include "soltes/canonical.hpp"
#include "soltes/constructions.hpp"
#include "soltes/error.hpp"
#include "soltes/search.hpp"
#include "soltes/verify/oracles.hpp"

using namespace soltes;

namespace {

SearchSpec spec_for(std::size_t n, std::size_t k, std::size_t m_min, std::size_t m_max, bool connected) {
  SearchSpec s;
  s.n = n;
  s.k = k;
  s.m_min = m_min;
  s.m_max = m_max;
  s.require_connected = connected;
  return s;
}

std::vector<std::string> codes(const std::vector<Hypergraph>& hs) {
  std::vector<std::string> out;
  for (const auto& h : hs) out.push_back(canonical_code(h).hex());
  return out;
}

}  // namespace

TEST_CASE("canonical codes of explicit isomorphs") {
  const Hypergraph a(5, 3, std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}});
  const Hypergraph b(5, 3, std::vector<std::vector<Vertex>>{{0, 1, 4}, {2, 3, 4}});
  CHECK(canonical_code(a) == canonical_code(b));
  const Hypergraph c(5, 3, std::vector<std::vector<Vertex>>{{0, 1, 2}, {1, 2, 3}});
  CHECK(canonical_code(a) != canonical_code(c));
  CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("all pairs of triples on 5 vertices meeting in one vertex share a code") {
  std::vector<std::vector<Vertex>> triples;
  for (Vertex x = 0; x < 5; ++x)
    for (Vertex y = x + 1; y < 5; ++y)
      for (Vertex z = y + 1; z < 5; ++z) triples.push_back({x, y, z});
  std::set<std::string> seen;
  int pairs = 0;
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      std::vector<Vertex> common;
      std::set_intersection(triples[i].begin(), triples[i].end(), triples[j].begin(), triples[j].end(),
                            std::back_inserter(common));
      if (common.size() != 1) continue;
      ++pairs;
      seen.insert(canonical_code(Hypergraph(5, 3, std::vector<std::vector<Vertex>>{triples[i], triples[j]})).hex());
    }
  CHECK(pairs == 15);
  CHECK(seen.size() == 1);
}

TEST_CASE("property: canonical codes are invariant under relabeling") {
  oracle::Rng rng(42);
  for (int i = 0; i < 1500; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 14)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 3 * n)(rng);
    const Hypergraph h = oracle::random_hypergraph(rng, n, k, m);
    const Hypergraph moved = relabel(h, oracle::random_permutation(rng, n));
    REQUIRE(canonical_code(h) == canonical_code(moved));
    REQUIRE(canonical_form(h) == canonical_form(moved));
  }
  // Highly symmetric inputs stress the automorphism pruning.
  for (long long n : {11LL, 12LL, 24LL}) {
    const Hypergraph c = cycle_graph(n);
    CHECK(canonical_code(c) == canonical_code(relabel(c, oracle::random_permutation(rng, n))));
  }
  const Hypergraph k = knits(96);
  CHECK(canonical_code(k) == canonical_code(relabel(k, oracle::random_permutation(rng, 96))));
}

TEST_CASE("property: distinct codes separate non-isomorphic pairs") {
  // Two hypergraphs share a code exactly when the brute-force oracle says they are isomorphic.
  oracle::Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, n)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    const Hypergraph a = oracle::random_hypergraph(rng, n, k, m);
    const Hypergraph b = oracle::random_hypergraph(rng, n, k, m);
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0U);
    bool isomorphic = false;
    do isomorphic = isomorphic || relabel(a, p) == b;
    while (!isomorphic && std::next_permutation(p.begin(), p.end()));
    CHECK((canonical_code(a) == canonical_code(b)) == isomorphic);
  }
}

TEST_CASE("enumerate: 3-uniform on 4 vertices") {
  const SearchResult r = enumerate(spec_for(4, 3, 1, 4, false));
  CHECK(r.classes_by_size == std::vector<std::uint64_t>{0, 1, 1, 1, 1});
  CHECK(r.classes_visited == 4);
  const auto reference = oracle::class_counts(4, 3, false);
  for (std::size_t m = 1; m <= 4; ++m) CHECK(r.classes_by_size[m] == reference[m]);
}

TEST_CASE("enumerate: connected graphs on 5 vertices") {
  const SearchResult r = enumerate(spec_for(5, 2, 4, 10, true));
  CHECK(r.classes_visited == 21);
  const auto reference = oracle::class_counts(5, 2, true);
  std::uint64_t total = 0;
  for (std::size_t m = 4; m <= 10; ++m) total += reference[m];
  CHECK(total == 21);
}

TEST_CASE("connected graph counts match the known sequence") {
  const std::vector<std::uint64_t> known{0, 0, 1, 2, 6, 21, 112, 853, 11117};
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK(enumerate(spec_for(n, 2, 0, n * (n - 1) / 2, true)).classes_visited == known[n]);
  }
}

TEST_CASE("enumerate matches the all-permutations oracle") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 2; k <= n; ++k) {
      std::size_t pool = 1;
      for (std::size_t c = 0; c < k; ++c) pool = pool * (n - c) / (c + 1);
      if (pool > 15) continue;
      for (bool connected : {false, true}) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(connected);
        const SearchResult r = enumerate(spec_for(n, k, 0, pool, connected));
        CHECK(r.classes_by_size == oracle::class_counts(n, k, connected));
      }
    }
}

TEST_CASE("visitor sees each class once, in range") {
  std::set<std::string> seen;
  std::mutex lock;
  const SearchResult r = enumerate(spec_for(6, 3, 2, 5, true), [&](const Hypergraph& h) {
    std::lock_guard<std::mutex> guard(lock);
    CHECK(h.size() >= 2);
    CHECK(h.size() <= 5);
    CHECK(is_connected(h));
    CHECK(seen.insert(canonical_code(h).hex()).second);
  });
  CHECK(seen.size() == r.classes_visited);
}

TEST_CASE("partitioning is deterministic") {
  SearchSpec s = spec_for(7, 3, 0, 7, true);
  const SearchResult one = enumerate(s);
  s.partitions = 8;
  const SearchResult eight = enumerate(s);
  CHECK(one.classes_by_size == eight.classes_by_size);

  SearchSpec graphs = spec_for(11, 2, 10, 11, true);
  graphs.require_all_deletions_connected = true;
  const SearchResult a = search_soltes(graphs);
  graphs.partitions = 8;
  const SearchResult b = search_soltes(graphs);
  CHECK(codes(a.witnesses) == codes(b.witnesses));
  REQUIRE(a.witnesses.size() == 1);
  CHECK(canonical_code(a.witnesses[0]) == canonical_code(cycle_graph(11)));
}

TEST_CASE("pruning never loses a witness") {
  for (std::size_t n : {9U, 10U, 11U}) {
    SearchSpec s = spec_for(n, 2, n, n + 1, true);
    const SearchResult fast = search_soltes(s);
    s.pruning = false;
    const SearchResult slow = search_soltes(s);
    CHECK(codes(fast.witnesses) == codes(slow.witnesses));
    CHECK(slow.prune.full_reports == slow.classes_visited);
  }
  SearchSpec s = spec_for(6, 3, 0, 8, true);
  const SearchResult fast = search_soltes(s);
  s.pruning = false;
  const SearchResult slow = search_soltes(s);
  CHECK(codes(fast.witnesses) == codes(slow.witnesses));
}

TEST_CASE("search on small uniform cases") {
  const SearchResult a = search_soltes(spec_for(7, 3, 0, 10, true));
  CHECK(a.status == SearchStatus::kComplete);
  CHECK(a.witnesses.empty());
  const SearchResult b = search_soltes(spec_for(8, 4, 0, 6, true));
  CHECK(b.witnesses.empty());
}

TEST_CASE("wiener bounds and deletion bounds filter") {
  SearchSpec s = spec_for(5, 2, 4, 10, true);
  s.wiener_bounds = std::make_pair<std::uint64_t, std::uint64_t>(10, 10);
  std::uint64_t visited = 0;
  const SearchResult r = enumerate(s, [&](const Hypergraph& h) {
    CHECK(wiener(h) == Distance(10));
    ++visited;
  });
  CHECK(visited == r.classes_visited);
  CHECK(visited == 1);  // only K5

  SearchSpec bounded = spec_for(11, 2, 11, 11, true);
  bounded.deletion_wiener_upper_bound = 100;
  CHECK(search_soltes(bounded).witnesses.empty());
}

TEST_CASE("budgets surface as an explicit status") {
  SearchSpec s = spec_for(8, 3, 0, 12, true);
  s.node_cap = 50;
  const SearchResult r = search_soltes(s);
  CHECK(r.status == SearchStatus::kExhaustedBudget);
  CHECK(summary_json(r)["status"] == "exhausted_budget");
}

TEST_CASE("spec validation and json") {
  CHECK_THROWS_AS(spec_for(3, 1, 0, 1, true).validate(), Error);
  CHECK_THROWS_AS(spec_for(3, 4, 0, 1, true).validate(), Error);
  CHECK_THROWS_AS(spec_for(5, 2, 4, 11, true).validate(), Error);
  CHECK_THROWS_AS(spec_for(5, 2, 5, 4, true).validate(), Error);
  SearchSpec s = spec_for(7, 3, 1, 10, true);
  s.wiener_bounds = std::make_pair<std::uint64_t, std::uint64_t>(21, 40);
  s.partitions = 4;
  const SearchSpec back = search_spec_from_json(to_json(s));
  CHECK(to_json(back) == to_json(s));
  CHECK_THROWS_AS(search_spec_from_json(nlohmann::json{{"n", 5}}), Error);
}

TEST_CASE("witness json") {
  const nlohmann::json w = witness_json(canonical_form(cycle_graph(11)));
  CHECK(w["type"] == "witness");
  CHECK(w["edges"].size() == 11);
  CHECK(w["wiener"] == 165);
}
