#include "soltes/lemmas.hpp"

#include <algorithm>
#include <random>

#include "soltes/search.hpp"

namespace soltes {

namespace {

const std::vector<std::string> kLemmaNames{
    "size>=3 and diameter<=3",
    "n1>=15, equality only at size 3",
    "diameter 2 => W<=41, equality only at size 3",
    "diameter 3 => W<=44, equality iff size 3",
    "size>=4 => trichotomy on (diameter, n3, W)",
};

constexpr std::size_t kMaxCounterexamples = 8;

}  // namespace

Order8Profile order8_profile(const Hypergraph& h) {
  const DistanceDistribution dist = distance_distribution(h);
  Order8Profile p;
  p.size = h.size();
  p.n1 = dist.count(Distance(1));
  p.n2 = dist.count(Distance(2));
  p.n3 = dist.count(Distance(3));
  for (const auto& [d, c] : dist.counts) {
    if (c == 0 || d.is_infinite()) continue;
    p.diameter = std::max(p.diameter, d.value());
    p.wiener += d.value() * c;
  }
  return p;
}

std::vector<std::string> violated_lemmas(const Order8Profile& p) {
  std::vector<std::string> out;
  if (!(p.size >= 3 && p.diameter <= 3)) out.push_back(kLemmaNames[0]);
  if (!(p.n1 >= 15 && (p.n1 != 15 || p.size == 3))) out.push_back(kLemmaNames[1]);
  if (p.diameter == 2 && !(p.wiener <= 41 && (p.wiener != 41 || p.size == 3))) out.push_back(kLemmaNames[2]);
  if (p.diameter == 3 && !(p.wiener <= 44 && ((p.wiener == 44) == (p.size == 3)))) out.push_back(kLemmaNames[3]);
  if (p.size >= 4) {
    const bool low = p.diameter <= 2 && p.wiener <= 40;
    const bool one = p.diameter == 3 && p.n3 == 1 && p.wiener <= 41;
    const bool two = p.diameter == 3 && p.n3 == 2 && p.wiener >= 40 && p.wiener <= 42;
    if (!(low || one || two)) out.push_back(kLemmaNames[4]);
  }
  return out;
}

bool LemmaReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.violations == 0; });
}

LemmaReport lemma_suite(std::uint64_t sample_size, std::uint64_t seed, std::size_t exhaustive_max_size) {
  LemmaReport report;
  for (const auto& name : kLemmaNames) report.checks.push_back({name, 0, 0});

  auto check = [&](const Hypergraph& h) {
    const Order8Profile p = order8_profile(h);
    if (p.size == 3 && p.diameter == 3) ++report.size3_diameter3;
    const auto violated = violated_lemmas(p);
    for (auto& c : report.checks) {
      ++c.checked;
      if (std::find(violated.begin(), violated.end(), c.name) != violated.end()) ++c.violations;
    }
    if (!violated.empty() && report.counterexamples.size() < kMaxCounterexamples) {
      report.counterexamples.push_back(h);
    }
  };

  SearchSpec spec;
  spec.n = 8;
  spec.k = 4;
  spec.m_min = 0;
  spec.m_max = exhaustive_max_size;
  spec.require_connected = true;
  const SearchResult exhaustive = enumerate(spec, check);
  report.exhaustive_classes = exhaustive.classes_visited;

  // Random connected samples of size > exhaustive_max_size. Half of the draws
  // come from the sparse range where the bounds are tight.
  std::vector<VertexSet> all;
  for (Vertex a = 0; a < 8; ++a)
    for (Vertex b = a + 1; b < 8; ++b)
      for (Vertex c = b + 1; c < 8; ++c)
        for (Vertex d = c + 1; d < 8; ++d) all.push_back(VertexSet(8, {a, b, c, d}));
  std::mt19937_64 rng(seed);
  const std::size_t lo = exhaustive_max_size + 1;
  std::uniform_int_distribution<std::size_t> sparse(lo, std::max(lo, std::size_t{14}));
  std::uniform_int_distribution<std::size_t> any(lo, all.size());
  std::bernoulli_distribution coin(0.5);
  while (report.random_samples < sample_size && lo <= all.size()) {
    const std::size_t m = coin(rng) ? sparse(rng) : any(rng);
    std::shuffle(all.begin(), all.end(), rng);
    Hypergraph h(8, 4, std::vector<VertexSet>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m)));
    if (!is_connected(h)) continue;
    ++report.random_samples;
    check(h);
  }
  return report;
}

nlohmann::json to_json(const LemmaReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"checked", c.checked}, {"violations", c.violations}});
  }
  nlohmann::json offenders = nlohmann::json::array();
  for (const auto& h : report.counterexamples) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : h.edges()) edges.push_back(e.elements());
    offenders.push_back(edges);
  }
  return {{"exhaustive_classes", report.exhaustive_classes},
          {"random_samples", report.random_samples},
          {"size3_diameter3", report.size3_diameter3},
          {"checks", checks},
          {"counterexamples", offenders},
          {"ok", report.ok()}};
}

}  // namespace soltes
