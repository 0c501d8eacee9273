#include "soltes/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "soltes/canonical.hpp"
#include "soltes/constructions.hpp"
#include "soltes/error.hpp"
#include "soltes/lemmas.hpp"
#include "soltes/search.hpp"
#include "soltes/verify/oracles.hpp"
#include "soltes/weighted_graph.hpp"

namespace soltes {

namespace {

using Clock = std::chrono::steady_clock;

// Collects failure reasons; a criterion passes when none were recorded.
class Findings {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 6) failures_.push_back(what);
    if (!ok) ++count_;
  }
  void note(const std::string& what) { notes_.push_back(what); }
  bool ok() const { return count_ == 0; }
  std::string text() const {
    std::ostringstream out;
    const auto& items = ok() ? notes_ : failures_;
    for (std::size_t i = 0; i < items.size(); ++i) out << (i ? "; " : "") << items[i];
    if (count_ > failures_.size()) out << "; ... " << count_ - failures_.size() << " more";
    return out.str();
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
  std::size_t count_ = 0;
};

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

void irregular_example(Findings& f) {
  const auto start = Clock::now();
  const Hypergraph h = irregular54();
  const SoltesReport r = soltes_report(h);
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  f.require(r.verdict, "verdict false");
  f.require(r.wiener == Distance(2349), "W(H) != 2349");
  for (const auto& v : r.per_vertex) {
    f.require(v.wiener_after_deletion == Distance(2349), "W(H - " + std::to_string(v.label) + ") != 2349");
  }
  f.require(elapsed < 1.0, "runtime " + seconds_text(elapsed) + " exceeds 1 s");
  f.note("W = 2349 before and after each of 54 deletions in " + seconds_text(elapsed));
}

void knits_family(Findings& f) {
  const auto start = Clock::now();
  for (long long n = 92; n <= 140; ++n) {
    const Hypergraph h = knits(n);
    const SoltesReport r = soltes_report(h);
    const std::string tag = "knits(" + std::to_string(n) + ")";
    f.require(r.verdict, tag + " is not Soltes");
    f.require(r.wiener == Distance(static_cast<std::uint64_t>(n * (n - 1) / 2)), tag + " W != C(n,2)");
    for (Vertex v = 0; v < h.order(); ++v) {
      f.require(knits_nonadjacency_count(h, v) == static_cast<std::size_t>(n - 1),
                tag + " non-adjacent pairs after deleting " + std::to_string(v) + " != n - 1");
    }
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  f.require(elapsed < 120.0, "runtime " + seconds_text(elapsed) + " exceeds 2 min");
  f.note("49 orders, each with W = C(n,2) and n - 1 non-adjacent pairs per deletion, in " + seconds_text(elapsed));
}

void weighted_prism(Findings& f) {
  const auto start = Clock::now();
  f.require(prism_rung_weight(20) == Rational(3), "x(20) != 3");
  for (long long k = 20; k <= 40; ++k) {
    const WeightedGraph g = prism_soltes(k);
    const WeightedSoltesReport r = soltes_report(g);
    const std::string tag = "prism(" + std::to_string(k) + ")";
    f.require(r.verdict, tag + " is not Soltes");
    const Rational x = prism_rung_weight(k);
    const Rational closed = Rational(6 * k - 16) + x * Rational((k - 3) * (k - 4));
    for (const auto& v : r.per_vertex) {
      f.require(v.detour_sum == WeightedDistance(closed),
                tag + " detour sum at " + std::to_string(v.label) + " != 6k - 16 + x(k-3)(k-4)");
    }
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  f.require(elapsed < 60.0, "runtime " + seconds_text(elapsed) + " exceeds 1 min");
  f.note("k = 20..40 exact, x(20) = 3, x(40) = " + prism_rung_weight(40).to_string() + ", in " +
         seconds_text(elapsed));
}

void zero_weight_and_integerized(Findings& f) {
  const WeightedGraph c10 = cycle_alternating_01();
  const WeightedSoltesReport r = soltes_report(c10);
  f.require(r.verdict, "alternating 0/1 C10 is not Soltes");
  f.require(oracle::is_soltes(c10), "Floyd-Warshall oracle rejects alternating 0/1 C10");

  const WeightedGraph prism = prism_soltes(21);
  const WeightedGraph scaled = integerize(prism);
  mpz_class common = 0;
  bool integral = true;
  for (const auto& e : scaled.edges()) {
    integral = integral && e.weight.is_integer();
    common = gcd(common, e.weight.raw().get_num());
  }
  f.require(integral, "integerized prism(21) has a non-integer weight");
  f.require(common == 1, "integerized prism(21) weights have gcd " + common.get_str());
  const bool before = soltes_report(prism).verdict;
  const bool after = soltes_report(scaled).verdict;
  f.require(before == after && after, "integerizing prism(21) changed the verdict");
  f.note("C10 W = " + (r.wiener.is_finite() ? r.wiener.value().to_string() : std::string("inf")) +
         "; prism(21) rung weight " + prism_rung_weight(21).to_string() + " scaled to gcd-1 integers");
}

void small_cycles(Findings& f) {
  const auto start = Clock::now();
  const SoltesReport c11 = soltes_report(cycle_graph(11));
  f.require(c11.verdict, "C11 is not Soltes");
  f.require(c11.wiener == Distance(165), "W(C11) != 165");
  for (long long n = 3; n <= 10; ++n) {
    f.require(!soltes_report(cycle_graph(n)).verdict, "C" + std::to_string(n) + " reported Soltes");
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  f.require(elapsed < 1.0, "runtime " + seconds_text(elapsed) + " exceeds 1 s");
  f.note("C11 Soltes with W = 165; C3..C10 not; " + seconds_text(elapsed));
}

std::string run_search(Findings& f, std::size_t n, std::size_t k, std::size_t m_max, std::size_t partitions,
                       double limit_seconds) {
  SearchSpec spec;
  spec.n = n;
  spec.k = k;
  spec.m_min = 0;
  spec.m_max = m_max;
  spec.partitions = partitions;
  const SearchResult r = search_soltes(spec);
  const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ",m<=" + std::to_string(m_max) + ")";
  f.require(r.status == SearchStatus::kComplete, tag + " did not complete");
  f.require(r.witnesses.empty(), tag + " found " + std::to_string(r.witnesses.size()) + " witnesses");
  f.require(r.wall_seconds <= limit_seconds, tag + " took " + seconds_text(r.wall_seconds));
  return tag + ": " + std::to_string(r.classes_visited) + " classes, 0 witnesses, " + seconds_text(r.wall_seconds);
}

void exhaustive_small(Findings& f, std::size_t partitions) {
  const std::string a = run_search(f, 7, 3, 10, partitions, 1800);
  const std::string b = run_search(f, 8, 4, 6, partitions, 1800);
  f.note(a + "; " + b);
}

void order8_bounds(Findings& f, const AcceptanceOptions& o) {
  const LemmaReport r = lemma_suite(o.lemma_samples, o.seed, 5);
  f.require(r.random_samples >= o.lemma_samples, "too few random samples");
  for (const auto& c : r.checks) {
    f.require(c.violations == 0, c.name + ": " + std::to_string(c.violations) + " violations");
  }
  f.note(std::to_string(r.exhaustive_classes) + " classes of size <= 5 and " + std::to_string(r.random_samples) +
         " random samples, no violations");
}

void structural_identities(Findings& f, const AcceptanceOptions& o) {
  oracle::Rng rng(o.seed);
  for (std::uint64_t i = 0; i < o.identity_samples; ++i) {
    const Hypergraph h = oracle::random_connected_hypergraph(rng, 12);
    const DistanceMatrix d = distance_matrix(h);
    const Distance w = wiener(d);
    Distance sigma_total(0);
    for (Vertex v = 0; v < h.order(); ++v) {
      const Distance sigma = transmission(d, v);
      sigma_total += sigma;
      const Distance after = wiener(delete_vertex(h, v));
      const auto reference = oracle::wiener(oracle::remove_vertex(h, v));
      f.require(after == (reference ? Distance(*reference) : Distance::infinite()),
                "W(H - v) disagrees with the Floyd-Warshall oracle");
      const Distance detour = detour_sum(h, v);
      if (after.is_finite()) {
        f.require(w.value() - sigma.value() + detour.value() == after.value(), "vertex-deletion identity fails");
      } else {
        f.require(detour.is_infinite(), "finite detour sum for a disconnecting deletion");
      }
    }
    f.require(sigma_total.value() == 2 * w.value(), "sum of transmissions != 2W");
    const auto reference = oracle::wiener(h);
    f.require(reference && Distance(*reference) == w, "W disagrees with the Floyd-Warshall oracle");
  }

  for (std::uint64_t i = 0; i < o.relabel_pairs; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 2 * n)(rng);
    const Hypergraph h = oracle::random_hypergraph(rng, n, k, m);
    const auto perm = oracle::random_permutation(rng, n);
    f.require(canonical_code(h) == canonical_code(relabel(h, perm)), "canonical code changed under relabeling");
  }

  std::size_t specs = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t k = 2; k <= n; ++k) {
      for (bool connected : {false, true}) {
        SearchSpec spec;
        spec.n = n;
        spec.k = k;
        spec.m_min = 0;
        spec.m_max = 0;
        for (std::size_t c = 0, top = 1; c < k; ++c) top = top * (n - c) / (c + 1), spec.m_max = top;
        spec.require_connected = connected;
        const SearchResult r = enumerate(spec);
        const auto expected = oracle::class_counts(n, k, connected);
        f.require(r.classes_by_size == expected, "enumerate counts differ from the oracle for n=" +
                                                     std::to_string(n) + ", k=" + std::to_string(k) +
                                                     (connected ? " (connected)" : ""));
        ++specs;
      }
    }
  }
  f.note(std::to_string(o.identity_samples) + " random connected hypergraphs, " + std::to_string(o.relabel_pairs) +
         " relabeling pairs, " + std::to_string(specs) + " enumeration specs against the oracle");
}

void general_r_convention(Findings& f) {
  const ConventionResolution res = resolve_general_r_convention();
  for (const auto& t : res.trials) {
    f.note(std::string(to_string(t.convention)) + ": " + (t.accepted() ? "accepted" : t.note));
  }
  f.require(res.accepted.has_value(), "no interval convention reproduces knits(105) and gives Soltes r = 2 outputs");
  if (res.accepted) f.note("resolved convention " + std::string(to_string(*res.accepted)));
}

void extended_uniform(Findings& f, std::size_t partitions) {
  f.note(run_search(f, 9, 5, 6, partitions, 1e9));
}

void extended_graphs(Findings& f, std::size_t partitions, std::size_t max_order) {
  std::vector<std::string> parts;
  for (std::size_t n = 3; n <= max_order; ++n) {
    parts.push_back(run_search(f, n, 2, n * (n - 1) / 2, partitions, 1e9));
  }
  for (const auto& p : parts) f.note(p);
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o, const CriterionCallback& on_result) {
  struct Entry {
    int id;
    const char* name;
    bool gating;
    std::function<void(Findings&)> body;
  };
  std::vector<Entry> entries{
      {1, "irregular 54-vertex 9-uniform example", true, irregular_example},
      {2, "knits family, n = 92..140", true, knits_family},
      {3, "weighted prism, k = 20..40", true, weighted_prism},
      {4, "zero-weight C10 and integerized prism", true, zero_weight_and_integerized},
      {5, "C11 is the smallest Soltes cycle", true, small_cycles},
      {6, "exhaustive small uniform cases", true, [&](Findings& f) { exhaustive_small(f, o.partitions); }},
      {7, "order-8 4-uniform distance bounds", true, [&](Findings& f) { order8_bounds(f, o); }},
      {8, "structural identities", true, [&](Findings& f) { structural_identities(f, o); }},
      {9, "general-r interval convention", true, general_r_convention},
  };
  std::string sweep_name;
  if (o.extended) {
    entries.push_back({10, "extended: 5-uniform order 9, m <= 6", false,
                       [&](Findings& f) { extended_uniform(f, o.partitions); }});
    sweep_name = "extended: graph sweep, order <= " + std::to_string(o.graph_sweep_order);
    entries.push_back({11, sweep_name.c_str(), false,
                       [&](Findings& f) { extended_graphs(f, o.partitions, o.graph_sweep_order); }});
  }

  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    r.gating = e.gating;
    Findings f;
    const auto start = Clock::now();
    try {
      e.body(f);
    } catch (const std::exception& ex) {
      f.require(false, std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    r.passed = f.ok();
    r.detail = f.text();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

bool all_gating_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed || !r.gating; });
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << seconds_text(r.seconds) << ")";
  if (!r.gating) out << " [non-gating]";
  if (!r.detail.empty()) out << "\n        " << r.detail;
  return out.str();
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"gating", r.gating},
          {"detail", r.detail}, {"seconds", r.seconds}};
}

}  // namespace soltes
