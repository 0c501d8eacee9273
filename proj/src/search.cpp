#include "soltes/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "soltes/error.hpp"
#include "soltes/hypergraph_io.hpp"

namespace soltes {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxSearchOrder = 64;
constexpr std::uint64_t kMaxCandidateEdges = std::uint64_t{1} << 20;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::uint64_t{1} << 62)) return r;  // large enough to be rejected
  }
  return r;
}

Mask bit(std::size_t v) { return Mask{1} << v; }
Mask all_vertices(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

// --- mask-level distance helpers for small orders --------------------------

void build_rows(std::span<const Mask> edges, std::size_t n, Mask removed, std::vector<Mask>& rows) {
  rows.assign(n, 0);
  for (Mask e : edges) {
    if (e & removed) continue;
    for (Mask b = e; b; b &= b - 1) rows[std::countr_zero(b)] |= e;
  }
  for (std::size_t v = 0; v < n; ++v) rows[v] &= ~bit(v);
}

// Wiener index of the 2-section restricted to `alive`; nullopt if disconnected.
std::optional<std::uint64_t> small_wiener(const std::vector<Mask>& rows, Mask alive) {
  std::uint64_t total = 0;
  for (Mask sources = alive; sources; sources &= sources - 1) {
    const auto s = static_cast<std::size_t>(std::countr_zero(sources));
    Mask seen = bit(s);
    Mask frontier = seen;
    for (std::uint64_t level = 1; frontier; ++level) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
      next &= alive & ~seen;
      total += level * static_cast<std::uint64_t>(std::popcount(next));
      seen |= next;
      frontier = next;
    }
    if (seen != alive) return std::nullopt;
  }
  return total / 2;
}

bool small_connected(const std::vector<Mask>& rows, Mask alive) {
  if (alive == 0) return true;
  Mask seen = alive & (~alive + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

// Components of the 2-section, isolated vertices counted individually.
std::size_t component_count(std::span<const Mask> edges, std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (Mask e : edges) {
    const auto first = find(static_cast<std::size_t>(std::countr_zero(e)));
    for (Mask b = e & (e - 1); b; b &= b - 1) {
      auto r = find(static_cast<std::size_t>(std::countr_zero(b)));
      if (r != first) {
        parent[r] = first;
        --components;
      }
    }
  }
  return components;
}

Hypergraph to_hypergraph(std::span<const Mask> edges, std::size_t n, std::size_t k) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (Mask e : edges) {
    VertexSet s(n);
    s.words()[0] = e;
    sets.push_back(std::move(s));
  }
  return Hypergraph(n, k, std::move(sets));
}

std::vector<Mask> all_k_subsets(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= bit(i);
    out.push_back(m);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

CanonicalLabeling label(std::span<const Mask> edges, std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> lists;
  lists.reserve(edges.size());
  for (Mask e : edges) {
    std::vector<Vertex> members;
    members.reserve(k);
    for (Mask b = e; b; b &= b - 1) members.push_back(static_cast<Vertex>(std::countr_zero(b)));
    lists.push_back(std::move(members));
  }
  return canonical_labeling(n, k, lists);
}

// --- shard-level machinery --------------------------------------------------

struct SharedBudget {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  Clock::time_point start = Clock::now();
};

/// Receives each class visited by one shard.
class Sink {
 public:
  virtual ~Sink() = default;
  virtual void accept(std::span<const Mask> edges) = 0;
};

struct ShardTotals {
  std::uint64_t classes = 0;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> by_size;
  PruneStats prune;
};

class Shard {
 public:
  Shard(const SearchSpec& spec, const std::vector<Mask>& candidates, bool component_cut,
        std::size_t shard, std::size_t split_depth, SharedBudget& budget, Sink& sink)
      : spec_(spec),
        candidates_(candidates),
        component_cut_(component_cut),
        shard_(shard),
        split_depth_(split_depth),
        budget_(budget),
        sink_(sink) {
    totals_.by_size.assign(spec.m_max + 1, 0);
  }

  void run() {
    std::vector<Mask> edges;
    const CanonicalLabeling root = label(edges, spec_.n, spec_.k);
    expand(edges, root.code, 0, shard_ == 0);
  }

  ShardTotals& totals() { return totals_; }

 private:
  bool over_budget() {
    if (budget_.exhausted.load(std::memory_order_relaxed)) return true;
    const std::uint64_t count = budget_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    bool out = spec_.node_cap != 0 && count > spec_.node_cap;
    if (!out && spec_.time_limit_seconds > 0 && (count & 255) == 0) {
      std::chrono::duration<double> elapsed = Clock::now() - budget_.start;
      out = elapsed.count() > spec_.time_limit_seconds;
    }
    if (out) budget_.exhausted.store(true, std::memory_order_relaxed);
    return out;
  }

  bool passes_filters(std::span<const Mask> edges) {
    const std::size_t m = edges.size();
    if (m < spec_.m_min || m > spec_.m_max) return false;
    const Mask alive = all_vertices(spec_.n);
    build_rows(edges, spec_.n, 0, rows_);
    if (spec_.require_connected && !small_connected(rows_, alive)) return false;
    if (spec_.require_all_deletions_connected) {
      for (std::size_t v = 0; v < spec_.n; ++v) {
        build_rows(edges, spec_.n, bit(v), deletion_rows_);
        if (!small_connected(deletion_rows_, alive & ~bit(v))) return false;
      }
    }
    if (spec_.wiener_bounds) {
      auto w = small_wiener(rows_, alive);
      if (!w || *w < spec_.wiener_bounds->first || *w > spec_.wiener_bounds->second) return false;
    }
    return true;
  }

  // `owned`: whether this node's subtree belongs to this shard (below the
  // split depth); nodes above the split are reported by shard 0 only.
  void expand(std::vector<Mask>& edges, const CanonicalCode& code, std::size_t depth, bool owned) {
    if (depth == split_depth_ && spec_.partitions > 1) {
      owned = (split_index_++ % spec_.partitions) == shard_;
      if (!owned) return;
    }
    if (owned) {
      if (over_budget()) return;
      ++totals_.nodes;
      if (passes_filters(edges)) {
        ++totals_.classes;
        ++totals_.by_size[edges.size()];
        sink_.accept(edges);
      }
    }
    if (edges.size() >= spec_.m_max || budget_.exhausted.load(std::memory_order_relaxed)) return;

    const std::size_t remaining_after_child = spec_.m_max - edges.size() - 1;
    std::unordered_map<CanonicalCode, bool, CanonicalCodeHash> seen;
    for (Mask candidate : candidates_) {
      if (std::find(edges.begin(), edges.end(), candidate) != edges.end()) continue;
      edges.push_back(candidate);
      bool keep = true;
      if (component_cut_) {
        const std::size_t components = component_count(edges, spec_.n);
        if (components - 1 > remaining_after_child * (spec_.k - 1)) {
          keep = false;
          if (owned) ++totals_.prune.component_cuts;
        }
      }
      if (keep) {
        CanonicalLabeling child = label(edges, spec_.n, spec_.k);
        auto [it, inserted] = seen.try_emplace(child.code, false);
        if (inserted) {
          bool accepted = child.top_edge == edges.size() - 1;
          if (!accepted) {
            std::vector<Mask> parent = edges;
            parent.erase(parent.begin() + static_cast<std::ptrdiff_t>(child.top_edge));
            accepted = label(parent, spec_.n, spec_.k).code == code;
          }
          it->second = accepted;
          if (accepted) expand(edges, child.code, depth + 1, owned);
        }
      }
      edges.pop_back();
      if (budget_.exhausted.load(std::memory_order_relaxed)) return;
    }
  }

  const SearchSpec& spec_;
  const std::vector<Mask>& candidates_;
  bool component_cut_;
  std::size_t shard_;
  std::size_t split_depth_;
  SharedBudget& budget_;
  Sink& sink_;
  std::uint64_t split_index_ = 0;
  ShardTotals totals_;
  std::vector<Mask> rows_;
  std::vector<Mask> deletion_rows_;
};

// Runs the shards and folds their totals into `result`. `make_sink(i)`
// returns the sink for shard i.
template <typename MakeSink>
void run_shards(const SearchSpec& spec, bool component_cut, SearchResult& result, MakeSink&& make_sink) {
  spec.validate();
  result.spec = spec;
  const auto started = Clock::now();
  const std::vector<Mask> candidates = all_k_subsets(spec.n, spec.k);
  const std::size_t split_depth = std::min<std::size_t>(spec.m_max, 3);
  SharedBudget budget;
  std::vector<std::unique_ptr<Shard>> shards;
  for (std::size_t i = 0; i < spec.partitions; ++i) {
    shards.push_back(std::make_unique<Shard>(spec, candidates, component_cut, i, split_depth,
                                             budget, make_sink(i)));
  }
  if (spec.partitions == 1) {
    shards[0]->run();
  } else {
    std::vector<std::jthread> threads;
    for (auto& s : shards) threads.emplace_back([&s] { s->run(); });
  }
  result.classes_by_size.assign(spec.m_max + 1, 0);
  for (auto& s : shards) {
    const ShardTotals& t = s->totals();
    result.classes_visited += t.classes;
    result.nodes_expanded += t.nodes;
    for (std::size_t m = 0; m < t.by_size.size(); ++m) result.classes_by_size[m] += t.by_size[m];
    result.prune.component_cuts += t.prune.component_cuts;
  }
  result.status = budget.exhausted ? SearchStatus::kExhaustedBudget : SearchStatus::kComplete;
  result.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
}

class VisitorSink : public Sink {
 public:
  VisitorSink(const SearchSpec& spec, const ClassVisitor& visitor) : spec_(spec), visitor_(visitor) {}
  void accept(std::span<const Mask> edges) override {
    if (visitor_) visitor_(to_hypergraph(edges, spec_.n, spec_.k));
  }

 private:
  const SearchSpec& spec_;
  const ClassVisitor& visitor_;
};

class SoltesSink : public Sink {
 public:
  explicit SoltesSink(const SearchSpec& spec) : spec_(spec) {}

  void accept(std::span<const Mask> edges) override {
    if (!spec_.pruning) {
      ++stats.full_reports;
      Hypergraph h = to_hypergraph(edges, spec_.n, spec_.k);
      if (soltes_report(h).verdict) witnesses.push_back(std::move(h));
      return;
    }
    const Mask alive = all_vertices(spec_.n);
    build_rows(edges, spec_.n, 0, rows_);
    const auto w = small_wiener(rows_, alive);
    if (!w) {
      ++stats.disconnected;
      return;
    }
    if (spec_.deletion_wiener_upper_bound && *w > *spec_.deletion_wiener_upper_bound) {
      ++stats.wiener_bound;
      return;
    }
    for (std::size_t v = 0; v < spec_.n; ++v) {
      build_rows(edges, spec_.n, bit(v), deletion_rows_[v]);
      if (!small_connected(deletion_rows_[v], alive & ~bit(v))) {
        ++stats.deletion_disconnected;
        return;
      }
    }
    for (std::size_t v = 0; v < spec_.n; ++v) {
      if (small_wiener(deletion_rows_[v], alive & ~bit(v)) != w) {
        ++stats.delta_nonzero;
        return;
      }
    }
    ++stats.full_reports;
    Hypergraph h = to_hypergraph(edges, spec_.n, spec_.k);
    if (!soltes_report(h).verdict) {
      throw Error(ErrorCode::kInvariantViolated, "fast Soltes filter disagrees with soltes_report");
    }
    witnesses.push_back(std::move(h));
  }

  std::vector<Hypergraph> witnesses;
  PruneStats stats;

 private:
  const SearchSpec& spec_;
  std::vector<Mask> rows_;
  std::vector<std::vector<Mask>> deletion_rows_ = std::vector<std::vector<Mask>>(spec_.n);
};

}  // namespace

void SearchSpec::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kParamOutOfRange, "search spec: " + msg); };
  if (k < 2 || k > n) fail("need 2 <= k <= n");
  if (n > kMaxSearchOrder) fail("order above " + std::to_string(kMaxSearchOrder));
  const std::uint64_t possible = binomial(n, k);
  if (possible > kMaxCandidateEdges) fail("too many candidate edges");
  if (m_min > m_max || m_max > possible) fail("need m_min <= m_max <= C(n,k)");
  if (partitions < 1) fail("partitions must be positive");
  if (wiener_bounds && wiener_bounds->first > wiener_bounds->second) fail("empty wiener_bounds");
  if (time_limit_seconds < 0) fail("negative time limit");
}

std::string_view to_string(SearchStatus s) {
  return s == SearchStatus::kComplete ? "complete" : "exhausted_budget";
}

nlohmann::json to_json(const SearchSpec& spec) {
  nlohmann::json j{{"n", spec.n},
                   {"k", spec.k},
                   {"m_min", spec.m_min},
                   {"m_max", spec.m_max},
                   {"require_connected", spec.require_connected},
                   {"require_all_deletions_connected", spec.require_all_deletions_connected},
                   {"partitions", spec.partitions},
                   {"pruning", spec.pruning},
                   {"node_cap", spec.node_cap},
                   {"time_limit_seconds", spec.time_limit_seconds}};
  j["wiener_bounds"] = spec.wiener_bounds
                           ? nlohmann::json::array({spec.wiener_bounds->first, spec.wiener_bounds->second})
                           : nlohmann::json(nullptr);
  j["deletion_wiener_upper_bound"] =
      spec.deletion_wiener_upper_bound ? nlohmann::json(*spec.deletion_wiener_upper_bound) : nlohmann::json(nullptr);
  return j;
}

SearchSpec search_spec_from_json(const nlohmann::json& j) {
  SearchSpec spec;
  try {
    spec.n = j.at("n").get<std::size_t>();
    spec.k = j.at("k").get<std::size_t>();
    spec.m_min = j.value("m_min", std::size_t{0});
    spec.m_max = j.contains("m_max") ? j.at("m_max").get<std::size_t>()
                                     : static_cast<std::size_t>(binomial(spec.n, spec.k));
    spec.require_connected = j.value("require_connected", true);
    spec.require_all_deletions_connected = j.value("require_all_deletions_connected", false);
    spec.partitions = j.value("partitions", std::size_t{1});
    spec.pruning = j.value("pruning", true);
    spec.node_cap = j.value("node_cap", std::uint64_t{0});
    spec.time_limit_seconds = j.value("time_limit_seconds", 0.0);
    if (j.contains("wiener_bounds") && !j.at("wiener_bounds").is_null()) {
      const auto& b = j.at("wiener_bounds");
      if (!b.is_array() || b.size() != 2) throw Error(ErrorCode::kParse, "wiener_bounds must be [lo, hi]");
      spec.wiener_bounds = std::make_pair(b[0].get<std::uint64_t>(), b[1].get<std::uint64_t>());
    }
    if (j.contains("deletion_wiener_upper_bound") && !j.at("deletion_wiener_upper_bound").is_null()) {
      spec.deletion_wiener_upper_bound = j.at("deletion_wiener_upper_bound").get<std::uint64_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("search spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

nlohmann::json summary_json(const SearchResult& r) {
  return {{"type", "summary"},
          {"spec", to_json(r.spec)},
          {"status", to_string(r.status)},
          {"classes_visited", r.classes_visited},
          {"classes_by_size", r.classes_by_size},
          {"nodes_expanded", r.nodes_expanded},
          {"witness_count", r.witnesses.size()},
          {"prune",
           {{"component_cuts", r.prune.component_cuts},
            {"disconnected", r.prune.disconnected},
            {"deletion_disconnected", r.prune.deletion_disconnected},
            {"wiener_bound", r.prune.wiener_bound},
            {"delta_nonzero", r.prune.delta_nonzero},
            {"full_reports", r.prune.full_reports}}},
          {"wall_seconds", r.wall_seconds}};
}

nlohmann::json witness_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.edges()) edges.push_back(e.elements());
  return {{"type", "witness"},
          {"n", h.order()},
          {"k", h.uniformity()},
          {"edges", edges},
          {"canonical_code", canonical_code(h).hex()},
          {"wiener", to_json(wiener(h))}};
}

SearchResult enumerate(const SearchSpec& spec, const ClassVisitor& visitor) {
  SearchResult result;
  std::vector<std::unique_ptr<VisitorSink>> sinks;
  run_shards(spec, spec.require_connected, result, [&](std::size_t) -> Sink& {
    sinks.push_back(std::make_unique<VisitorSink>(spec, visitor));
    return *sinks.back();
  });
  return result;
}

SearchResult search_soltes(const SearchSpec& spec) {
  SearchResult result;
  std::vector<std::unique_ptr<SoltesSink>> sinks;
  run_shards(spec, spec.require_connected || spec.pruning, result, [&](std::size_t) -> Sink& {
    sinks.push_back(std::make_unique<SoltesSink>(spec));
    return *sinks.back();
  });
  std::vector<std::pair<CanonicalCode, Hypergraph>> found;
  for (auto& s : sinks) {
    result.prune.disconnected += s->stats.disconnected;
    result.prune.deletion_disconnected += s->stats.deletion_disconnected;
    result.prune.wiener_bound += s->stats.wiener_bound;
    result.prune.delta_nonzero += s->stats.delta_nonzero;
    result.prune.full_reports += s->stats.full_reports;
    for (auto& h : s->witnesses) {
      CanonicalLabeling lab = canonical_labeling(h);
      found.emplace_back(lab.code, relabel(h, lab.position));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [code, h] : found) result.witnesses.push_back(std::move(h));
  return result;
}

}  // namespace soltes
