#include "soltes/constructions.hpp"

#include <array>

#include "soltes/error.hpp"

namespace soltes {

namespace {

long long choose2(long long s) { return s * (s - 1) / 2; }

Vertex mod(long long x, long long n) { return static_cast<Vertex>(((x % n) + n) % n); }

void add_interval(VertexSet& e, long long lo, long long hi_inclusive, long long n) {
  for (long long x = lo; x <= hi_inclusive; ++x) e.insert(mod(x, n));
}

Hypergraph circulant(long long n, long long k, const std::vector<long long>& base) {
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    VertexSet e(static_cast<std::size_t>(n));
    for (long long offset : base) e.insert(mod(i + offset, n));
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<std::size_t>(n), static_cast<std::size_t>(k), std::move(edges));
}

constexpr std::array<std::pair<Variant, std::string_view>, 5> kVariantNames{{
    {Variant::kKnits, "knits"},
    {Variant::kGeneralR, "general_r"},
    {Variant::kIrregular54, "irregular54"},
    {Variant::kCycle, "cycle"},
    {Variant::kPrism, "prism"},
}};

constexpr std::array<std::pair<IntervalConvention, std::string_view>, 3> kConventionNames{{
    {IntervalConvention::kLiteral, "literal"},
    {IntervalConvention::kInclusiveTrimMiddle, "inclusive_trim_middle"},
    {IntervalConvention::kHalfOpenMiddle, "half_open_middle"},
}};

}  // namespace

std::string_view to_string(Variant v) {
  for (const auto& [value, name] : kVariantNames) {
    if (value == v) return name;
  }
  return "unknown";
}

std::string_view to_string(IntervalConvention c) {
  for (const auto& [value, name] : kConventionNames) {
    if (value == c) return name;
  }
  return "unknown";
}

Variant parse_variant(std::string_view text) {
  for (const auto& [value, name] : kVariantNames) {
    if (name == text) return value;
  }
  throw Error(ErrorCode::kParse, "unknown variant '" + std::string(text) + "'");
}

IntervalConvention parse_convention(std::string_view text) {
  for (const auto& [value, name] : kConventionNames) {
    if (name == text) return value;
  }
  throw Error(ErrorCode::kParse, "unknown convention '" + std::string(text) + "'");
}

nlohmann::json to_json(const ConstructionParams& p) {
  return {{"variant", to_string(p.variant)}, {"s", p.s}, {"t", p.t}, {"r", p.r},
          {"n", p.n}, {"k", p.k}, {"convention", to_string(p.convention)}};
}

ConstructionParams construction_params_from_json(const nlohmann::json& j) {
  ConstructionParams p;
  try {
    p.variant = parse_variant(j.at("variant").get<std::string>());
    p.s = j.value("s", 0LL);
    p.t = j.value("t", 0LL);
    p.r = j.value("r", 0LL);
    p.n = j.value("n", 0LL);
    p.k = j.value("k", 0LL);
    if (j.contains("convention")) p.convention = parse_convention(j.at("convention").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("construction descriptor: ") + e.what());
  }
  return p;
}

KnitsParams knits_params(long long n) {
  if (n < 92) throw Error(ErrorCode::kParamOutOfRange, "knits needs n >= 92, got " + std::to_string(n));
  KnitsParams p;
  p.s = 2;
  while (choose2(p.s) < n) ++p.s;
  p.t = choose2(p.s) - n;
  if (p.t > p.s - 2) throw Error(ErrorCode::kInvariantViolated, "t exceeds s - 2");
  return p;
}

ConstructionParams knits_descriptor(long long n) {
  KnitsParams kp = knits_params(n);
  ConstructionParams p;
  p.variant = Variant::kKnits;
  p.s = kp.s;
  p.t = kp.t;
  p.r = 1;
  p.n = n;
  p.k = n - (kp.t + 2 * kp.s + 1);
  return p;
}

Hypergraph knits(long long n) {
  const ConstructionParams p = knits_descriptor(n);
  const long long s = p.s;
  const long long k = p.k;
  if (2 * (k - 2) < n) throw Error(ErrorCode::kInvariantViolated, "k - 2 < n / 2");
  std::vector<long long> base{0, 2 * s + k - 1};
  for (long long x = s + 1; x <= s + k - 2; ++x) base.push_back(x);
  Hypergraph h = circulant(n, k, base);
  for (const auto& e : h.edges()) {
    if (e.size() != static_cast<std::size_t>(k)) throw Error(ErrorCode::kInvariantViolated, "knits edge size");
  }
  return h;
}

std::size_t knits_nonadjacency_count(const Hypergraph& h, Vertex v) {
  const Hypergraph reduced = delete_vertex(h, v);
  const Adjacency adj = two_section_adjacency(reduced);
  std::size_t count = 0;
  for (Vertex u = 0; u < reduced.order(); ++u) count += reduced.order() - 1 - adj.neighbor_count(u);
  return count / 2;
}

ConstructionParams general_r_params(long long s, long long t, long long r, IntervalConvention c) {
  if (r < 1) throw Error(ErrorCode::kParamOutOfRange, "r must be at least 1");
  if (t < 0 || t >= s - r * (r + 1) / 2) {
    throw Error(ErrorCode::kParamOutOfRange, "need 0 <= t < s - C(r+1,2)");
  }
  ConstructionParams p;
  p.variant = Variant::kGeneralR;
  p.s = s;
  p.t = t;
  p.r = r;
  p.n = choose2(s) - (2 * r - 1) * t - r * r + 1;
  p.k = choose2(s) - 2 * r * t - 2 * s - r * r;
  p.convention = c;
  if (p.k < 2 * r + 1 || p.n <= p.k) {
    throw Error(ErrorCode::kParamOutOfRange, "parameters give n = " + std::to_string(p.n) +
                                                 ", k = " + std::to_string(p.k));
  }
  return p;
}

Hypergraph general_r(long long s, long long t, long long r, IntervalConvention c) {
  const ConstructionParams p = general_r_params(s, t, r, c);
  const long long n = p.n;
  const long long k = p.k;
  std::vector<VertexSet> edges;
  for (long long i = 0; i < n; ++i) {
    VertexSet e(static_cast<std::size_t>(n));
    add_interval(e, i - s - r, i - s - 1, n);
    switch (c) {
      case IntervalConvention::kLiteral:
        add_interval(e, i, i + k - 2 * r, n);
        add_interval(e, i + k - 2 * r + s + 1, i + k - r + s, n);
        break;
      case IntervalConvention::kInclusiveTrimMiddle:
        add_interval(e, i, i + k - 2 * r - 1, n);
        add_interval(e, i + k - 2 * r + s + 1, i + k - r + s, n);
        break;
      case IntervalConvention::kHalfOpenMiddle:
        add_interval(e, i, i + k - 2 * r - 1, n);
        add_interval(e, i + k - 2 * r + s, i + k - r + s - 1, n);
        break;
    }
    if (e.size() != static_cast<std::size_t>(k)) {
      throw Error(ErrorCode::kBadConvention, std::string(to_string(c)) + " gives edges of " +
                                                 std::to_string(e.size()) + " vertices, expected " +
                                                 std::to_string(k));
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<std::size_t>(n), static_cast<std::size_t>(k), std::move(edges));
}

Hypergraph irregular54() {
  constexpr long long kOrder = 54;
  const std::vector<long long> offsets{0, 1, 2, 3, 4, 5, 7, 16, 18};
  std::vector<VertexSet> edges;
  for (long long a = 0; a < kOrder; a += 2) {
    VertexSet e(kOrder);
    for (long long o : offsets) e.insert(mod(a + o, kOrder));
    std::size_t even = 0;
    e.for_each([&](Vertex v) { even += v % 2 == 0; });
    if (e.size() != 9 || even != 5) throw Error(ErrorCode::kInvariantViolated, "irregular54 edge parity");
    edges.push_back(std::move(e));
  }
  Hypergraph h(kOrder, 9, std::move(edges));
  if (h.size() != 27) throw Error(ErrorCode::kInvariantViolated, "irregular54 size");
  return h;
}

Hypergraph cycle_graph(long long n) {
  if (n < 3) throw Error(ErrorCode::kParamOutOfRange, "cycle needs n >= 3, got " + std::to_string(n));
  return circulant(n, 2, {0, 1});
}

std::optional<Vertex> rotation_offset(const Hypergraph& a, const Hypergraph& b) {
  if (a.order() != b.order() || a.uniformity() != b.uniformity() || a.size() != b.size()) {
    return std::nullopt;
  }
  const std::size_t n = a.order();
  for (Vertex c = 0; c < n; ++c) {
    std::vector<VertexSet> shifted;
    shifted.reserve(a.size());
    for (const auto& e : a.edges()) {
      VertexSet moved(n);
      e.for_each([&](Vertex x) { moved.insert(static_cast<Vertex>((x + c) % n)); });
      shifted.push_back(std::move(moved));
    }
    if (Hypergraph(n, a.uniformity(), std::move(shifted)) == b) return c;
  }
  return std::nullopt;
}

Construction construct(ConstructionParams& p) {
  switch (p.variant) {
    case Variant::kKnits: {
      ConstructionParams filled = knits_descriptor(p.n);
      p = filled;
      return knits(p.n);
    }
    case Variant::kGeneralR: {
      ConstructionParams filled = general_r_params(p.s, p.t, p.r, p.convention);
      p = filled;
      return general_r(p.s, p.t, p.r, p.convention);
    }
    case Variant::kIrregular54:
      p.n = 54;
      p.k = 9;
      return irregular54();
    case Variant::kCycle: {
      Hypergraph h = cycle_graph(p.n);
      p.k = 2;
      return h;
    }
    case Variant::kPrism: {
      // For the prism, `k` is the family parameter (order 4k).
      WeightedGraph g = prism_soltes(p.k);
      p.n = 4 * p.k;
      return g;
    }
  }
  throw Error(ErrorCode::kParamOutOfRange, "unknown variant");
}

ConventionResolution resolve_general_r_convention() {
  ConventionResolution out;
  const Hypergraph base = knits(105);
  for (IntervalConvention c : {IntervalConvention::kLiteral, IntervalConvention::kInclusiveTrimMiddle,
                               IntervalConvention::kHalfOpenMiddle}) {
    ConventionTrial trial;
    trial.convention = c;
    try {
      const Hypergraph r1 = general_r(15, 0, 1, c);
      const Hypergraph r2a = general_r(15, 0, 2, c);
      const Hypergraph r2b = general_r(15, 5, 2, c);
      trial.uniform = true;
      trial.matches_knits = rotation_offset(r1, base).has_value();
      trial.soltes = soltes_report(r2a).verdict && soltes_report(r2b).verdict;
      if (!trial.matches_knits) trial.note = "r = 1 is not a rotation of knits(105)";
      else if (!trial.soltes) trial.note = "r = 2 output is not Soltes";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBadConvention) throw;
      trial.note = e.what();
    }
    if (trial.accepted() && !out.accepted) out.accepted = c;
    out.trials.push_back(std::move(trial));
  }
  return out;
}

}  // namespace soltes
