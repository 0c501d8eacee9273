#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "soltes/hypergraph.hpp"
#include "soltes/weighted_graph.hpp"

namespace soltes {

enum class Variant { kKnits, kGeneralR, kIrregular54, kCycle, kPrism };

/// How the closed intervals of the generalised circulant edge
///   [i-s-r .. i-s-1] u [i .. i+k-2r] u [i+k-2r+s+1 .. i+k-r+s]
/// are read. Taken literally the three blocks hold k+1 vertices.
enum class IntervalConvention {
  kLiteral,              // all three blocks closed as written
  kInclusiveTrimMiddle,  // middle block loses its last vertex, tail block as written
  kHalfOpenMiddle,       // middle block [i, i+k-2r) and tail block shifted down by one
};

std::string_view to_string(Variant v);
std::string_view to_string(IntervalConvention c);
Variant parse_variant(std::string_view text);
IntervalConvention parse_convention(std::string_view text);

struct ConstructionParams {
  Variant variant = Variant::kKnits;
  long long s = 0;
  long long t = 0;
  long long r = 0;
  long long n = 0;
  long long k = 0;
  IntervalConvention convention = IntervalConvention::kHalfOpenMiddle;
};

nlohmann::json to_json(const ConstructionParams& p);
ConstructionParams construction_params_from_json(const nlohmann::json& j);

struct KnitsParams {
  long long s = 0;
  long long t = 0;
};

/// Smallest s with C(s,2) >= n and t = C(s,2) - n. Requires n >= 92.
KnitsParams knits_params(long long n);
ConstructionParams knits_descriptor(long long n);

/// Circulant k-uniform hypergraph of order n with
/// e_i = {i, i+2s+k-1} u {i+s+1, ..., i+s+k-2} (mod n), k = n - (t+2s+1).
Hypergraph knits(long long n);

/// Unordered pairs at distance >= 2 in H - v.
std::size_t knits_nonadjacency_count(const Hypergraph& h, Vertex v);

/// Fills in n = C(s,2) - (2r-1)t - r^2 + 1 and k = C(s,2) - 2rt - 2s - r^2
/// after checking r >= 1 and 0 <= t < s - C(r+1,2).
ConstructionParams general_r_params(long long s, long long t, long long r, IntervalConvention c);

/// Throws ErrorCode::kBadConvention if an edge does not have exactly k vertices.
Hypergraph general_r(long long s, long long t, long long r, IntervalConvention c);

/// The 9-uniform hypergraph on Z_54 with edges
/// {a, a+1, a+2, a+3, a+4, a+5, a+7, a+16, a+18} for even a.
Hypergraph irregular54();

/// C_n as a 2-uniform hypergraph. Requires n >= 3.
Hypergraph cycle_graph(long long n);

/// Offset c such that shifting every vertex of `a` by c (mod n) gives `b`.
std::optional<Vertex> rotation_offset(const Hypergraph& a, const Hypergraph& b);

using Construction = std::variant<Hypergraph, WeightedGraph>;

/// Builds the object named by `p`, filling in derived fields of `p`.
Construction construct(ConstructionParams& p);

struct ConventionTrial {
  IntervalConvention convention;
  bool uniform = false;            // every edge has k vertices for the sampled parameters
  bool matches_knits = false;      // r = 1, s = 15, t = 0 is a rotation of knits(105)
  bool soltes = false;             // r = 2, s = 15, t in {0, 5} are Soltes
  std::string note;

  bool accepted() const { return uniform && matches_knits && soltes; }
};

struct ConventionResolution {
  std::vector<ConventionTrial> trials;
  std::optional<IntervalConvention> accepted;
};

/// Tries every IntervalConvention against the three oracles above.
ConventionResolution resolve_general_r_convention();

}  // namespace soltes
