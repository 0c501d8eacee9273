#include "doctest.h"
#include "soltes/canonical.hpp"
#include "soltes/constructions.hpp"
#include "soltes/error.hpp"

using namespace soltes;

TEST_CASE("knits parameters") {
  CHECK(knits_params(105).s == 15);
  CHECK(knits_params(105).t == 0);
  CHECK(knits_params(100).t == 5);
  const KnitsParams low = knits_params(92);
  CHECK(low.s == 15);
  CHECK(low.t == 13);
  CHECK(low.t == low.s - 2);
  try {
    knits_params(91);
    FAIL("n = 91 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParamOutOfRange);
  }
  CHECK(knits_descriptor(105).k == 74);
}

TEST_CASE("knits(105)") {
  const Hypergraph h = knits(105);
  CHECK(h.order() == 105);
  CHECK(h.size() == 105);
  for (const auto& e : h.edges()) CHECK(e.size() == 74);
  CHECK(diameter(h) == Distance(1));
  CHECK(wiener(h) == Distance(5460));
  for (Vertex v : {0U, 1U, 50U, 104U}) CHECK(knits_nonadjacency_count(h, v) == 104);
}

TEST_CASE("knits(100) and knits(101) are Soltes") {
  for (long long n : {100LL, 101LL}) {
    const Hypergraph h = knits(n);
    CHECK(soltes_report(h).verdict);
    for (Vertex v = 0; v < h.order(); ++v) CHECK(knits_nonadjacency_count(h, v) == static_cast<std::size_t>(n - 1));
    CHECK(distance_distribution(h).count(Distance(1)) == static_cast<std::uint64_t>(n * (n - 1) / 2));
  }
}

TEST_CASE("general r") {
  const ConstructionParams two = general_r_params(15, 0, 2, IntervalConvention::kHalfOpenMiddle);
  CHECK(two.n == 102);
  CHECK(two.k == 71);
  const ConstructionParams five = general_r_params(15, 5, 2, IntervalConvention::kHalfOpenMiddle);
  CHECK(five.n == 87);
  CHECK(five.k == 51);
  CHECK_THROWS_AS(general_r_params(15, 0, 0, IntervalConvention::kHalfOpenMiddle), Error);
  CHECK_THROWS_AS(general_r_params(15, 12, 2, IntervalConvention::kHalfOpenMiddle), Error);

  const Hypergraph r1 = general_r(15, 0, 1, IntervalConvention::kHalfOpenMiddle);
  CHECK(rotation_offset(r1, knits(105)).has_value());
  CHECK(canonical_code(r1) == canonical_code(knits(105)));
  CHECK(soltes_report(general_r(15, 0, 2, IntervalConvention::kHalfOpenMiddle)).verdict);
  CHECK(soltes_report(general_r(15, 5, 2, IntervalConvention::kHalfOpenMiddle)).verdict);
  CHECK(soltes_report(general_r(15, 3, 3, IntervalConvention::kHalfOpenMiddle)).verdict);

  try {
    general_r(15, 0, 2, IntervalConvention::kLiteral);
    FAIL("literal convention produced a uniform hypergraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBadConvention);
  }
  CHECK_FALSE(soltes_report(general_r(15, 0, 2, IntervalConvention::kInclusiveTrimMiddle)).verdict);
}

TEST_CASE("convention resolution") {
  const ConventionResolution res = resolve_general_r_convention();
  REQUIRE(res.accepted.has_value());
  CHECK(*res.accepted == IntervalConvention::kHalfOpenMiddle);
  CHECK(res.trials.size() == 3);
}

TEST_CASE("irregular54") {
  const Hypergraph h = irregular54();
  CHECK(h.order() == 54);
  CHECK(h.uniformity() == 9);
  CHECK(h.size() == 27);
  for (Vertex v = 0; v < 54; ++v) CHECK(degree(h, v) == (v % 2 ? 4U : 5U));
  const SoltesReport r = soltes_report(h);
  CHECK(r.verdict);
  CHECK(r.wiener == Distance(2349));
}

TEST_CASE("cycles") {
  CHECK(soltes_report(cycle_graph(11)).verdict);
  CHECK_FALSE(soltes_report(cycle_graph(10)).verdict);
  CHECK_FALSE(soltes_report(cycle_graph(3)).verdict);
  CHECK_THROWS_AS(cycle_graph(2), Error);
}

TEST_CASE("descriptors") {
  ConstructionParams p;
  p.variant = Variant::kKnits;
  p.n = 100;
  const Construction built = construct(p);
  CHECK(std::holds_alternative<Hypergraph>(built));
  CHECK(p.s == 15);
  CHECK(p.t == 5);
  CHECK(p.k == 100 - 5 - 31);
  const ConstructionParams back = construction_params_from_json(to_json(p));
  CHECK(to_json(back) == to_json(p));

  ConstructionParams prism;
  prism.variant = Variant::kPrism;
  prism.k = 20;
  CHECK(std::get<WeightedGraph>(construct(prism)).order() == 80);
  CHECK(prism.n == 80);

  CHECK_THROWS_AS(parse_variant("torus"), Error);
  CHECK(parse_convention("half_open_middle") == IntervalConvention::kHalfOpenMiddle);
}
