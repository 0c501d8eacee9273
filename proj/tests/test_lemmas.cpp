#include "doctest.h"
#include "soltes/lemmas.hpp"
#include "soltes/search.hpp"

using namespace soltes;

TEST_CASE("three-edge diameter-3 configurations all have W = 44") {
  SearchSpec s;
  s.n = 8;
  s.k = 4;
  s.m_min = 3;
  s.m_max = 3;
  std::uint64_t diameter3 = 0;
  enumerate(s, [&](const Hypergraph& h) {
    const Order8Profile p = order8_profile(h);
    if (p.diameter != 3) return;
    ++diameter3;
    CHECK(p.wiener == 44);
    CHECK((p.n3 == 3 || p.n3 == 4));
  });
  CHECK(diameter3 == 2);
}

TEST_CASE("lemma suite finds no violations") {
  const LemmaReport r = lemma_suite(5000, 1234);
  CHECK(r.ok());
  CHECK(r.random_samples == 5000);
  CHECK(r.exhaustive_classes > 0);
  CHECK(r.size3_diameter3 == 2);
  for (const auto& c : r.checks) CHECK(c.checked == r.exhaustive_classes + r.random_samples);
  CHECK(to_json(r)["ok"] == true);
}

TEST_CASE("the same seed reproduces the report") {
  CHECK(to_json(lemma_suite(500, 9)) == to_json(lemma_suite(500, 9)));
}

TEST_CASE("violated_lemmas flags bad profiles") {
  Order8Profile small;
  small.size = 2;
  small.diameter = 4;
  CHECK_FALSE(violated_lemmas(small).empty());

  Order8Profile fine;
  fine.size = 3;
  fine.diameter = 3;
  fine.n1 = 16;
  fine.n2 = 8;
  fine.n3 = 4;
  fine.wiener = 44;
  CHECK(violated_lemmas(fine).empty());

  Order8Profile heavy = fine;
  heavy.size = 5;
  CHECK(violated_lemmas(heavy).size() == 2);  // W = 44 needs size 3, and no trichotomy branch fits

  Order8Profile sparse;
  sparse.size = 6;
  sparse.diameter = 3;
  sparse.n1 = 20;
  sparse.n2 = 6;
  sparse.n3 = 2;
  sparse.wiener = 38;
  CHECK(violated_lemmas(sparse).size() == 1);
}

TEST_CASE("random sizes above 7 exercise the two-pair branch") {
  const LemmaReport r = lemma_suite(20000, 77);
  CHECK(r.ok());
}
