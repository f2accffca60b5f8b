#include "doctest.h"
#include "helpers.hpp"
#include "webcalc/lemmas.hpp"
#include "webcalc/io.hpp"
#include "webcalc/oracle.hpp"

using namespace testing;

TEST_CASE("brute_nu on basic shapes") {
  CHECK(oracle::brute_nu(chain()) == 1);
  CHECK(oracle::brute_nu(diamond()) == 1);
  const Web three = web_of({{"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}},
                           {"a1", "a2", "a3"}, {"b1", "b2", "b3"});
  CHECK(oracle::brute_nu(three) == 3);
}

TEST_CASE("enumerate_waves") {
  const auto single = oracle::enumerate_waves(web_of({{"a", "b"}}, {"a"}, {"b"}));
  CHECK(single == std::vector<Warp>{W({P({"a"})}), W({P({"a", "b"})})});
  const auto waves = oracle::enumerate_waves(chain());
  CHECK(waves == std::vector<Warp>{W({P({"a"})}), W({P({"a", "x"})}),
                                   W({P({"a", "x", "b"})})});
  CHECK(oracle::enumerate_waves(web_of({}, {"a"}, {"a"})) ==
        std::vector<Warp>{W({P({"a"})})});
}

TEST_CASE("has_hindrance") {
  CHECK(oracle::has_hindrance(bottleneck()));
  CHECK_FALSE(oracle::has_hindrance(complete_2x2()));
}

TEST_CASE("budgets are enforced") {
  oracle::EnumerationBudget tiny;
  tiny.max_cases = 2;
  CHECK_THROWS_AS(oracle::enumerate_waves(complete_2x2(), tiny), BudgetError);
  oracle::EnumerationBudget narrow;
  narrow.max_vertices = 2;
  CHECK_THROWS_AS(oracle::brute_nu(chain(), narrow), BudgetError);
}

TEST_CASE("small-web corpus") {
  // 9022 of these have exactly four vertices, a count reproduced by a
  // separate enumeration script.
  CHECK(oracle::all_small_webs(4).size() == 9249);
  CHECK(oracle::all_small_webs(1).size() == 4);
  CHECK(oracle::all_bipartite_graphs(2, 2).size() == 16);
}

TEST_CASE("matching and cover oracles") {
  BipartiteGraph g{{"m1", "m2"}, {"w1"}, {{"m1", "w1"}, {"m2", "w1"}}};
  CHECK(oracle::max_matching_size(g) == 1);
  CHECK(oracle::min_cover_size(g) == 1);
}

TEST_CASE("lemma suite passes on small webs") {
  for (const Web& web : {chain(), diamond(), bottleneck(), complete_2x2()}) {
    const lemmas::Report r = lemmas::lemma_suite(web);
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
}

TEST_CASE("lemma suite on the empty web passes vacuously") {
  const lemmas::Report r = lemmas::lemma_suite(Web{});
  CHECK(r.passed());
}

TEST_CASE("a corrupted claimed wave yields a failure witness") {
  lemmas::Options options;
  options.families = {"waves"};
  options.claimed_waves = {W({P({"a", "x"})})};
  const lemmas::Report r = lemmas::lemma_suite(diamond(), options);
  CHECK_FALSE(r.passed());
  bool found = false;
  for (auto& result : r.results) {
    if (result.name == "claimed-waves-are-waves") {
      found = true;
      CHECK(result.failures == 1);
      CHECK(result.witness.find("(a,x)") != std::string::npos);
    }
  }
  CHECK(found);
}

TEST_CASE("lemma suite reports are deterministic") {
  const Web web = random_web(6, 0.35, 3);
  CHECK(lemmas::lemma_suite(web).to_text() == lemmas::lemma_suite(web).to_text());
}
