#include "doctest.h"
#include "helpers.hpp"
#include "webcalc/io.hpp"
#include "webcalc/menger.hpp"
#include "webcalc/oracle.hpp"
#include "webcalc/separation.hpp"

using namespace testing;

TEST_CASE("Menger structure of the chain") {
  const MengerStructure s = menger_structure(chain());
  CHECK(s.paths == W({P({"a", "x", "b"})}));
  CHECK(s.separator == VertexSet{"a"});
  CHECK(s.choice == std::map<Path, Vertex>{{P({"a", "x", "b"}), "a"}});
  CHECK(menger_certificate_check(chain(), s));
}

TEST_CASE("two disjoint chains") {
  const Web web = web_of({{"a1", "x1"}, {"x1", "b1"}, {"a2", "x2"}, {"x2", "b2"}},
                         {"a1", "a2"}, {"b1", "b2"});
  const MengerStructure s = menger_structure(web);
  CHECK(s.paths.size() == 2);
  CHECK(s.separator.size() == 2);
  CHECK(menger_certificate_check(web, s));
}

TEST_CASE("vertices of A ∩ B are singleton paths in the separator") {
  const Web web = web_of({{"a", "b"}}, {"a", "v"}, {"b", "v"});
  const MengerStructure s = menger_structure(web);
  CHECK(s.paths.contains(P({"v"})));
  CHECK(s.separator.contains("v"));
}

TEST_CASE("certificate check rejects broken structures") {
  MengerStructure s = menger_structure(diamond());
  CHECK(menger_certificate_check(diamond(), s));

  MengerStructure leaky = s;
  const Path p = leaky.paths.paths().front();
  leaky.choice[p] = p.vertices()[1];
  leaky.separator = {p.vertices()[1]};
  std::string why;
  CHECK_FALSE(menger_certificate_check(diamond(), leaky, &why));
  CHECK_FALSE(why.empty());

  const Web two = complete_2x2();
  MengerStructure t = menger_structure(two);
  REQUIRE(t.paths.size() == 2);
  auto it = t.choice.begin();
  const Vertex shared = it->second;
  (++it)->second = shared;
  CHECK_FALSE(menger_certificate_check(two, t));
}

TEST_CASE("blocking vertices separate for a maximum warp") {
  const Warp y = strongly_maximal_warp(diamond());
  const auto bl = blocking_vertices(diamond(), y);
  VertexSet sep;
  for (auto& [path, v] : bl) {
    CHECK(path.contains(v));
    sep.insert(v);
  }
  CHECK(is_separating(diamond(), sep, {"a"}, {"b"}));
}

TEST_CASE("linkage and hindrance") {
  CHECK(linkage(chain()) == W({P({"a", "x", "b"})}));
  CHECK_FALSE(linkage(bottleneck()));
  CHECK(is_hindered(bottleneck()));
  CHECK_FALSE(is_hindered(complete_2x2()));
  CHECK(linkage(complete_2x2())->size() == 2);
  CHECK_FALSE(is_hindered(web_of({}, {}, {"b"})));
}

TEST_CASE("safe_link") {
  CHECK(safe_link(chain(), "a") == P({"a", "x", "b"}));
  const Path p = safe_link(complete_2x2(), "a1");
  CHECK(p.initial() == "a1");
  CHECK_FALSE(is_hindered(delete_web(complete_2x2(), p.vertex_set())));
  CHECK_THROWS_AS(safe_link(bottleneck(), "a1"), PreconditionError);
  CHECK_THROWS_AS(safe_link(chain(), "x"), PreconditionError);
}

TEST_CASE("Menger min-max on random webs with 8 vertices") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Web web = random_web(8, 0.3, seed);
    const MengerStructure s = menger_structure(web);
    CHECK(menger_certificate_check(web, s));
    CHECK(s.paths.size() == oracle::brute_nu(web));
    CHECK(s.paths.size() == brute_sigma(web, web.sources(), web.sinks()));
  }
}
