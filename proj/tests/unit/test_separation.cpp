#include "doctest.h"
#include "helpers.hpp"
#include "webcalc/io.hpp"
#include "webcalc/oracle.hpp"
#include "webcalc/separation.hpp"

using namespace testing;

TEST_CASE("is_separating on small shapes") {
  CHECK(is_separating(chain(), {"x"}, {"a"}, {"b"}));
  CHECK_FALSE(is_separating(chain(), {}, {"a"}, {"a"}));
  CHECK_FALSE(is_separating(diamond(), {"x"}, {"a"}, {"b"}));
  CHECK(is_separating(diamond(), {"x", "y"}, {"a"}, {"b"}));
}

TEST_CASE("roof of a chain vertex") {
  const RoofReport r = roof(chain(), {"x"});
  CHECK(r.roofed == VertexSet{"a", "x"});
  CHECK(r.essential == VertexSet{"x"});
  CHECK(r.strict_roof == VertexSet{"a"});
  CHECK(r.inessential.empty());
}

TEST_CASE("a source behind another separator vertex is inessential") {
  const RoofReport r = roof(chain(), {"x", "a"});
  CHECK(r.essential == VertexSet{"x"});
  CHECK(r.inessential == VertexSet{"a"});
  CHECK(r.roofed == VertexSet{"a", "x"});
}

TEST_CASE("B roofs everything and is essential to itself") {
  for (const Web& web : {chain(), diamond(), bottleneck()}) {
    const RoofReport r = roof(web, web.sinks());
    CHECK(r.roofed == web.vertices());
    CHECK(r.essential == web.sinks());
  }
}

TEST_CASE("roof agrees with the path-enumerating oracle on every small web") {
  for (const Web& web : oracle::all_small_webs(3)) {
    const std::vector<Vertex> vs(web.vertices().begin(), web.vertices().end());
    for (std::size_t mask = 0; mask < (std::size_t{1} << vs.size()); ++mask) {
      VertexSet s;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (mask >> i & 1) s.insert(vs[i]);
      }
      CHECK(roofed(web, s) == oracle::roof_of(web, s));
      CHECK(is_separating(web, s, web.sources(), web.sinks()) ==
            oracle::separates(web, s, web.sources(), web.sinks()));
    }
  }
}

TEST_CASE("delete_web") {
  CHECK(delete_web(chain(), {}) == chain());
  const Web cut = delete_web(chain(), {"x"});
  CHECK(cut.vertices() == VertexSet{"a", "b"});
  CHECK(cut.sources().empty());
  CHECK(cut.edges().empty());
}

TEST_CASE("quotient_web") {
  CHECK(quotient_web(chain(), {}) == chain());
  const Web q = quotient_web(chain(), {"x"});
  CHECK(q.vertices() == VertexSet{"x", "b"});
  CHECK(q.sources() == VertexSet{"x"});
  CHECK(q.sinks() == VertexSet{"b"});
  CHECK(q.edges() == EdgeSet{{"x", "b"}});
  CHECK_THROWS_AS(quotient_web(chain(), {"a"}), PreconditionError);
  CHECK_NOTHROW(quotient_over(chain(), {"a"}));
}

TEST_CASE("quotient by a sink agrees with deletion for linkability") {
  for (const Web& web : oracle::all_small_webs(4)) {
    bool bipartite = !intersects(web.sources(), web.sinks());
    for (auto& [u, v] : web.edges()) {
      bipartite = bipartite && web.sources().contains(u) && web.sinks().contains(v);
    }
    if (!bipartite) continue;
    for (auto& b : web.sinks()) {
      // Sources whose every neighbour is b leave with the quotient.
      const VertexSet gone = set_union(strictly_roofed(web, {b}), {b});
      const Web d = delete_web(web, gone);
      const bool stranded = d.sources() != set_difference(web.sources(), gone);
      CHECK(oracle::has_hindrance(quotient_web(web, {b})) ==
            (stranded || oracle::has_hindrance(d)));
    }
  }
}

TEST_CASE("induced_roofed") {
  const Web full = induced_roofed(chain(), chain().vertices());
  CHECK(full.sinks() == essential_part(chain(), chain().vertices()));
  const Web part = induced_roofed(chain(), roofed(chain(), {"x"}));
  CHECK(part.vertices() == VertexSet{"a", "x"});
  CHECK(part.sinks() == VertexSet{"x"});
  CHECK(induced_roofed(part, part.vertices()) == part);
}

TEST_CASE("brute_sigma") {
  CHECK(brute_sigma(chain(), {"a"}, {"b"}) == 1);
  CHECK(brute_sigma(diamond(), {"a"}, {"b"}) == 1);
  const Web two = web_of({{"a1", "b1"}, {"a2", "x"}, {"x", "b2"}}, {"a1", "a2"},
                         {"b1", "b2"});
  CHECK(brute_sigma(two, two.sources(), two.sinks()) == 2);
}

TEST_CASE("deletion-roof identity on random webs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Web web = random_web(7, 0.3, seed);
    const std::vector<Vertex> vs(web.vertices().begin(), web.vertices().end());
    Rng rng(seed);
    for (int k = 0; k < 20; ++k) {
      VertexSet x;
      VertexSet y;
      for (auto& v : vs) {
        if (rng.chance(0.3)) x.insert(v);
        if (rng.chance(0.3)) y.insert(v);
      }
      CHECK(roofed(web, set_union(x, y)) ==
            set_union(x, roofed(delete_web(web, x), set_difference(y, x))));
    }
  }
}
