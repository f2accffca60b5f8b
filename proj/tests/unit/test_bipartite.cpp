#include "doctest.h"
#include "helpers.hpp"
#include "webcalc/bipartite.hpp"
#include "webcalc/oracle.hpp"

using namespace testing;

namespace {

BipartiteGraph graph(VertexSet left, VertexSet right, EdgeSet edges) {
  BipartiteGraph g{std::move(left), std::move(right), std::move(edges)};
  g.validate();
  return g;
}

}  // namespace

TEST_CASE("conversion of the chain") {
  const Conversion c = to_bipartite(chain());
  CHECK(c.delta.left == VertexSet{out_copy("a"), out_copy("x")});
  CHECK(c.delta.right == VertexSet{in_copy("x"), in_copy("b")});
  CHECK(c.delta.edges == EdgeSet{{out_copy("a"), in_copy("x")},
                                 {out_copy("x"), in_copy("b")},
                                 {out_copy("x"), in_copy("x")}});
}

TEST_CASE("conversion of a single edge and side sizes") {
  const Conversion c = to_bipartite(web_of({{"a", "b"}}, {"a"}, {"b"}));
  CHECK(c.delta.edges == EdgeSet{{out_copy("a"), in_copy("b")}});
  for (const Web& web : {chain(), diamond(), bottleneck(), complete_2x2()}) {
    const Conversion d = to_bipartite(web);
    CHECK(d.delta.left.size() == set_difference(web.vertices(), web.sinks()).size());
    CHECK(d.delta.right.size() == set_difference(web.vertices(), web.sources()).size());
  }
}

TEST_CASE("warp_to_matching") {
  const Conversion c = to_bipartite(chain());
  CHECK(warp_to_matching(chain(), Warp{}) == EdgeSet{{out_copy("x"), in_copy("x")}});
  const EdgeSet j = warp_to_matching(chain(), W({P({"a", "x", "b"})}));
  CHECK(j == EdgeSet{{out_copy("a"), in_copy("x")}, {out_copy("x"), in_copy("b")}});
  CHECK(j.size() == c.delta.left.size());
}

TEST_CASE("matching_to_web") {
  const BipartiteGraph g = graph({"m1", "m2"}, {"w1", "w2"}, {{"m1", "w1"}, {"m2", "w1"}, {"m2", "w2"}});
  const Web plain = matching_to_web(g, {});
  CHECK(plain.sources() == g.left);
  CHECK(plain.sinks() == g.right);
  const Web perfect = matching_to_web(g, {{"m1", "w1"}, {"m2", "w2"}});
  CHECK(perfect.sources().empty());
}

TEST_CASE("konig on small graphs") {
  const KonigResult single = konig(graph({"m"}, {"w"}, {{"m", "w"}}));
  CHECK(single.matching.size() == 1);
  CHECK(single.cover.size() == 1);

  const BipartiteGraph path = graph({"m1", "m2"}, {"w1"}, {{"m1", "w1"}, {"m2", "w1"}});
  const KonigResult r = konig(path);
  CHECK(r.matching.size() == 1);
  CHECK(r.cover == VertexSet{"w1"});

  BipartiteGraph k33{{"m1", "m2", "m3"}, {"w1", "w2", "w3"}, {}};
  for (auto& m : k33.left) {
    for (auto& w : k33.right) k33.edges.insert({m, w});
  }
  const KonigResult full = konig(k33);
  CHECK(full.matching.size() == 3);
  CHECK(full.cover.size() == 3);
  CHECK(konig_certificate_check(k33, full));
}

TEST_CASE("konig certificate check catches a broken cover") {
  const BipartiteGraph path = graph({"m1", "m2"}, {"w1"}, {{"m1", "w1"}, {"m2", "w1"}});
  KonigResult r = konig(path);
  r.cover = {"m1"};
  r.choice = {{*r.matching.begin(), "m1"}};
  std::string why;
  CHECK_FALSE(konig_certificate_check(path, r, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("hall_check") {
  CHECK(hall_check(graph({"m1", "m2"}, {"w1", "w2"}, {{"m1", "w1"}, {"m2", "w2"}})).matchable);
  CHECK(hall_check(graph({}, {"w"}, {})).matchable);
  // A finite playboy: m0 knows everyone, m1 and m2 one each.
  const BipartiteGraph playboy =
      graph({"m0", "m1", "m2"}, {"w1", "w2"},
            {{"m0", "w1"}, {"m0", "w2"}, {"m1", "w1"}, {"m2", "w2"}});
  const HallResult h = hall_check(playboy);
  CHECK_FALSE(h.matchable);
  CHECK(h.deficient == VertexSet{"m0", "m1", "m2"});
  CHECK(h.neighbours == VertexSet{"w1", "w2"});
}

TEST_CASE("bipartite graphs reject overlapping sides and stray edges") {
  CHECK_THROWS_AS(graph({"v"}, {"v"}, {}), InputError);
  CHECK_THROWS_AS(graph({"m"}, {"w"}, {{"w", "m"}}), InputError);
}

TEST_CASE("konig agrees with the matching oracle on graphs with sides up to 3") {
  for (std::size_t l = 0; l <= 3; ++l) {
    for (std::size_t r = 0; r <= 3; ++r) {
      for (const BipartiteGraph& g : oracle::all_bipartite_graphs(l, r)) {
        const KonigResult k = konig(g);
        CHECK(konig_certificate_check(g, k));
        CHECK(k.matching.size() == oracle::max_matching_size(g));
        CHECK(k.cover.size() == oracle::min_cover_size(g));
      }
    }
  }
}
