#include "doctest.h"
#include "helpers.hpp"
#include "webcalc/oracle.hpp"
#include "webcalc/separation.hpp"
#include "webcalc/waves.hpp"

using namespace testing;

TEST_CASE("is_wave on the chain and the diamond") {
  CHECK(is_wave(chain(), Warp::singletons({"a"})));
  CHECK(is_wave(chain(), W({P({"a", "x"})})));
  CHECK(is_wave(chain(), W({P({"a", "x", "b"})})));
  CHECK_FALSE(is_wave(diamond(), W({P({"a", "x"})})));
  CHECK(is_wave(diamond(), W({P({"a", "x", "b"})})));
  // Not A-starting.
  CHECK_FALSE(is_wave(chain(), W({P({"x", "b"})})));
}

TEST_CASE("hindrances") {
  CHECK(is_hindrance(bottleneck(), W({P({"a1", "c"})})));
  CHECK_FALSE(is_hindrance(bottleneck(), Warp::singletons({"a1", "a2"})));
  // a2 only reaches a dead end, so trimming removes it and nothing hinders.
  const Web trimmed = web_of({{"a1", "b"}, {"a2", "x"}}, {"a1", "a2"}, {"b"});
  CHECK(trimmed.sources() == VertexSet{"a1"});
  CHECK_FALSE(oracle::has_hindrance(trimmed));
}

TEST_CASE("trim_wave drops inessential singletons") {
  // q is a source whose only route to B passes through x.
  const Web web = web_of({{"a", "x"}, {"q", "x"}, {"x", "b"}}, {"a", "q"}, {"b"});
  const Wave w = make_wave(web, W({P({"a", "x"}), P({"q"})}));
  const Wave t = trim_wave(w);
  CHECK(t.warp == W({P({"a", "x"})}));
  CHECK(trim_wave(t) == t);
  CHECK(trim_wave(trivial_wave(chain())) == trivial_wave(chain()));
}

TEST_CASE("make_wave rejects non-waves") {
  CHECK_THROWS_AS(make_wave(diamond(), W({P({"a", "x"})})), PreconditionError);
}

TEST_CASE("wave_arrow") {
  const Wave t = trivial_wave(chain());
  const Wave v = make_wave(chain(), W({P({"a", "x"})}));
  CHECK(wave_arrow(v, v) == v);
  const Wave r = wave_arrow(t, v);
  CHECK(is_subset(wave_roof(v), wave_roof(r)));
}

TEST_CASE("wave_star along a longer chain") {
  const Web web = web_of({{"a", "x"}, {"x", "y"}, {"y", "b"}}, {"a"}, {"b"});
  const Wave u = make_wave(web, W({P({"a", "x"})}));
  const Web q = wave_quotient(u);
  CHECK(q.sources() == VertexSet{"x"});
  CHECK(wave_star(u, W({P({"x", "y"})})).warp == W({P({"a", "x", "y"})}));
  CHECK(wave_star(u, Warp::singletons({"x"})).warp == u.warp);
}

TEST_CASE("compare_waves orders by roofed sets") {
  const Wave small = make_wave(chain(), W({P({"a", "x"})}));
  const Wave big = make_wave(chain(), W({P({"a", "x", "b"})}));
  CHECK(compare_waves(small, big).relation == WaveRelation::kLess);
  CHECK(compare_waves(big, small).relation == WaveRelation::kGreater);
  CHECK(compare_waves(big, big).relation == WaveRelation::kEquivalent);
}

TEST_CASE("maximal wave of the chain runs to B") {
  const Wave m = maximal_wave(chain());
  CHECK(m.warp == W({P({"a", "x", "b"})}));
  CHECK(wave_roof(m) == VertexSet{"a", "x", "b"});
  CHECK(oracle::enumerate_waves(wave_quotient(m)).size() == 1);
}

TEST_CASE("looseness") {
  CHECK_FALSE(is_loose(chain()));
  CHECK_FALSE(is_loose(web_of({{"a", "b"}}, {"a"}, {"b"})));
  // Without edges only the trivial wave exists.
  CHECK(is_loose(web_of({}, {"a"}, {"a"})));
  CHECK(is_loose(web_of({}, {}, {"b"})));
}

TEST_CASE("maximal wave roofs every enumerated wave on small webs") {
  for (const Web& web : oracle::all_small_webs(3)) {
    const Wave m = maximal_wave(web);
    REQUIRE(is_wave(web, m.warp));
    const VertexSet rf = wave_roof(m);
    for (auto& w : oracle::enumerate_waves(web)) {
      CHECK(is_subset(roofed(web, w.terminals()), rf));
    }
    CHECK(is_loose(web) == (oracle::enumerate_waves(web).size() == 1));
  }
}

TEST_CASE("trimmed maximal wave of the bottleneck is a hindrance") {
  const Wave m = maximal_wave(bottleneck());
  CHECK(m.warp.size() == 2);
  CHECK_FALSE(is_hindrance(bottleneck(), m.warp));
  CHECK(is_hindrance(bottleneck(), trim_wave(m).warp));
}
