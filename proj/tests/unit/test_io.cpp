#include "doctest.h"
#include "helpers.hpp"
#include "webcalc/io.hpp"

using namespace testing;

namespace {

const char* kChainText =
    R"({"vertices":["a","x","b"],"edges":[["a","x"],["x","b"]],"A":["a"],"B":["b"]})";

const char* kChainCanonical = R"({
  "A": [
    "a"
  ],
  "B": [
    "b"
  ],
  "edges": [
    [
      "a",
      "x"
    ],
    [
      "x",
      "b"
    ]
  ],
  "vertices": [
    "a",
    "b",
    "x"
  ]
}
)";

}  // namespace

TEST_CASE("parse the chain") {
  const WebDocument doc = parse_web(kChainText);
  CHECK(doc.built.web == chain());
  CHECK(doc.built.repairs.empty());
  CHECK_FALSE(doc.metadata.name);
}

TEST_CASE("emit is canonical and round-trips") {
  CHECK(emit_web(chain()) == kChainCanonical);
  CHECK(parse_web(emit_web(chain())).built.web == chain());
  WebMetadata meta;
  meta.name = "chain";
  meta.seed = 9;
  const WebDocument back = parse_web(emit_web(chain(), meta));
  CHECK(back.metadata.name == "chain");
  CHECK(back.metadata.seed == 9u);
  CHECK(emit_web(back.built.web, back.metadata) == emit_web(chain(), meta));
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_web(R"({"vertices":["a"],"edges":[["a","q"]],"A":[],"B":[]})");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("q") != std::string::npos);
  }
  try {
    parse_web("{\n  \"vertices\": [],\n  \"edges\": [],\n  \"A\": [],\n  \"B\": [],\n  \"colour\": 1\n}");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("6:3") != std::string::npos);
    CHECK(std::string(e.what()).find("colour") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_web("{\"vertices\": [1]}"), ParseError);
  CHECK_THROWS_AS(parse_web("[1, 2"), ParseError);
  CHECK_THROWS_AS(parse_web(R"({"vertices":[],"edges":[],"A":[]})"), ParseError);
}

TEST_CASE("strict parsing refuses repairs") {
  const char* text = R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]],"A":["a"],"B":["b"]})";
  CHECK_NOTHROW(parse_web(text));
  CHECK_THROWS_AS(parse_web(text, RepairMode::kStrict), ParseError);
}

TEST_CASE("random_web") {
  const Web one = random_web(1, 0.0, 4);
  CHECK(one.vertices().size() == 1);
  CHECK(one.edges().empty());
  CHECK(one.sources().empty());
  CHECK(random_web(9, 0.4, 17) == random_web(9, 0.4, 17));
  CHECK_THROWS_AS(random_web(3, 1.5, 1), PreconditionError);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Web w = random_web(6, 0.3, seed);
    CHECK_FALSE(intersects(w.sources(), w.sinks()));
  }
}

TEST_CASE("pinned random web") {
  CHECK(emit_web(random_web(8, 0.3, 7)) == R"({
  "A": [],
  "B": [],
  "edges": [
    [
      "v0",
      "v1"
    ],
    [
      "v1",
      "v7"
    ],
    [
      "v2",
      "v0"
    ],
    [
      "v2",
      "v1"
    ],
    [
      "v2",
      "v3"
    ],
    [
      "v4",
      "v1"
    ],
    [
      "v5",
      "v1"
    ],
    [
      "v6",
      "v0"
    ],
    [
      "v7",
      "v0"
    ],
    [
      "v7",
      "v1"
    ],
    [
      "v7",
      "v3"
    ]
  ],
  "vertices": [
    "v0",
    "v1",
    "v2",
    "v3",
    "v4",
    "v5",
    "v6",
    "v7"
  ]
}
)");
}

TEST_CASE("menger and konig documents round-trip") {
  const MengerStructure s = menger_structure(complete_2x2());
  CHECK(parse_menger(emit_menger(s)) == s);
  BipartiteGraph g{{"m1", "m2"}, {"w1", "w2"}, {{"m1", "w1"}, {"m2", "w1"}, {"m2", "w2"}}};
  CHECK(parse_bipartite(emit_bipartite(g)) == g);
  const KonigResult k = konig(g);
  const KonigResult back = parse_konig(emit_konig(k));
  CHECK(back.matching == k.matching);
  CHECK(back.cover == k.cover);
  CHECK(back.choice == k.choice);
  CHECK_THROWS_AS(parse_bipartite(R"({"left":["v"],"right":["v"],"edges":[]})"), ParseError);
}

TEST_CASE("dot rendering") {
  DotHighlight h;
  h.edges = {{"a", "x"}};
  h.vertices = {"x"};
  const std::string dot = to_dot(chain(), h);
  CHECK(dot.find("\"a\" [shape=invtriangle]") != std::string::npos);
  CHECK(dot.find("\"b\" [shape=triangle]") != std::string::npos);
  CHECK(dot.find("\"x\" [style=filled, fillcolor=gold]") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"x\" [color=red, penwidth=2]") != std::string::npos);
  CHECK(dot.find("\"x\" -> \"b\";") != std::string::npos);
}
