#pragma once

// JSON documents for webs, bipartite graphs and certificates; seeded random
// webs; Graphviz rendering.

#include <cstdint>
#include <optional>
#include <random>

#include "webcalc/alternating.hpp"
#include "webcalc/bipartite.hpp"
#include "webcalc/core.hpp"
#include "webcalc/menger.hpp"
#include "webcalc/waves.hpp"

namespace webcalc {

// Malformed document. The message carries "line:column" context.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

struct WebMetadata {
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
};

struct WebDocument {
  BuiltWeb built;
  WebMetadata metadata;
};

// {"vertices": [...], "edges": [[tail, head], ...], "A": [...], "B": [...]}
// with optional "name" and "seed". Unknown fields are rejected.
WebDocument parse_web(const std::string& text,
                      RepairMode mode = RepairMode::kRepair);
// Canonical form: sorted keys, sorted vertex and edge lists, two-space
// indentation, trailing newline.
std::string emit_web(const Web& web, const WebMetadata& metadata = {});

// {"left": [...], "right": [...], "edges": [[left, right], ...]}
BipartiteGraph parse_bipartite(const std::string& text);
std::string emit_bipartite(const BipartiteGraph& graph);

// Certificates as emitted by the command-line tool, and their parsers.
std::string emit_menger(const MengerStructure& s);
MengerStructure parse_menger(const std::string& text);
std::string emit_konig(const KonigResult& result);
KonigResult parse_konig(const std::string& text);

// The generator behind every random instance: a 64-bit Mersenne twister
// whose doubles take the top 53 bits of a draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  // Uniform on 0..n-1; n must be positive.
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// n vertices v0..v{n-1}; each ordered pair becomes an edge with probability
// p; each vertex is a source with probability 0.3, else a sink with
// probability 0.3/0.7. The result is repaired by make_web.
Web random_web(std::size_t n, double p, std::uint64_t seed);

// Certificate highlighting for the Graphviz rendering.
struct DotHighlight {
  EdgeSet edges;
  VertexSet vertices;
  std::string title;
};

std::string to_dot(const Web& web, const DotHighlight& highlight = {});

}  // namespace webcalc
