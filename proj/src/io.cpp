#include "webcalc/io.hpp"

#include <sstream>

#include "json.hpp"

namespace webcalc {

namespace {

using nlohmann::json;

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

// Where a field is written, for messages about its value.
std::string field_position(const std::string& text, const std::string& key) {
  const auto at = text.find("\"" + key + "\"");
  return position(text, at == std::string::npos ? 0 : at);
}

class Reader {
 public:
  Reader(const std::string& text, const char* what) : text_(text) {
    try {
      doc_ = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string(what) + " " + position(text, e.byte) +
                       ": malformed JSON: " + e.what());
    }
    if (!doc_.is_object()) {
      throw ParseError(std::string(what) + " 1:1: expected a JSON object");
    }
    what_ = what;
  }

  void allow_only(std::initializer_list<const char*> keys) {
    for (auto& [key, value] : doc_.items()) {
      bool known = false;
      for (const char* k : keys) known = known || key == k;
      if (!known) fail(key, "unknown field \"" + key + "\"");
    }
  }

  [[noreturn]] void fail(const std::string& key, const std::string& why) const {
    throw ParseError(what_ + " " + field_position(text_, key) + ": " + why);
  }

  const json& require(const std::string& key) const {
    auto it = doc_.find(key);
    if (it == doc_.end()) {
      throw ParseError(what_ + " 1:1: missing field \"" + key + "\"");
    }
    return *it;
  }

  bool has(const std::string& key) const { return doc_.contains(key); }

  std::vector<Vertex> strings(const std::string& key) const {
    const json& v = require(key);
    if (!v.is_array()) fail(key, "\"" + key + "\" must be an array of strings");
    std::vector<Vertex> out;
    for (auto& item : v) {
      if (!item.is_string()) {
        fail(key, "\"" + key + "\" must contain only strings");
      }
      out.push_back(item.get<std::string>());
    }
    return out;
  }

  std::vector<Edge> pairs(const std::string& key) const {
    const json& v = require(key);
    if (!v.is_array()) fail(key, "\"" + key + "\" must be an array of pairs");
    std::vector<Edge> out;
    for (auto& item : v) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
          !item[1].is_string()) {
        fail(key, "each entry of \"" + key +
                      "\" must be a pair of strings, got " + item.dump());
      }
      out.push_back({item[0].get<std::string>(), item[1].get<std::string>()});
    }
    return out;
  }

  std::vector<std::vector<Vertex>> sequences(const std::string& key) const {
    const json& v = require(key);
    if (!v.is_array()) fail(key, "\"" + key + "\" must be an array");
    std::vector<std::vector<Vertex>> out;
    for (auto& item : v) {
      if (!item.is_array() || item.empty()) {
        fail(key, "each entry of \"" + key + "\" must be a nonempty array");
      }
      std::vector<Vertex> seq;
      for (auto& x : item) {
        if (!x.is_string()) fail(key, "vertex ids must be strings");
        seq.push_back(x.get<std::string>());
      }
      out.push_back(std::move(seq));
    }
    return out;
  }

  const json& doc() const { return doc_; }

 private:
  const std::string& text_;
  std::string what_;
  json doc_;
};

json vertex_list(const VertexSet& s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

json edge_list(const EdgeSet& edges) {
  json out = json::array();
  for (auto& [a, b] : edges) out.push_back({a, b});
  return out;
}

json path_json(const Path& p) { return json(p.vertices()); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

WebDocument parse_web(const std::string& text, RepairMode mode) {
  Reader r(text, "web");
  r.allow_only({"vertices", "edges", "A", "B", "name", "seed"});
  WebDocument doc;
  if (r.has("name")) {
    if (!r.doc()["name"].is_string()) r.fail("name", "\"name\" must be a string");
    doc.metadata.name = r.doc()["name"].get<std::string>();
  }
  if (r.has("seed")) {
    if (!r.doc()["seed"].is_number_unsigned()) {
      r.fail("seed", "\"seed\" must be a nonnegative integer");
    }
    doc.metadata.seed = r.doc()["seed"].get<std::uint64_t>();
  }
  auto vertices = r.strings("vertices");
  auto edges = r.pairs("edges");
  auto sources = r.strings("A");
  auto sinks = r.strings("B");
  try {
    doc.built = make_web(std::move(vertices), std::move(edges),
                         std::move(sources), std::move(sinks), mode);
  } catch (const InputError& e) {
    throw ParseError(std::string("web: ") + e.what());
  }
  return doc;
}

std::string emit_web(const Web& web, const WebMetadata& metadata) {
  json j;
  j["vertices"] = vertex_list(web.vertices());
  j["edges"] = edge_list(web.edges());
  j["A"] = vertex_list(web.sources());
  j["B"] = vertex_list(web.sinks());
  if (metadata.name) j["name"] = *metadata.name;
  if (metadata.seed) j["seed"] = *metadata.seed;
  return dump(j);
}

BipartiteGraph parse_bipartite(const std::string& text) {
  Reader r(text, "bipartite graph");
  r.allow_only({"left", "right", "edges", "name"});
  BipartiteGraph g;
  for (auto& v : r.strings("left")) {
    if (!g.left.insert(v).second) r.fail("left", "duplicate left vertex " + v);
  }
  for (auto& v : r.strings("right")) {
    if (!g.right.insert(v).second) r.fail("right", "duplicate right vertex " + v);
  }
  for (auto& e : r.pairs("edges")) g.edges.insert(e);
  try {
    g.validate();
  } catch (const InputError& e) {
    throw ParseError(std::string("bipartite graph: ") + e.what());
  }
  return g;
}

std::string emit_bipartite(const BipartiteGraph& graph) {
  json j;
  j["left"] = vertex_list(graph.left);
  j["right"] = vertex_list(graph.right);
  j["edges"] = edge_list(graph.edges);
  return dump(j);
}

std::string emit_menger(const MengerStructure& s) {
  json j;
  j["nu"] = s.paths.size();
  json paths = json::array();
  for (auto& p : s.paths.paths()) paths.push_back(path_json(p));
  j["paths"] = paths;
  j["separator"] = vertex_list(s.separator);
  json choice = json::array();
  for (auto& [p, v] : s.choice) {
    choice.push_back({{"path", path_json(p)}, {"vertex", v}});
  }
  j["choice"] = choice;
  return dump(j);
}

MengerStructure parse_menger(const std::string& text) {
  Reader r(text, "menger certificate");
  r.allow_only({"nu", "paths", "separator", "choice"});
  MengerStructure s;
  std::vector<Path> paths;
  try {
    for (auto& seq : r.sequences("paths")) paths.emplace_back(std::move(seq));
    s.paths = Warp(std::move(paths));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    r.fail("paths", e.what());
  }
  for (auto& v : r.strings("separator")) s.separator.insert(v);
  const json& choice = r.require("choice");
  if (!choice.is_array()) r.fail("choice", "\"choice\" must be an array");
  for (auto& item : choice) {
    if (!item.is_object() || !item.contains("path") ||
        !item.contains("vertex") || !item["vertex"].is_string() ||
        !item["path"].is_array() || item["path"].empty()) {
      r.fail("choice", "each choice needs a \"path\" array and a \"vertex\"");
    }
    std::vector<Vertex> seq;
    for (auto& x : item["path"]) {
      if (!x.is_string()) r.fail("choice", "vertex ids must be strings");
      seq.push_back(x.get<std::string>());
    }
    try {
      s.choice.emplace(Path(std::move(seq)), item["vertex"].get<std::string>());
    } catch (const Error& e) {
      r.fail("choice", e.what());
    }
  }
  return s;
}

std::string emit_konig(const KonigResult& result) {
  json j;
  j["size"] = result.matching.size();
  j["matching"] = edge_list(result.matching);
  j["cover"] = vertex_list(result.cover);
  json choice = json::array();
  for (auto& [e, v] : result.choice) {
    choice.push_back({{"edge", {e.first, e.second}}, {"vertex", v}});
  }
  j["choice"] = choice;
  return dump(j);
}

KonigResult parse_konig(const std::string& text) {
  Reader r(text, "konig certificate");
  r.allow_only({"size", "matching", "cover", "choice"});
  KonigResult result;
  for (auto& e : r.pairs("matching")) result.matching.insert(e);
  for (auto& v : r.strings("cover")) result.cover.insert(v);
  const json& choice = r.require("choice");
  if (!choice.is_array()) r.fail("choice", "\"choice\" must be an array");
  for (auto& item : choice) {
    if (!item.is_object() || !item.contains("edge") ||
        !item.contains("vertex") || !item["vertex"].is_string() ||
        !item["edge"].is_array() || item["edge"].size() != 2 ||
        !item["edge"][0].is_string() || !item["edge"][1].is_string()) {
      r.fail("choice", "each choice needs an \"edge\" pair and a \"vertex\"");
    }
    result.choice.emplace(Edge{item["edge"][0].get<std::string>(),
                               item["edge"][1].get<std::string>()},
                          item["vertex"].get<std::string>());
  }
  return result;
}

Web random_web(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError("random_web: edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Vertex> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  VertexSet sources;
  VertexSet sinks;
  for (auto& v : names) {
    const double u = rng.uniform();
    if (u < 0.3) {
      sources.insert(v);
    } else if (u < 0.6) {
      sinks.insert(v);
    }
  }
  EdgeSet edges;
  for (auto& x : names) {
    for (auto& y : names) {
      if (x != y && rng.chance(p)) edges.insert({x, y});
    }
  }
  return make_web(VertexSet(names.begin(), names.end()), edges, sources,
                  sinks);
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Web& web, const DotHighlight& highlight) {
  std::ostringstream out;
  out << "digraph web {\n  rankdir=LR;\n";
  if (!highlight.title.empty()) out << "  label=" << quoted(highlight.title) << ";\n";
  for (auto& v : web.vertices()) {
    std::vector<std::string> attrs;
    if (web.sources().contains(v) && web.sinks().contains(v)) {
      attrs.push_back("shape=doublecircle");
    } else if (web.sources().contains(v)) {
      attrs.push_back("shape=invtriangle");
    } else if (web.sinks().contains(v)) {
      attrs.push_back("shape=triangle");
    }
    if (highlight.vertices.contains(v)) {
      attrs.push_back("style=filled");
      attrs.push_back("fillcolor=gold");
    }
    out << "  " << quoted(v);
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) {
        out << (i ? ", " : "") << attrs[i];
      }
      out << "]";
    }
    out << ";\n";
  }
  for (auto& [a, b] : web.edges()) {
    out << "  " << quoted(a) << " -> " << quoted(b);
    if (highlight.edges.contains({a, b})) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace webcalc
