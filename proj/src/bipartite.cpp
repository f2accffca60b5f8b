#include "webcalc/bipartite.hpp"

#include "webcalc/menger.hpp"
#include "webcalc/separation.hpp"

namespace webcalc {

void BipartiteGraph::validate() const {
  if (intersects(left, right)) {
    throw InputError("bipartite sides share " +
                     to_string(set_intersection(left, right)));
  }
  for (auto& [m, w] : edges) {
    if (!left.contains(m) || !right.contains(w)) {
      throw InputError("edge (" + m + "," + w +
                       ") does not join the left side to the right side");
    }
  }
}

Vertex out_copy(const Vertex& v) { return "m:" + v; }
Vertex in_copy(const Vertex& v) { return "w:" + v; }

Conversion to_bipartite(const Web& web) {
  Conversion c;
  for (auto& v : web.vertices()) {
    if (!web.sinks().contains(v)) {
      c.m_map[v] = out_copy(v);
      c.delta.left.insert(out_copy(v));
    }
    if (!web.sources().contains(v)) {
      c.w_map[v] = in_copy(v);
      c.delta.right.insert(in_copy(v));
    }
    if (!web.sources().contains(v) && !web.sinks().contains(v)) {
      c.delta.edges.insert({out_copy(v), in_copy(v)});
    }
  }
  for (auto& [x, y] : web.edges()) {
    c.delta.edges.insert({out_copy(x), in_copy(y)});
  }
  return c;
}

EdgeSet warp_to_matching(const Web& web, const Warp& warp) {
  EdgeSet j;
  VertexSet covered;
  for (auto& [u, v] : warp.edges()) {
    j.insert({out_copy(u), in_copy(v)});
    covered.insert(u);
    covered.insert(v);
  }
  for (auto& v : web.vertices()) {
    if (!covered.contains(v) && !web.sources().contains(v) &&
        !web.sinks().contains(v)) {
      j.insert({out_copy(v), in_copy(v)});
    }
  }
  return j;
}

Contraction contract_matching(const BipartiteGraph& graph, const EdgeSet& j) {
  Contraction c;
  for (auto& [m, w] : j) {
    if (!graph.edges.contains({m, w})) {
      throw InputError("matching edge (" + m + "," + w +
                       ") is not an edge of the graph");
    }
    if (c.node_of_left.contains(m) || c.node_of_right.contains(w)) {
      throw InputError("edges of J share an endpoint at (" + m + "," + w +
                       ")");
    }
    const int id = static_cast<int>(c.nodes.size());
    c.nodes.push_back({"[" + m + "," + w + "]", m, w});
    c.node_of_left[m] = id;
    c.node_of_right[w] = id;
  }
  for (auto& m : graph.left) {
    if (c.node_of_left.contains(m)) continue;
    const int id = static_cast<int>(c.nodes.size());
    c.nodes.push_back({m, m, std::nullopt});
    c.node_of_left[m] = id;
    c.sources.push_back(id);
  }
  for (auto& w : graph.right) {
    if (c.node_of_right.contains(w)) continue;
    const int id = static_cast<int>(c.nodes.size());
    c.nodes.push_back({w, std::nullopt, w});
    c.node_of_right[w] = id;
    c.sinks.push_back(id);
  }
  c.out.assign(c.nodes.size(), {});
  for (auto& [m, w] : graph.edges) {
    const int from = c.node_of_left.at(m);
    const int to = c.node_of_right.at(w);
    if (from != to) c.out[from].push_back(to);
  }
  return c;
}

Web matching_to_web(const BipartiteGraph& graph, const EdgeSet& j) {
  graph.validate();
  const Contraction c = contract_matching(graph, j);
  VertexSet vertices;
  EdgeSet edges;
  VertexSet sources;
  VertexSet sinks;
  for (auto& node : c.nodes) vertices.insert(node.id);
  for (std::size_t from = 0; from < c.out.size(); ++from) {
    for (int to : c.out[from]) edges.insert({c.nodes[from].id, c.nodes[to].id});
  }
  for (int s : c.sources) sources.insert(c.nodes[s].id);
  for (int t : c.sinks) sinks.insert(c.nodes[t].id);
  return make_web(vertices, edges, sources, sinks);
}

VertexSet neighbourhood(const BipartiteGraph& graph, const VertexSet& left) {
  VertexSet out;
  for (auto& [m, w] : graph.edges) {
    if (left.contains(m)) out.insert(w);
  }
  return out;
}

KonigResult konig(const BipartiteGraph& graph) {
  graph.validate();
  const Web web = make_web(set_union(graph.left, graph.right), graph.edges,
                           graph.left, graph.right);
  const MengerStructure s = menger_structure(web);
  KonigResult result;
  for (auto& [path, chosen] : s.choice) {
    const Edge e{path.initial(), path.terminal()};
    result.matching.insert(e);
    result.cover.insert(chosen);
    result.choice[e] = chosen;
  }
  return result;
}

bool konig_certificate_check(const BipartiteGraph& graph,
                             const KonigResult& result, std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  VertexSet used;
  for (auto& e : result.matching) {
    if (!graph.edges.contains(e)) {
      return fail("matching edge (" + e.first + "," + e.second +
                  ") is not in the graph");
    }
    if (!used.insert(e.first).second || !used.insert(e.second).second) {
      return fail("matching edges share an endpoint at (" + e.first + "," +
                  e.second + ")");
    }
  }
  for (auto& e : graph.edges) {
    if (!result.cover.contains(e.first) && !result.cover.contains(e.second)) {
      return fail("edge (" + e.first + "," + e.second + ") is not covered");
    }
  }
  if (result.choice.size() != result.matching.size()) {
    return fail("choice is not defined on every matching edge");
  }
  VertexSet chosen;
  for (auto& [e, v] : result.choice) {
    if (!result.matching.contains(e)) {
      return fail("choice names a non-matching edge");
    }
    if (v != e.first && v != e.second) {
      return fail("choice for (" + e.first + "," + e.second +
                  ") is not an endpoint");
    }
    if (!chosen.insert(v).second) return fail("choice repeats " + v);
  }
  if (chosen != result.cover) {
    return fail("cover is not the image of the choice");
  }
  return true;
}

HallResult hall_check(const BipartiteGraph& graph) {
  const KonigResult k = konig(graph);
  HallResult result;
  result.matching = k.matching;
  result.matchable = k.matching.size() == graph.left.size();
  if (!result.matchable) {
    result.deficient = set_difference(graph.left, k.cover);
    result.neighbours = neighbourhood(graph, result.deficient);
    if (result.neighbours.size() >= result.deficient.size()) {
      throw InternalError("hall_check: deficient set is not deficient");
    }
  }
  return result;
}

}  // namespace webcalc
