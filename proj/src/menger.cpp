#include "webcalc/menger.hpp"

#include <deque>

#include "webcalc/alternating.hpp"
#include "webcalc/bipartite.hpp"
#include "webcalc/separation.hpp"

namespace webcalc {

std::map<Path, Vertex> blocking_vertices(const Web& web, const Warp& paths,
                                         StepBudget* budget) {
  const Conversion conv = to_bipartite(web);
  const Contraction lambda =
      contract_matching(conv.delta, warp_to_matching(web, paths));
  std::vector<char> seen(lambda.nodes.size(), 0);
  std::deque<int> queue;
  for (int s : lambda.sources) {
    seen[s] = 1;
    queue.push_back(s);
  }
  VertexSet reached;
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    if (budget) budget->spend();
    const auto& data = lambda.nodes[node];
    if (data.left && data.right) {
      reached.insert(data.left->substr(2));
      reached.insert(data.right->substr(2));
    }
    for (int next : lambda.out[node]) {
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::map<Path, Vertex> choice;
  for (auto& p : paths.paths()) {
    Vertex bl = p.initial();
    for (auto& v : p.vertices()) {
      if (reached.contains(v)) bl = v;
    }
    choice.emplace(p, bl);
  }
  return choice;
}

MengerStructure menger_structure(const Web& web, StepBudget* budget) {
  MengerStructure s;
  s.paths = strongly_maximal_warp(web, budget);
  s.choice = blocking_vertices(web, s.paths, budget);
  for (auto& [path, v] : s.choice) s.separator.insert(v);
  if (s.separator.size() != s.paths.size()) {
    throw InternalError("blocking vertices are not distinct");
  }
  return s;
}

bool menger_certificate_check(const Web& web, const MengerStructure& s,
                              std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  if (!is_warp_in(web, s.paths)) return fail("paths are not a warp in the web");
  for (auto& p : s.paths.paths()) {
    if (!web.sources().contains(p.initial()) ||
        !web.sinks().contains(p.terminal())) {
      return fail("path " + p.to_string() + " is not an A-B path");
    }
  }
  if (!is_separating(web, s.separator, web.sources(), web.sinks())) {
    return fail("separator " + to_string(s.separator) +
                " does not separate A from B");
  }
  if (s.separator.size() != s.paths.size()) {
    return fail("separator and path counts differ");
  }
  if (s.choice.size() != s.paths.size()) {
    return fail("choice is not defined on every path");
  }
  VertexSet image;
  for (auto& [path, v] : s.choice) {
    if (!s.paths.contains(path)) {
      return fail("choice names " + path.to_string() + ", not a listed path");
    }
    if (!path.contains(v)) {
      return fail("chosen vertex " + v + " is not on " + path.to_string());
    }
    if (!image.insert(v).second) return fail("choice repeats vertex " + v);
  }
  if (image != s.separator) {
    return fail("separator is not the image of the choice");
  }
  return true;
}

std::optional<Warp> linkage(const Web& web, StepBudget* budget) {
  Warp y = strongly_maximal_warp(web, budget);
  if (y.size() != web.sources().size()) return std::nullopt;
  return y;
}

bool is_hindered(const Web& web) { return !linkage(web).has_value(); }

Path safe_link(const Web& web, const Vertex& a) {
  if (!web.sources().contains(a)) {
    throw PreconditionError("safe_link: " + a + " is not a source");
  }
  const auto link = linkage(web);
  if (!link) throw PreconditionError("safe_link: the web is hindered");
  const Path path = *link->path_through(a);
  if (is_hindered(delete_web(web, path.vertex_set()))) {
    throw InternalError("safe_link: removing " + path.to_string() +
                        " leaves a hindered web");
  }
  return path;
}

}  // namespace webcalc
