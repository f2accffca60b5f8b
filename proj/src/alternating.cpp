#include "webcalc/alternating.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "webcalc/bipartite.hpp"

namespace webcalc {

// --- the path type ------------------------------------------------------

AlternatingPath::AlternatingPath(std::vector<Link> links)
    : links_(std::move(links)) {
  if (links_.empty()) throw InputError("alternating path without links");
  for (std::size_t k = 0; k < links_.size(); ++k) {
    const Link& link = links_[k];
    const bool lone_vertex =
        links_.size() == 1 && link.kind == LinkKind::kForward;
    if (link.path.edge_count() == 0 && !lone_vertex) {
      throw InputError("link " + std::to_string(k) + " " +
                       link.path.to_string() + " has no edge");
    }
    if (k == 0) continue;
    const Link& prev = links_[k - 1];
    if (prev.kind == link.kind) {
      throw InputError("links " + std::to_string(k - 1) + " and " +
                       std::to_string(k) + " are of the same kind");
    }
    const bool joined = prev.kind == LinkKind::kForward
                            ? prev.path.terminal() == link.path.terminal()
                            : prev.path.initial() == link.path.initial();
    if (!joined) {
      throw InputError("links " + prev.path.to_string() + " and " +
                       link.path.to_string() + " do not join");
    }
  }
}

AlternatingPath AlternatingPath::from_sequence(
    const Warp& warp, const std::vector<Vertex>& sequence) {
  if (sequence.empty()) throw InputError("empty alternating path");
  if (sequence.size() == 1) {
    return AlternatingPath({{LinkKind::kForward, Path(sequence)}});
  }
  const EdgeSet edges = warp.edges();
  std::vector<Link> links;
  std::vector<Vertex> run{sequence[0]};
  LinkKind kind = LinkKind::kForward;
  auto flush = [&] {
    if (kind == LinkKind::kBackward) std::reverse(run.begin(), run.end());
    links.push_back({kind, Path(run)});
  };
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    const Vertex& p = sequence[i];
    const Vertex& q = sequence[i + 1];
    const LinkKind step =
        edges.contains({q, p}) ? LinkKind::kBackward : LinkKind::kForward;
    if (i == 0) {
      kind = step;
    } else if (step != kind) {
      flush();
      run = {p};
      kind = step;
    }
    run.push_back(q);
  }
  flush();
  return AlternatingPath(std::move(links));
}

bool AlternatingPath::starts_forward() const {
  return links_.front().kind == LinkKind::kForward;
}

bool AlternatingPath::ends_forward() const {
  return links_.back().kind == LinkKind::kForward;
}

const Vertex& AlternatingPath::initial() const {
  return starts_forward() ? links_.front().path.initial()
                          : links_.front().path.terminal();
}

const Vertex& AlternatingPath::terminal() const {
  return ends_forward() ? links_.back().path.terminal()
                        : links_.back().path.initial();
}

std::vector<Vertex> AlternatingPath::sequence() const {
  std::vector<Vertex> out{initial()};
  for (auto& link : links_) {
    const auto& vs = link.path.vertices();
    if (link.kind == LinkKind::kForward) {
      out.insert(out.end(), vs.begin() + 1, vs.end());
    } else {
      out.insert(out.end(), vs.rbegin() + 1, vs.rend());
    }
  }
  return out;
}

std::string AlternatingPath::to_string() const {
  std::string out = "(";
  const auto seq = sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += seq[i];
  }
  return out + ")";
}

EdgeSet AlternatingPath::forward_edges() const {
  EdgeSet out;
  for (auto& link : links_) {
    if (link.kind != LinkKind::kForward) continue;
    for (auto& e : link.path.edges()) out.insert(e);
  }
  return out;
}

EdgeSet AlternatingPath::backward_edges() const {
  EdgeSet out;
  for (auto& link : links_) {
    if (link.kind != LinkKind::kBackward) continue;
    for (auto& e : link.path.edges()) out.insert(e);
  }
  return out;
}

VertexSet AlternatingPath::vertex_set() const {
  VertexSet out;
  for (auto& link : links_) {
    out.insert(link.path.vertices().begin(), link.path.vertices().end());
  }
  return out;
}

// --- validation ---------------------------------------------------------

namespace {

// Links with their indices: forward link i runs from u_i to w_{i+1},
// backward link j from u_j to w_j (warp direction).
struct Indexed {
  int index;
  const Path* path;
};

struct Anchored {
  std::vector<Indexed> forward;
  std::vector<Indexed> backward;
  std::map<int, Vertex> u;
  std::map<int, Vertex> w;
};

Anchored anchor(const AlternatingPath& q) {
  Anchored a;
  const bool fwd_first = q.starts_forward();
  const auto& links = q.links();
  for (std::size_t pos = 0; pos < links.size(); ++pos) {
    const int p = static_cast<int>(pos);
    const Path* path = &links[pos].path;
    if (links[pos].kind == LinkKind::kForward) {
      const int i = fwd_first ? p / 2 : (p + 1) / 2;
      a.forward.push_back({i, path});
      a.u[i] = path->initial();
      a.w[i + 1] = path->terminal();
    } else {
      const int j = fwd_first ? (p + 1) / 2 : p / 2 + 1;
      a.backward.push_back({j, path});
      a.u[j] = path->initial();
      a.w[j] = path->terminal();
    }
  }
  return a;
}

bool is_endpoint(const Path& p, const Vertex& v) {
  return p.initial() == v || p.terminal() == v;
}

VertexSet interior_set(const Path& p) {
  const auto in = p.interior();
  return VertexSet(in.begin(), in.end());
}

}  // namespace

AlternatingCheck check_alternating(const Web* web, const Warp& warp,
                                   const AlternatingPath& q, bool partial) {
  AlternatingCheck result;
  auto fail = [&](std::string why) {
    result.valid = false;
    result.reason = std::move(why);
    return result;
  };
  const VertexSet on_warp = warp.vertices();
  const Anchored a = anchor(q);

  for (auto& f : a.forward) {
    if (web && !is_path_in(*web, *f.path)) {
      return fail("condition 1: forward link " + f.path->to_string() +
                  " is not a path of the web");
    }
  }
  for (auto& r : a.backward) {
    const Path* host = warp.path_through(r.path->initial());
    bool sub = host != nullptr;
    if (sub) {
      const std::size_t start = host->index_of(r.path->initial());
      const auto& hv = host->vertices();
      const auto& rv = r.path->vertices();
      sub = start + rv.size() <= hv.size() &&
            std::equal(rv.begin(), rv.end(), hv.begin() + start);
    }
    if (!sub) {
      return fail("condition 1: backward link " + r.path->to_string() +
                  " is not a subpath of a warp path");
    }
  }
  // A forward link may only cross the warp inside an earlier (or the
  // immediately preceding) backward link.
  for (auto& f : a.forward) {
    VertexSet crossable;
    for (auto& r : a.backward) {
      if (r.index <= f.index) {
        const VertexSet in = interior_set(*r.path);
        crossable.insert(in.begin(), in.end());
      }
    }
    for (auto& v : f.path->interior()) {
      if (on_warp.contains(v) && !crossable.contains(v)) {
        return fail("forward link " + f.path->to_string() +
                    " crosses the warp at " + v +
                    " outside every earlier backward link");
      }
    }
  }
  if (q.starts_forward() && on_warp.contains(q.initial())) {
    return fail("condition 2: initial vertex " + q.initial() +
                " lies on the warp");
  }
  if (!partial && q.ends_forward() && on_warp.contains(q.terminal())) {
    return fail("condition 3: terminal vertex " + q.terminal() +
                " lies on the warp");
  }
  for (std::size_t x = 0; x < a.backward.size(); ++x) {
    for (std::size_t y = 0; y < a.backward.size(); ++y) {
      if (x == y) continue;
      const int i = a.backward[x].index;
      const int j = a.backward[y].index;
      for (auto& v : set_intersection(a.backward[x].path->vertex_set(),
                                      a.backward[y].path->vertex_set())) {
        const bool ok = (v == a.u.at(i) && v == a.w.at(j)) ||
                        (v == a.w.at(i) && v == a.u.at(j));
        if (!ok) {
          return fail("condition 4: backward links " +
                      a.backward[x].path->to_string() + " and " +
                      a.backward[y].path->to_string() + " meet at " + v);
        }
      }
    }
  }
  for (std::size_t x = 0; x < a.forward.size(); ++x) {
    for (std::size_t y = 0; y < a.forward.size(); ++y) {
      if (x == y) continue;
      const int i = a.forward[x].index;
      const int j = a.forward[y].index;
      for (auto& v : set_intersection(a.forward[x].path->vertex_set(),
                                      a.forward[y].path->vertex_set())) {
        const bool ok = (v == a.u.at(i) && v == a.w.at(j + 1)) ||
                        (v == a.w.at(i + 1) && v == a.u.at(j));
        if (!ok) {
          return fail("condition 5: forward links " +
                      a.forward[x].path->to_string() + " and " +
                      a.forward[y].path->to_string() + " meet at " + v);
        }
      }
    }
  }
  // Vertices where the path returns to itself at link junctions.
  VertexSet junctions;
  for (auto& [k, uv] : a.u) {
    for (auto& [l, wv] : a.w) {
      if (k != l && uv == wv) junctions.insert(uv);
    }
  }
  for (auto& f : a.forward) {
    for (auto& r : a.backward) {
      const int i = f.index;
      const int j = r.index;
      VertexSet meet;
      for (auto& v : set_intersection(f.path->vertex_set(),
                                      r.path->vertex_set())) {
        const bool exempt = junctions.contains(v) && is_endpoint(*f.path, v) &&
                            is_endpoint(*r.path, v);
        if (!exempt) meet.insert(v);
      }
      if (meet.empty()) continue;
      bool ok = false;
      if (j == i + 1) {
        ok = is_subset(meet, {a.w.at(j)});
      } else if (i > j) {
        ok = !intersects(meet, {a.u.at(i), a.w.at(i + 1), a.u.at(j), a.w.at(j)});
      } else if (j == i) {
        ok = !meet.contains(a.w.at(i)) && !meet.contains(a.w.at(i + 1));
      }
      if (!ok) {
        return fail("condition 6: forward link " + f.path->to_string() +
                    " meets backward link " + r.path->to_string() + " at " +
                    to_string(meet));
      }
    }
  }

  result.valid = true;
  result.leaving = !on_warp.contains(q.terminal());
  if (web) {
    result.augmenting = q.starts_forward() && q.ends_forward() &&
                        web->sources().contains(q.initial()) &&
                        web->sinks().contains(q.terminal()) &&
                        !on_warp.contains(q.initial()) &&
                        !on_warp.contains(q.terminal());
  }
  result.reducing = !q.starts_forward() && !q.ends_forward() &&
                    warp.terminals().contains(q.initial()) &&
                    warp.initials().contains(q.terminal());
  return result;
}

bool validate_alternating(const Web& web, const Warp& warp,
                          const AlternatingPath& q) {
  return check_alternating(&web, warp, q).valid;
}

Cyclowarp apply_alternating(const Warp& warp, const AlternatingPath& q) {
  const AlternatingCheck check = check_alternating(nullptr, warp, q);
  if (!check.valid) {
    throw PreconditionError("cannot apply " + q.to_string() + ": " +
                            check.reason);
  }
  EdgeSet edges;
  const EdgeSet removed = q.backward_edges();
  for (auto& e : warp.edges()) {
    if (!removed.contains(e)) edges.insert(e);
  }
  const EdgeSet added = q.forward_edges();
  edges.insert(added.begin(), added.end());
  VertexSet isolated = warp.isolated();
  if (q.links().front().path.edge_count() == 0) isolated.insert(q.initial());
  return Cyclowarp::from_edges(edges, isolated);
}

namespace {

bool has_cycle(const EdgeSet& edges) {
  std::map<Vertex, std::vector<Vertex>> out;
  for (auto& [from, to] : edges) out[from].push_back(to);
  std::map<Vertex, int> state;  // 1 on stack, 2 done
  std::function<bool(const Vertex&)> visit = [&](const Vertex& v) {
    state[v] = 1;
    for (auto& next : out[v]) {
      const int s = state[next];
      if (s == 1) return true;
      if (s == 0 && visit(next)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (auto& [v, targets] : out) {
    if (state[v] == 0 && visit(v)) return true;
  }
  return false;
}

EdgeSet new_edges(const Warp& warp, const AlternatingPath& q) {
  const EdgeSet existing = warp.edges();
  EdgeSet out;
  for (auto& e : q.forward_edges()) {
    if (!existing.contains(e)) out.insert(e);
  }
  return out;
}

bool single_intervals(const Warp& warp, const EdgeSet& used) {
  for (auto& p : warp.paths()) {
    const auto edges = p.edges();
    std::size_t first = edges.size();
    std::size_t last = 0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!used.contains(edges[k])) continue;
      first = std::min(first, k);
      last = k;
      ++count;
    }
    if (count > 0 && last - first + 1 != count) return false;
  }
  return true;
}

}  // namespace

bool is_safe(const Warp& warp, const AlternatingPath& q) {
  return single_intervals(warp, q.backward_edges()) &&
         !has_cycle(new_edges(warp, q));
}

bool is_degenerate(const Warp& warp, const AlternatingPath& q) {
  const Cyclowarp result = apply_alternating(warp, q);
  for (auto& p : result.paths()) {
    if (p.contains(q.initial()) && p.contains(q.terminal()) &&
        p.precedes_or_equal(q.initial(), q.terminal())) {
      return true;
    }
  }
  return false;
}

// --- augmentation -------------------------------------------------------

namespace {

Vertex strip_copy(const Vertex& id) { return id.substr(2); }

}  // namespace

std::optional<AlternatingPath> find_augmenting(const Web& web,
                                               const Warp& warp,
                                               StepBudget* budget) {
  // A vertex of both A and B off the warp is a path on its own; the
  // bipartite conversion drops such vertices.
  const VertexSet on_warp = warp.vertices();
  for (auto& v : set_intersection(web.sources(), web.sinks())) {
    if (!on_warp.contains(v)) {
      return AlternatingPath({{LinkKind::kForward, Path::single(v)}});
    }
  }
  const Conversion conv = to_bipartite(web);
  const Contraction lambda =
      contract_matching(conv.delta, warp_to_matching(web, warp));
  const int n = static_cast<int>(lambda.nodes.size());
  std::vector<int> parent(n, -2);
  std::vector<char> is_sink(n, 0);
  for (int t : lambda.sinks) is_sink[t] = 1;
  std::deque<int> queue;
  for (int s : lambda.sources) {
    parent[s] = -1;
    queue.push_back(s);
  }
  int found = -1;
  while (!queue.empty() && found < 0) {
    const int node = queue.front();
    queue.pop_front();
    if (budget) budget->spend();
    if (is_sink[node]) {
      found = node;
      break;
    }
    for (int next : lambda.out[node]) {
      if (parent[next] != -2) continue;
      parent[next] = node;
      queue.push_back(next);
    }
  }
  if (found < 0) return std::nullopt;

  std::vector<int> route;
  for (int node = found; node >= 0; node = parent[node]) route.push_back(node);
  std::reverse(route.begin(), route.end());

  // Replay the node route as forward and backward steps in the web.
  std::vector<std::pair<Vertex, LinkKind>> steps;
  Vertex current = strip_copy(*lambda.nodes[route[0]].left);
  const Vertex start = current;
  for (std::size_t t = 1; t < route.size(); ++t) {
    const auto& node = lambda.nodes[route[t]];
    const Vertex entered = strip_copy(*node.right);
    if (entered != current) {
      steps.push_back({entered, LinkKind::kForward});
      current = entered;
    }
    if (node.left) {
      const Vertex leave = strip_copy(*node.left);
      if (leave != current) {
        steps.push_back({leave, LinkKind::kBackward});
        current = leave;
      }
    }
  }
  std::vector<Link> links;
  std::vector<Vertex> run{start};
  LinkKind kind = steps.front().second;
  auto flush = [&] {
    if (kind == LinkKind::kBackward) std::reverse(run.begin(), run.end());
    links.push_back({kind, Path(run)});
  };
  Vertex at = start;
  for (auto& [v, step] : steps) {
    if (step != kind) {
      flush();
      run = {at};
      kind = step;
    }
    run.push_back(v);
    at = v;
  }
  flush();
  return AlternatingPath(std::move(links));
}

Warp strongly_maximal_warp(const Web& web, StepBudget* budget) {
  Warp current = Warp::singletons(set_intersection(web.sources(), web.sinks()));
  while (auto q = find_augmenting(web, current, budget)) {
    Warp next = apply_alternating(current, *q).path_part();
    if (next.size() != current.size() + 1) {
      throw InternalError("augmenting " + q->to_string() +
                          " did not add exactly one path");
    }
    current = std::move(next);
  }
  return current;
}

// --- safe alternating path families --------------------------------------

namespace {

class LinkSearch {
 public:
  // Candidate callback; returning true stops the search.
  using Visit = std::function<bool(const AlternatingPath&)>;

  LinkSearch(const Warp& alt, const Warp& fwd, bool need_safe,
             StepBudget& budget)
      : alt_(alt),
        fwd_(fwd),
        on_alt_(alt.vertices()),
        alt_edges_(alt.edges()),
        need_safe_(need_safe),
        budget_(budget) {}

  // Paths starting at `start` with a forward link that end forward outside
  // the alternated warp.
  bool forward_from(const Vertex& start, const Visit& visit) {
    links_.clear();
    target_.reset();
    return step_forward(start, visit);
  }

  // Paths starting at `start` with a backward link that end with a
  // backward link at `target`.
  bool backward_from(const Vertex& start, const Vertex& target,
                     const Visit& visit) {
    links_.clear();
    target_ = target;
    return step_backward(start, visit);
  }

 private:
  bool acceptable_prefix() {
    const AlternatingPath q(links_);
    if (!check_alternating(nullptr, alt_, q, true).valid) return false;
    if (need_safe_) {
      EdgeSet fresh;
      for (auto& e : q.forward_edges()) {
        if (!alt_edges_.contains(e)) fresh.insert(e);
      }
      if (has_cycle(fresh)) return false;
    }
    return true;
  }

  bool acceptable_whole(const AlternatingPath& q) {
    if (!check_alternating(nullptr, alt_, q).valid) return false;
    return !need_safe_ || is_safe(alt_, q);
  }

  VertexSet crossable() const {
    VertexSet out;
    for (auto& link : links_) {
      if (link.kind != LinkKind::kBackward) continue;
      const auto in = link.path.interior();
      out.insert(in.begin(), in.end());
    }
    return out;
  }

  bool step_forward(const Vertex& u, const Visit& visit) {
    budget_.spend();
    const Path* host = fwd_.path_through(u);
    if (host == nullptr || host->terminal() == u) return false;
    const VertexSet open = crossable();
    const auto& hv = host->vertices();
    std::size_t end = host->index_of(u) + 1;
    while (end + 1 < hv.size() &&
           !(on_alt_.contains(hv[end]) && !open.contains(hv[end]))) {
      ++end;
    }
    const Vertex w = hv[end];
    links_.push_back({LinkKind::kForward, host->segment(u, w)});
    bool stop = false;
    if (acceptable_prefix()) {
      if (!on_alt_.contains(w)) {
        if (!target_) {
          const AlternatingPath q(links_);
          if (acceptable_whole(q)) stop = visit(q);
        }
      } else if (!open.contains(w)) {
        stop = step_backward(w, visit);
      }
    }
    links_.pop_back();
    return stop;
  }

  bool step_backward(const Vertex& w, const Visit& visit) {
    budget_.spend();
    const Path* host = alt_.path_through(w);
    if (host == nullptr) return false;
    const auto& hv = host->vertices();
    const std::size_t at = host->index_of(w);
    for (std::size_t k = at; k-- > 0;) {
      links_.push_back({LinkKind::kBackward, host->segment(hv[k], w)});
      bool stop = false;
      if (acceptable_prefix()) {
        if (target_ && hv[k] == *target_) {
          const AlternatingPath q(links_);
          if (acceptable_whole(q)) stop = visit(q);
        }
        if (!stop) stop = step_forward(hv[k], visit);
      }
      links_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const Warp& alt_;
  const Warp& fwd_;
  VertexSet on_alt_;
  EdgeSet alt_edges_;
  bool need_safe_;
  StepBudget& budget_;
  std::vector<Link> links_;
  std::optional<Vertex> target_;
};

// Splits every vertex that ends one path and starts another into a fresh
// terminal copy, so that the fractured warp becomes a warp.
struct Split {
  Warp warp;
  std::map<Vertex, Vertex> original;  // copy -> vertex
};

Split split_junctions(const FracturedWarp& z, const VertexSet& taken) {
  Split split;
  const VertexSet starts = z.initials();
  std::vector<Path> paths;
  VertexSet used = taken;
  const VertexSet on_z = z.vertices();
  used.insert(on_z.begin(), on_z.end());
  for (auto& p : z.paths()) {
    if (p.trivial() || !starts.contains(p.terminal())) {
      paths.push_back(p);
      continue;
    }
    Vertex copy = p.terminal() + "'";
    while (used.contains(copy)) copy += "'";
    used.insert(copy);
    split.original[copy] = p.terminal();
    std::vector<Vertex> vs = p.vertices();
    vs.back() = copy;
    paths.emplace_back(std::move(vs));
  }
  split.warp = Warp(std::move(paths));
  return split;
}

AlternatingPath rename_back(const AlternatingPath& q,
                            const std::map<Vertex, Vertex>& original) {
  if (original.empty()) return q;
  std::vector<Link> links;
  for (auto& link : q.links()) {
    std::vector<Vertex> vs = link.path.vertices();
    for (auto& v : vs) {
      if (auto it = original.find(v); it != original.end()) v = it->second;
    }
    links.push_back({link.kind, Path(std::move(vs))});
  }
  return AlternatingPath(std::move(links));
}

}  // namespace

std::map<Vertex, Vertex> SapFamily::terminals() const {
  std::map<Vertex, Vertex> out;
  for (auto& [z, q] : paths) out[z] = q.terminal();
  for (auto& z : stationary) out[z] = z;
  return out;
}

SapFamily sap_family(const Web& web, const std::variant<Warp, FracturedWarp>& z,
                     const Warp& y, std::size_t step_limit) {
  Split split;
  if (const auto* warp = std::get_if<Warp>(&z)) {
    split.warp = *warp;
  } else {
    split = split_junctions(std::get<FracturedWarp>(z),
                            set_union(web.vertices(), y.vertices()));
  }
  Warp current = split.warp;
  if (!is_subset(y.initials(), current.initials())) {
    throw PreconditionError("sap_family: in[Z] does not contain in[Y]");
  }
  const VertexSet on_y = y.vertices();
  const VertexSet starts = set_difference(current.initials(), y.initials());
  for (auto& s : starts) {
    if (on_y.contains(s)) {
      throw PreconditionError("sap_family: starting vertex " + s +
                              " lies on Y");
    }
  }
  const std::size_t n = web.vertices().size() + split.original.size();
  StepBudget budget(step_limit ? step_limit
                               : std::max<std::size_t>(200'000, 1000 * n * n));

  SapFamily family;
  try {
    for (auto& start : starts) {
      const Path* own = current.path_through(start);
      if (own->trivial()) {
        family.stationary.insert(start);
        current = current.avoiding({start});
        continue;
      }
      std::optional<AlternatingPath> chosen;
      std::optional<AlternatingPath> back;
      VertexSet tried;
      LinkSearch outward(y, current, true, budget);
      outward.forward_from(start, [&](const AlternatingPath& q) {
        const Vertex v = q.terminal();
        if (!tried.insert(v).second) return false;
        LinkSearch homeward(current, y, false, budget);
        homeward.backward_from(v, start, [&](const AlternatingPath& t) {
          back = t;
          return true;
        });
        if (back) chosen = q;
        return back.has_value();
      });
      if (!chosen) {
        throw InternalError("sap_family: no safe alternating path from " +
                            start + " can be returned along Z");
      }
      Warp next = apply_alternating(current, *back).path_part();
      VertexSet want_in = current.initials();
      want_in.erase(start);
      VertexSet want_ter = current.terminals();
      want_ter.erase(chosen->terminal());
      if (next.initials() != want_in || next.terminals() != want_ter) {
        throw InternalError("sap_family: returning along " + back->to_string() +
                            " broke the end sets of Z");
      }
      family.paths.emplace(start, rename_back(*chosen, split.original));
      current = std::move(next);
    }
  } catch (const BudgetError& e) {
    throw InternalError(std::string("sap_family: ") + e.what());
  }
  return family;
}

}  // namespace webcalc
