#include "webcalc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <unordered_map>

namespace webcalc::oracle {

namespace {

using Mask = std::uint64_t;

struct Indexed {
  std::vector<Vertex> names;
  std::map<Vertex, int> index;
  std::vector<Mask> out;
  Mask sources = 0;
  Mask sinks = 0;

  explicit Indexed(const Web& web, std::size_t bound) {
    if (web.vertices().size() > bound || web.vertices().size() > 62) {
      throw BudgetError("oracle: " + std::to_string(web.vertices().size()) +
                        " vertices exceed the bound " + std::to_string(bound));
    }
    for (auto& v : web.vertices()) {
      index[v] = static_cast<int>(names.size());
      names.push_back(v);
    }
    out.assign(names.size(), 0);
    for (auto& [from, to] : web.edges()) {
      out[index.at(from)] |= Mask{1} << index.at(to);
    }
    sources = mask(web.sources());
    sinks = mask(web.sinks());
  }

  Mask mask(const VertexSet& s) const {
    Mask m = 0;
    for (auto& v : s) {
      if (auto it = index.find(v); it != index.end()) m |= Mask{1} << it->second;
    }
    return m;
  }

  Mask all() const {
    return names.size() == 64 ? ~Mask{0} : (Mask{1} << names.size()) - 1;
  }

  // Vertices reachable from `from` without leaving `allowed`.
  Mask reach(Mask from, Mask allowed) const {
    Mask seen = from & allowed;
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= out[std::countr_zero(f)];
      next &= allowed & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }
};

class Counter {
 public:
  explicit Counter(std::size_t limit) : limit_(limit) {}
  void tick() {
    if (++count_ > limit_) {
      throw BudgetError("oracle: more than " + std::to_string(limit_) +
                        " cases");
    }
  }

 private:
  std::size_t limit_;
  std::size_t count_ = 0;
};

// All simple paths starting at `start`, as vertex sequences. With
// `to_sinks`, only those ending in B.
void paths_from(const Indexed& g, int start, bool to_sinks, Counter& counter,
                const std::function<void(const std::vector<int>&, Mask)>& emit) {
  std::vector<int> stack{start};
  std::function<void(Mask)> walk = [&](Mask used) {
    counter.tick();
    const int at = stack.back();
    if (!to_sinks || (g.sinks >> at & 1)) emit(stack, used);
    for (Mask next = g.out[at] & ~used; next; next &= next - 1) {
      const int v = std::countr_zero(next);
      stack.push_back(v);
      walk(used | Mask{1} << v);
      stack.pop_back();
    }
  };
  walk(Mask{1} << start);
}

}  // namespace

std::size_t brute_nu(const Web& web, const EnumerationBudget& budget) {
  const Indexed g(web, budget.max_vertices);
  Counter counter(budget.max_cases);
  std::vector<std::vector<Mask>> options;
  for (Mask s = g.sources; s; s &= s - 1) {
    std::set<Mask> masks;
    paths_from(g, std::countr_zero(s), true, counter,
               [&](const std::vector<int>&, Mask used) { masks.insert(used); });
    // A path whose vertex set contains another's is never needed.
    std::vector<Mask> minimal;
    for (Mask m : masks) {
      bool dominated = false;
      for (Mask k : masks) {
        if (k != m && (k & m) == k) dominated = true;
      }
      if (!dominated) minimal.push_back(m);
    }
    options.push_back(std::move(minimal));
  }
  std::unordered_map<Mask, std::size_t> memo;
  std::function<std::size_t(std::size_t, Mask)> best =
      [&](std::size_t i, Mask used) -> std::size_t {
    if (i == options.size()) return 0;
    const Mask key = used * 64 + i;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    counter.tick();
    std::size_t value = best(i + 1, used);
    for (Mask m : options[i]) {
      if ((m & used) == 0) value = std::max(value, 1 + best(i + 1, used | m));
    }
    memo[key] = value;
    return value;
  };
  return best(0, 0);
}

bool separates(const Web& web, const VertexSet& s, const VertexSet& x,
               const VertexSet& y) {
  const Indexed g(web, 62);
  const Mask blocked = g.mask(s);
  return (g.reach(g.mask(x), g.all() & ~blocked) & g.mask(y)) == 0;
}

VertexSet roof_of(const Web& web, const VertexSet& s) {
  const Indexed g(web, 62);
  const Mask allowed = g.all() & ~g.mask(s);
  VertexSet out;
  for (std::size_t v = 0; v < g.names.size(); ++v) {
    if ((g.reach(Mask{1} << v, allowed) & g.sinks) == 0) out.insert(g.names[v]);
  }
  return out;
}

std::vector<Warp> enumerate_waves(const Web& web,
                                  const EnumerationBudget& budget) {
  const Indexed g(web, budget.max_vertices);
  Counter counter(budget.max_cases);
  struct Option {
    Mask used;
    Path path;
  };
  std::vector<std::vector<Option>> options;
  for (Mask s = g.sources; s; s &= s - 1) {
    std::vector<Option> list;
    paths_from(g, std::countr_zero(s), false, counter,
               [&](const std::vector<int>& seq, Mask used) {
                 std::vector<Vertex> names;
                 for (int v : seq) names.push_back(g.names[v]);
                 list.push_back({used, Path(std::move(names))});
               });
    options.push_back(std::move(list));
  }
  std::vector<Warp> waves;
  std::vector<Path> chosen;
  std::function<void(std::size_t, Mask, Mask)> pick =
      [&](std::size_t i, Mask used, Mask ends) {
        counter.tick();
        if (i == options.size()) {
          const Mask free = g.all() & ~ends;
          if ((g.reach(g.sources, free) & g.sinks) == 0) {
            waves.emplace_back(chosen);
          }
          return;
        }
        pick(i + 1, used, ends);
        for (auto& opt : options[i]) {
          if (opt.used & used) continue;
          chosen.push_back(opt.path);
          const int end = g.index.at(opt.path.terminal());
          pick(i + 1, used | opt.used, ends | Mask{1} << end);
          chosen.pop_back();
        }
      };
  pick(0, 0, 0);
  std::sort(waves.begin(), waves.end());
  return waves;
}

bool has_hindrance(const Web& web, const EnumerationBudget& budget) {
  for (auto& w : enumerate_waves(web, budget)) {
    if (w.initials() != web.sources()) return true;
  }
  return false;
}

std::size_t max_matching_size(const BipartiteGraph& graph) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (auto& [m, w] : graph.edges) adj[m].push_back(w);
  std::map<Vertex, Vertex> owner;  // right -> left
  std::function<bool(const Vertex&, std::set<Vertex>&)> grow =
      [&](const Vertex& m, std::set<Vertex>& visited) {
        for (auto& w : adj[m]) {
          if (!visited.insert(w).second) continue;
          auto it = owner.find(w);
          if (it == owner.end() || grow(it->second, visited)) {
            owner[w] = m;
            return true;
          }
        }
        return false;
      };
  std::size_t size = 0;
  for (auto& m : graph.left) {
    std::set<Vertex> visited;
    if (grow(m, visited)) ++size;
  }
  return size;
}

std::size_t min_cover_size(const BipartiteGraph& graph,
                           const EnumerationBudget& budget) {
  std::vector<Vertex> names(graph.left.begin(), graph.left.end());
  names.insert(names.end(), graph.right.begin(), graph.right.end());
  if (names.size() > budget.max_vertices || names.size() > 30) {
    throw BudgetError("min_cover_size: graph too large for the oracle");
  }
  std::map<Vertex, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    index[names[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto& [m, w] : graph.edges) edges.push_back({index[m], index[w]});
  std::size_t best = names.size();
  const Mask limit = Mask{1} << names.size();
  for (Mask s = 0; s < limit; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= best) continue;
    bool covers = true;
    for (auto [a, b] : edges) {
      if (!(s >> a & 1) && !(s >> b & 1)) {
        covers = false;
        break;
      }
    }
    if (covers) best = size;
  }
  return best;
}

std::vector<Web> all_small_webs(std::size_t max_vertices) {
  std::vector<Web> out;
  std::set<std::tuple<VertexSet, EdgeSet, VertexSet, VertexSet>> seen;
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    std::vector<Vertex> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::size_t labellings = 1;
    for (std::size_t i = 0; i < n; ++i) labellings *= 4;
    for (std::size_t label = 0; label < labellings; ++label) {
      VertexSet sources;
      VertexSet sinks;
      std::size_t code = label;
      for (std::size_t i = 0; i < n; ++i, code /= 4) {
        if (code % 4 == 1 || code % 4 == 3) sources.insert(names[i]);
        if (code % 4 == 2 || code % 4 == 3) sinks.insert(names[i]);
      }
      std::vector<Edge> allowed;
      for (auto& x : names) {
        for (auto& y : names) {
          if (x != y && !sinks.contains(x) && !sources.contains(y)) {
            allowed.push_back({x, y});
          }
        }
      }
      for (Mask pick = 0; pick < (Mask{1} << allowed.size()); ++pick) {
        EdgeSet edges;
        for (std::size_t k = 0; k < allowed.size(); ++k) {
          if (pick >> k & 1) edges.insert(allowed[k]);
        }
        Web web = make_web(VertexSet(names.begin(), names.end()), edges,
                           sources, sinks);
        auto key = std::make_tuple(web.vertices(), web.edges(), web.sources(),
                                   web.sinks());
        if (seen.insert(std::move(key)).second) out.push_back(std::move(web));
      }
    }
  }
  return out;
}

std::vector<BipartiteGraph> all_bipartite_graphs(std::size_t left,
                                                 std::size_t right) {
  BipartiteGraph base;
  for (std::size_t i = 0; i < left; ++i) base.left.insert("l" + std::to_string(i));
  for (std::size_t i = 0; i < right; ++i) {
    base.right.insert("r" + std::to_string(i));
  }
  std::vector<Edge> possible;
  for (auto& m : base.left) {
    for (auto& w : base.right) possible.push_back({m, w});
  }
  std::vector<BipartiteGraph> out;
  for (Mask pick = 0; pick < (Mask{1} << possible.size()); ++pick) {
    BipartiteGraph g = base;
    for (std::size_t k = 0; k < possible.size(); ++k) {
      if (pick >> k & 1) g.edges.insert(possible[k]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace webcalc::oracle
