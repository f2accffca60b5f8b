#include "webcalc/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "webcalc/menger.hpp"
#include "webcalc/separation.hpp"
#include "webcalc/waves.hpp"

namespace webcalc::lemmas {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (auto& r : results) n += r.failures;
  return n;
}

void Report::merge(const Report& other) {
  for (auto& r : other.results) {
    auto it = std::find_if(results.begin(), results.end(), [&](const Result& x) {
      return x.family == r.family && x.name == r.name;
    });
    if (it == results.end()) {
      results.push_back(r);
      continue;
    }
    it->cases += r.cases;
    it->failures += r.failures;
    if (it->witness.empty()) it->witness = r.witness;
    if (it->skip_reason.empty()) it->skip_reason = r.skip_reason;
  }
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (auto& r : results) {
    const char* tag = r.failures ? "FAIL" : (r.cases == 0 && !r.skip_reason.empty())
                                                ? "SKIP"
                                                : "PASS";
    out << tag << " " << r.family << "/" << r.name << " cases=" << r.cases;
    if (r.failures) out << " failures=" << r.failures << " witness: " << r.witness;
    if (!r.skip_reason.empty()) out << " (skipped: " << r.skip_reason << ")";
    out << "\n";
  }
  return out.str();
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"warps", "separation", "waves",
                                              "alternating", "menger"};
  return names;
}

namespace {

class Check {
 public:
  Check(Report& report, std::string family, std::string name)
      : report_(report), index_(report.results.size()) {
    Result r;
    r.family = std::move(family);
    r.name = std::move(name);
    report.results.push_back(std::move(r));
  }

  template <class Witness>
  void expect(bool ok, Witness&& witness) {
    Result& r = report_.results[index_];
    ++r.cases;
    if (ok) return;
    if (r.failures++ == 0) r.witness = witness();
  }

  void fail(const std::string& why) {
    Result& r = report_.results[index_];
    ++r.cases;
    if (r.failures++ == 0) r.witness = why;
  }

  void skip(const std::string& why) {
    Result& r = report_.results[index_];
    if (r.skip_reason.empty()) r.skip_reason = why;
  }

  // Runs `body`, turning a thrown library error into a failure (or a skip
  // for an exhausted budget).
  template <class Body>
  void guarded(Body&& body) {
    try {
      body();
    } catch (const BudgetError& e) {
      skip(e.what());
    } catch (const Error& e) {
      fail(std::string("threw: ") + e.what());
    }
  }

 private:
  Report& report_;
  std::size_t index_;
};

std::string show(const VertexSet& s) { return to_string(s); }

class Context {
 public:
  Context(const Web& web, const Options& options)
      : web(web), options(options), rng_(options.seed) {
    const std::vector<Vertex> vs(web.vertices().begin(), web.vertices().end());
    if (vs.size() <= options.exhaustive_vertices) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << vs.size()); ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < vs.size(); ++i) {
          if (mask >> i & 1) s.insert(vs[i]);
        }
        subsets.push_back(std::move(s));
      }
    } else {
      subsets.push_back({});
      subsets.push_back(web.vertices());
      for (std::size_t k = 0; k < options.samples; ++k) {
        VertexSet s;
        const double density = rng_.uniform();
        for (auto& v : vs) {
          if (rng_.chance(density)) s.insert(v);
        }
        subsets.push_back(std::move(s));
      }
    }
    for (auto& s : subsets) {
      if (!intersects(s, web.sources())) non_source_subsets.push_back(s);
    }
  }

  // All index pairs when few, else a seeded sample.
  std::vector<std::pair<std::size_t, std::size_t>> pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t cap = std::max<std::size_t>(256, 8 * options.samples);
    if (n * n <= cap) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.push_back({i, j});
      }
    } else if (n > 0) {
      for (std::size_t k = 0; k < cap; ++k) {
        out.push_back({rng_.below(n), rng_.below(n)});
      }
    }
    return out;
  }

  const VertexSet& random_subset() { return subsets[rng_.below(subsets.size())]; }
  Rng& rng() { return rng_; }

  // Oracle waves of the web itself, claimed waves excluded.
  const std::vector<Warp>& waves() {
    if (!waves_) waves_ = oracle::enumerate_waves(web, options.budget);
    return *waves_;
  }

  // Waves plus the claimed ones that really are waves, without repeats.
  std::vector<Warp> wave_pool() {
    std::vector<Warp> pool = waves();
    for (auto& w : options.claimed_waves) {
      if (is_wave(web, w) && std::find(pool.begin(), pool.end(), w) == pool.end()) {
        pool.push_back(w);
      }
    }
    return pool;
  }

  // Warps for the warp-level lemmas: waves and maximum A-B warps.
  const std::vector<Warp>& warp_pool() {
    if (!warp_pool_) {
      std::vector<Warp> pool = wave_pool();
      pool.push_back(strongly_maximal_warp(web));
      std::sort(pool.begin(), pool.end());
      pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
      const std::size_t cap = std::max<std::size_t>(16, options.samples);
      if (pool.size() > cap) {
        std::vector<Warp> sample;
        for (std::size_t k = 0; k < cap; ++k) {
          sample.push_back(pool[rng_.below(pool.size())]);
        }
        pool = std::move(sample);
      }
      warp_pool_ = std::move(pool);
    }
    return *warp_pool_;
  }

  const std::vector<Warp>& waves_after_deleting(const VertexSet& x) {
    auto it = deleted_waves_.find(x);
    if (it == deleted_waves_.end()) {
      it = deleted_waves_
               .emplace(x, oracle::enumerate_waves(delete_web(web, x),
                                                   options.budget))
               .first;
    }
    return it->second;
  }

  bool small_enough_for_paths() const { return web.vertices().size() <= 8; }

  const Web& web;
  const Options& options;
  std::vector<VertexSet> subsets;
  std::vector<VertexSet> non_source_subsets;

 private:
  Rng rng_;
  std::optional<std::vector<Warp>> waves_;
  std::optional<std::vector<Warp>> warp_pool_;
  std::map<VertexSet, std::vector<Warp>> deleted_waves_;
};

// Sources that survive in Γ - X; a deletion that strands one of them leaves
// a hindrance in the untrimmed web.
bool strands_a_source(const Web& web, const VertexSet& x, const Web& residue) {
  return set_difference(web.sources(), x) != residue.sources();
}

bool hindered_after_deleting(const Web& web, const VertexSet& x) {
  const Web residue = delete_web(web, x);
  return strands_a_source(web, x, residue) || is_hindered(residue);
}

// --- warps ------------------------------------------------------------------

void warp_lemmas(Context& ctx, Report& report) {
  const Web& web = ctx.web;
  {
    Check c(report, "warps", "arrow-fixpoint-iff-forward-extension");
    c.guarded([&] {
      const auto& pool = ctx.warp_pool();
      for (auto [i, j] : ctx.pairs(pool.size())) {
        const Warp& u = pool[i];
        const Warp& w = pool[j];
        const bool fixed = warp_arrow(u, w) == w;
        c.expect(fixed == forward_extends(w, u), [&] {
          return "U=" + u.to_string() + " W=" + w.to_string();
        });
      }
    });
  }
  {
    Check c(report, "warps", "arrow-forward-extends");
    c.guarded([&] {
      const auto& pool = ctx.warp_pool();
      for (auto [i, j] : ctx.pairs(pool.size())) {
        const Warp r = warp_arrow(pool[i], pool[j]);
        c.expect(is_warp_in(web, r) && forward_extends(r, pool[i]), [&] {
          return "U=" + pool[i].to_string() + " W=" + pool[j].to_string() +
                 " gave " + r.to_string();
        });
      }
    });
  }
  {
    Check c(report, "warps", "quotient-warp-in-quotient-web");
    Check ends(report, "warps", "quotient-end-sets");
    Check iso(report, "warps", "quotient-keeps-essential-singletons");
    Check starting(report, "warps", "quotient-keeps-starting");
    c.guarded([&] {
      for (auto& x : ctx.non_source_subsets) {
        const Web q = quotient_web(web, x);
        const RoofReport rf = roof(web, x);
        for (auto& w : ctx.warp_pool()) {
          const Warp wx = warp_quotient(w, x, web);
          auto who = [&] { return "W=" + w.to_string() + " X=" + show(x); };
          c.expect(is_warp_in(q, wx), who);
          ends.expect(
              wx.initials() ==
                      set_difference(set_union(w.initials(), x), rf.strict_roof) &&
                  is_subset(set_union(set_difference(w.terminals(), rf.strict_roof),
                                      set_difference(rf.essential, w.vertices())),
                            wx.terminals()),
              who);
          bool singles = true;
          for (auto& e : set_difference(rf.essential, w.vertices())) {
            singles = singles && wx.contains(Path::single(e));
          }
          iso.expect(singles, who);
          if (is_subset(w.initials(), web.sources())) {
            starting.expect(is_subset(wx.initials(), q.sources()), who);
          }
        }
      }
    });
  }
  {
    Check c(report, "warps", "quotient-monotone");
    c.guarded([&] {
      const auto& pool = ctx.warp_pool();
      for (auto [i, j] : ctx.pairs(pool.size())) {
        const Warp& w = pool[i];
        const Warp& w2 = pool[j];
        if (!extends(w2, w)) continue;
        const VertexSet& x = ctx.random_subset();
        const Warp a = warp_quotient(w, x, web);
        const Warp b = warp_quotient(w2, x, web);
        c.expect(extends(b, a) && (!forward_extends(w2, w) || forward_extends(b, a)),
                 [&] {
                   return "W=" + w.to_string() + " W'=" + w2.to_string() +
                          " X=" + show(x);
                 });
      }
    });
  }
}

// --- separation ---------------------------------------------------------------

void separation_lemmas(Context& ctx, Report& report) {
  const Web& web = ctx.web;
  const auto& subsets = ctx.subsets;
  std::vector<RoofReport> roofs;
  for (auto& s : subsets) roofs.push_back(roof(web, s));
  {
    Check c(report, "separation", "essential-part-separates");
    c.guarded([&] {
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        if (!is_separating(web, subsets[i], web.sources(), web.sinks())) continue;
        c.expect(is_separating(web, roofs[i].essential, web.sources(), web.sinks()),
                 [&] { return "S=" + show(subsets[i]); });
      }
    });
  }
  {
    Check c(report, "separation", "last-roofed-vertex-is-essential-or-end");
    c.guarded([&] {
      if (!ctx.small_enough_for_paths()) {
        c.skip("web too large for path enumeration");
        return;
      }
      const auto paths = gen::all_paths(web);
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        const RoofReport& rf = roofs[i];
        for (auto& p : paths) {
          std::optional<Vertex> last;
          for (auto& v : p.vertices()) {
            if (rf.roofed.contains(v)) last = v;
          }
          if (!last) continue;
          c.expect(rf.essential.contains(*last) || *last == p.terminal(), [&] {
            return "S=" + show(subsets[i]) + " P=" + p.to_string();
          });
        }
      }
    });
  }
  {
    Check c(report, "separation", "essential-sandwich");
    c.guarded([&] {
      for (std::size_t d = 0; d < subsets.size(); ++d) {
        for (std::size_t k = 0; k < subsets.size(); ++k) {
          if (!is_subset(roofs[d].essential, subsets[k]) ||
              !is_subset(subsets[k], subsets[d])) {
            continue;
          }
          c.expect(roofs[k].essential == roofs[d].essential, [&] {
            return "D=" + show(subsets[d]) + " C=" + show(subsets[k]);
          });
        }
      }
    });
  }
  {
    Check c(report, "separation", "crosswise-roofing");
    c.guarded([&] {
      const std::size_t n = std::max<std::size_t>(256, 8 * ctx.options.samples);
      for (std::size_t k = 0; k < n; ++k) {
        const VertexSet s = ctx.random_subset();
        const VertexSet t = ctx.random_subset();
        const VertexSet x = ctx.random_subset();
        const VertexSet y = set_difference(ctx.random_subset(), x);
        if (!is_subset(x, roofed(web, set_union(t, y))) ||
            !is_subset(y, roofed(web, set_union(s, x)))) {
          continue;
        }
        c.expect(is_subset(set_union(x, y), roofed(web, set_union(s, t))), [&] {
          return "S=" + show(s) + " T=" + show(t) + " X=" + show(x) +
                 " Y=" + show(y);
        });
      }
    });
  }
  {
    Check c(report, "separation", "sandwiched-roof-separates");
    c.guarded([&] {
      for (std::size_t t = 0; t < subsets.size(); ++t) {
        if (roofs[t].essential != subsets[t]) continue;
        for (std::size_t s = 0; s < subsets.size(); ++s) {
          if (!is_subset(roofs[s].roofed, roofs[t].roofed)) continue;
          for (std::size_t r = 0; r < subsets.size(); ++r) {
            if (!is_subset(roofs[r].roofed, roofs[s].roofed)) continue;
            c.expect(is_separating(web, subsets[s], subsets[r], subsets[t]), [&] {
              return "R=" + show(subsets[r]) + " S=" + show(subsets[s]) +
                     " T=" + show(subsets[t]);
            });
          }
        }
      }
    });
  }
  {
    Check c(report, "separation", "deletion-roof-union");
    c.guarded([&] {
      for (auto [i, j] : ctx.pairs(subsets.size())) {
        const VertexSet& x = subsets[i];
        const VertexSet& y = subsets[j];
        const VertexSet lhs = roofed(web, set_union(x, y));
        const VertexSet rhs =
            set_union(x, roofed(delete_web(web, x), set_difference(y, x)));
        c.expect(lhs == rhs, [&] { return "X=" + show(x) + " Y=" + show(y); });
      }
    });
  }
  {
    Check c(report, "separation", "strict-roof-of-union");
    Check comp(report, "separation", "quotient-composition");
    c.guarded([&] {
      for (auto [i, j] : ctx.pairs(subsets.size())) {
        const VertexSet& x = subsets[i];
        const VertexSet& y = subsets[j];
        auto who = [&] { return "X=" + show(x) + " Y=" + show(y); };
        const Web q = quotient_over(web, x);
        const VertexSet lhs = strictly_roofed(web, set_union(x, y));
        const VertexSet rest = set_difference(y, roofs[i].strict_roof);
        // Equality holds with the strict roof in the quotient; the plain
        // roof there gives only an upper bound.
        c.expect(lhs == set_union(roofs[i].strict_roof, strictly_roofed(q, rest)) &&
                     is_subset(lhs, set_union(roofs[i].strict_roof, roofed(q, rest))),
                 who);
        if (!intersects(y, roofs[i].strict_roof)) {
          comp.expect(quotient_over(web, set_union(x, y)) == quotient_over(q, y),
                      who);
        }
      }
    });
  }
  {
    Check c(report, "separation", "quotient-over-joint-essential-part");
    c.guarded([&] {
      for (auto [i, j] : ctx.pairs(subsets.size())) {
        const VertexSet y =
            essential_part(web, set_union(subsets[i], subsets[j]));
        const Web direct = quotient_over(web, y);
        c.expect(quotient_over(quotient_over(web, subsets[i]), y) == direct &&
                     quotient_over(quotient_over(web, subsets[j]), y) == direct,
                 [&] {
                   return "X1=" + show(subsets[i]) + " X2=" + show(subsets[j]);
                 });
      }
    });
  }
  {
    Check c(report, "separation", "quotient-keeps-strict-roof");
    c.guarded([&] {
      for (auto& z : subsets) {
        const Web q = quotient_over(web, z);
        for (auto& w : ctx.warp_pool()) {
          const VertexSet lhs =
              set_intersection(strictly_roofed(web, w.terminals()), q.vertices());
          const VertexSet rhs =
              strictly_roofed(q, warp_quotient(w, z, web).terminals());
          c.expect(is_subset(lhs, rhs),
                   [&] { return "Z=" + show(z) + " V=" + w.to_string(); });
        }
      }
    });
  }
  {
    Check c(report, "separation", "quotient-roofs-more-than-deletion");
    c.guarded([&] {
      for (auto [i, j] : ctx.pairs(subsets.size())) {
        const VertexSet& t = subsets[i];
        const VertexSet s = set_difference(subsets[j], t);
        const VertexSet strict_t = roofs[i].strict_roof;
        const VertexSet lhs =
            set_difference(roofed(delete_web(web, t), s), strict_t);
        const VertexSet rhs =
            roofed(quotient_over(web, t), set_difference(s, strict_t));
        c.expect(is_subset(lhs, rhs),
                 [&] { return "S=" + show(s) + " T=" + show(t); });
      }
    });
  }
}

// --- waves --------------------------------------------------------------------

void wave_lemmas(Context& ctx, Report& report) {
  const Web& web = ctx.web;
  {
    Check c(report, "waves", "claimed-waves-are-waves");
    for (auto& w : ctx.options.claimed_waves) {
      c.guarded([&] {
        std::string why;
        if (!is_warp_in(web, w)) {
          why = "not a warp of the web";
        } else if (!is_subset(w.initials(), web.sources())) {
          why = "starts outside A";
        } else if (!is_separating(web, w.terminals(), web.sources(), web.sinks())) {
          why = "terminals do not separate A from B";
        }
        c.expect(why.empty(), [&] { return w.to_string() + ": " + why; });
      });
    }
  }
  std::vector<Warp> pool;
  {
    Check c(report, "waves", "wave-predicate-agrees-with-enumeration");
    c.guarded([&] {
      const auto& waves = ctx.waves();
      pool = ctx.wave_pool();
      for (auto& w : waves) {
        c.expect(is_wave(web, w), [&] { return w.to_string(); });
        // Dropping a path or cutting one short gives an A-starting warp that
        // must be classified exactly as the enumeration does.
        for (std::size_t k = 0; k < w.size(); ++k) {
          std::vector<Path> rest = w.paths();
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
          Warp dropped(rest);
          const bool listed = std::binary_search(waves.begin(), waves.end(), dropped);
          c.expect(is_wave(web, dropped) == listed,
                   [&] { return dropped.to_string(); });
          const Path& p = w.paths()[k];
          if (!p.trivial()) {
            std::vector<Vertex> shorter(p.vertices().begin(), p.vertices().end() - 1);
            rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(k), Path(shorter));
            Warp cut(rest);
            const bool cut_listed =
                std::binary_search(waves.begin(), waves.end(), cut);
            c.expect(is_wave(web, cut) == cut_listed,
                     [&] { return cut.to_string(); });
          }
        }
      }
    });
  }
  {
    Check c(report, "waves", "self-roofing");
    Check trim(report, "waves", "trimmed-wave-is-wave");
    Check ess(report, "waves", "essential-path-criterion");
    c.guarded([&] {
      for (auto& w : pool) {
        c.expect(is_subset(w.vertices(), roofed(web, w.terminals())),
                 [&] { return w.to_string(); });
        const Wave trimmed = trim_wave({w, web});
        trim.expect(is_wave(web, trimmed.warp) && trim_wave(trimmed) == trimmed,
                    [&] { return w.to_string(); });
        const VertexSet e = essential_part(web, w.terminals());
        for (std::size_t k = 0; k < w.size(); ++k) {
          std::vector<Path> rest = w.paths();
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
          const bool essential = e.contains(w.paths()[k].terminal());
          ess.expect(essential == !is_wave(web, Warp(rest)), [&] {
            return w.to_string() + " path " + w.paths()[k].to_string();
          });
        }
      }
    });
  }
  {
    Check c(report, "waves", "wave-in-quotient");
    Check h(report, "waves", "hindrance-in-quotient");
    c.guarded([&] {
      for (auto& x : ctx.subsets) {
        const Web q = quotient_over(web, x);
        const bool sources_unroofed = !intersects(web.sources(), roofed(web, x));
        for (auto& w : pool) {
          const Warp wx = warp_quotient(w, x, web);
          c.expect(is_wave(q, wx),
                   [&] { return "U=" + w.to_string() + " X=" + show(x); });
          if (sources_unroofed && w.initials() != web.sources()) {
            h.expect(is_hindrance(q, wx),
                     [&] { return "H=" + w.to_string() + " S=" + show(x); });
          }
        }
      }
    });
  }
  {
    Check c(report, "waves", "arrow-of-waves");
    Check ess(report, "waves", "arrow-terminals-avoid-strict-roof");
    c.guarded([&] {
      for (auto [i, j] : ctx.pairs(pool.size())) {
        const Wave u{pool[i], web};
        const Wave w{pool[j], web};
        const Wave r = wave_arrow(u, w);
        const VertexSet rf = wave_roof(r);
        c.expect(is_subset(set_union(wave_roof(u), wave_roof(w)), rf), [&] {
          return "U=" + u.warp.to_string() + " W=" + w.warp.to_string();
        });
        ess.expect(!intersects(essential_part(web, r.warp.terminals()),
                               strictly_roofed(web, u.warp.terminals())),
                   [&] {
                     return "U=" + u.warp.to_string() + " W=" + w.warp.to_string();
                   });
      }
    });
  }
  {
    Check c(report, "waves", "star-of-waves");
    Check q(report, "waves", "quotient-over-wave-sources");
    c.guarded([&] {
      for (auto& w : pool) {
        const Wave wave{w, web};
        const Web over = wave_quotient(wave);
        q.expect(over == quotient_over(web, w.terminals()) &&
                     over.sources() == essential_part(web, w.terminals()),
                 [&] { return w.to_string(); });
        for (auto& v : oracle::enumerate_waves(over, ctx.options.budget)) {
          const Wave star = wave_star(wave, v);
          c.expect(is_wave(web, star.warp),
                   [&] { return "W=" + w.to_string() + " V=" + v.to_string(); });
        }
      }
    });
  }
  {
    Check c(report, "waves", "quotient-over-maximal-is-loose");
    Check top(report, "waves", "maximal-wave-roofs-every-wave");
    Check loose(report, "waves", "looseness-agrees-with-enumeration");
    Check same(report, "waves", "maximal-roofs-coincide");
    c.guarded([&] {
      const Wave m = maximal_wave(web);
      const auto quotient_waves =
          oracle::enumerate_waves(wave_quotient(m), ctx.options.budget);
      c.expect(is_wave(web, m.warp) && quotient_waves.size() == 1, [&] {
        return "M=" + m.warp.to_string() + " quotient has " +
               std::to_string(quotient_waves.size()) + " waves";
      });
      const VertexSet rf = wave_roof(m);
      for (auto& w : ctx.waves()) {
        top.expect(is_subset(roofed(web, w.terminals()), rf), [&] {
          return "M=" + m.warp.to_string() + " W=" + w.to_string();
        });
      }
      loose.expect(is_loose(web) == (ctx.waves().size() == 1),
                   [&] { return "oracle count " + std::to_string(ctx.waves().size()); });
      std::vector<VertexSet> roofs;
      for (auto& w : ctx.waves()) roofs.push_back(roofed(web, w.terminals()));
      std::optional<VertexSet> maximal;
      for (auto& r : roofs) {
        bool beaten = false;
        for (auto& other : roofs) {
          beaten = beaten || (other != r && is_subset(r, other));
        }
        if (beaten) continue;
        same.expect(!maximal || *maximal == r, [&] {
          return "roofs " + show(*maximal) + " and " + show(r);
        });
        maximal = r;
      }
    });
  }
  {
    Check c(report, "waves", "wave-after-deletion-passes-to-quotient");
    Check out(report, "waves", "separating-out-neighbours");
    c.guarded([&] {
      for (auto& x : ctx.non_source_subsets) {
        const Web minus = delete_web(web, x);
        const Web over = quotient_web(web, x);
        const VertexSet strict_x = strictly_roofed(web, x);
        const bool inner = !intersects(x, web.sinks());
        VertexSet out_neighbours;
        for (auto& v : x) {
          for (auto& s : web.successors(v)) {
            if (!x.contains(s)) out_neighbours.insert(s);
          }
        }
        for (auto& u : ctx.waves_after_deleting(x)) {
          const Warp ux = warp_quotient(u, x, web);
          const VertexSet rf_minus = roofed(minus, u.terminals());
          c.expect(is_wave(over, ux) &&
                       is_subset(set_difference(rf_minus, strict_x),
                                 roofed(over, ux.terminals())),
                   [&] { return "U=" + u.to_string() + " X=" + show(x); });
          if (inner && is_subset(out_neighbours, rf_minus)) {
            out.expect(is_wave(web, u),
                       [&] { return "U=" + u.to_string() + " Q=" + show(x); });
          }
        }
      }
    });
  }
  {
    Check c(report, "waves", "vertex-whose-deletion-hinders-ends-a-wave");
    c.guarded([&] {
      if (oracle::has_hindrance(web, ctx.options.budget)) return;
      for (auto& v : set_difference(web.vertices(), web.sources())) {
        const Web minus = delete_web(web, {v});
        const bool hindered =
            strands_a_source(web, {v}, minus) ||
            oracle::has_hindrance(minus, ctx.options.budget);
        if (!hindered) continue;
        bool found = false;
        for (auto& w : ctx.waves()) found = found || w.terminals().contains(v);
        c.expect(found, [&] { return "v=" + v; });
      }
    });
  }
}

// --- alternating ----------------------------------------------------------------

void alternating_lemmas(Context& ctx, Report& report) {
  const Web& web = ctx.web;
  {
    Check safe(report, "alternating", "safe-application-is-warp");
    Check unsafe(report, "alternating", "unsafe-path-shows-its-defect");
    safe.guarded([&] {
      for (std::size_t k = 0; k < ctx.options.samples; ++k) {
        const Warp y = gen::random_warp(web, ctx.rng(), 1 + ctx.rng().below(3));
        const auto q = gen::random_alternating(web, y, ctx.rng());
        if (!q) continue;
        if (is_safe(y, *q)) {
          const std::string why = safe_application_violation(web, y, *q);
          safe.expect(why.empty(), [&] { return why; });
        } else {
          const std::string why = unsafe_detection_violation(web, y, *q);
          unsafe.expect(why.empty(), [&] { return why; });
        }
      }
    });
  }
  {
    Check c(report, "alternating", "safe-alternating-families");
    c.guarded([&] {
      for (std::size_t k = 0; k < ctx.options.samples / 4 + 1; ++k) {
        const auto sc = gen::sap_case_in(web, ctx.rng());
        if (!sc) continue;
        const SapFamily family = sap_family(web, sc->z, sc->y);
        const std::string why = sap_family_violation(*sc, family);
        c.expect(why.empty(), [&] { return why; });
      }
    });
  }
}

// --- menger -----------------------------------------------------------------------

void menger_lemmas(Context& ctx, Report& report) {
  const Web& web = ctx.web;
  const auto& budget = ctx.options.budget;
  {
    Check c(report, "menger", "min-max");
    c.guarded([&] {
      const MengerStructure s = menger_structure(web);
      std::string why;
      const bool certified = menger_certificate_check(web, s, &why);
      const std::size_t nu = oracle::brute_nu(web, budget);
      const std::size_t sigma =
          brute_sigma(web, web.sources(), web.sinks(), budget.max_vertices);
      c.expect(certified && s.paths.size() == nu && nu == sigma, [&] {
        return "paths=" + std::to_string(s.paths.size()) +
               " nu=" + std::to_string(nu) + " sigma=" + std::to_string(sigma) +
               (certified ? "" : " certificate: " + why);
      });
    });
  }
  {
    Check aug(report, "menger", "augmenting-path-iff-not-maximum");
    Check grow(report, "menger", "augmentation-adds-one-path");
    Check block(report, "menger", "blocking-set-of-every-maximum-warp");
    aug.guarded([&] {
      if (!ctx.small_enough_for_paths()) {
        aug.skip("web too large for warp enumeration");
        return;
      }
      const std::size_t nu = oracle::brute_nu(web, budget);
      for (auto& y : gen::all_ab_warps(web)) {
        const auto q = find_augmenting(web, y);
        aug.expect(q.has_value() == (y.size() < nu),
                   [&] { return "Y=" + y.to_string(); });
        if (q) {
          const AlternatingCheck check = [&] {
            return check_alternating(&web, y, *q);
          }();
          const Warp next = apply_alternating(y, *q).path_part();
          bool ab = is_warp_in(web, next);
          for (auto& p : next.paths()) {
            ab = ab && web.sources().contains(p.initial()) &&
                 web.sinks().contains(p.terminal());
          }
          grow.expect(check.valid && check.augmenting &&
                          next.size() == y.size() + 1 && ab,
                      [&] { return "Y=" + y.to_string() + " Q=" + q->to_string(); });
        } else {
          const auto bl = blocking_vertices(web, y);
          VertexSet sep;
          for (auto& [p, v] : bl) sep.insert(v);
          block.expect(sep.size() == y.size() &&
                           is_separating(web, sep, web.sources(), web.sinks()),
                       [&] { return "Y=" + y.to_string() + " BL=" + show(sep); });
        }
      }
    });
  }
  {
    Check c(report, "menger", "hindered-iff-hindrance-exists");
    Check del(report, "menger", "hindrance-survives-deletion");
    Check safe(report, "menger", "safe-link-leaves-unhindered-residue");
    c.guarded([&] {
      const bool hindered = is_hindered(web);
      c.expect(hindered == oracle::has_hindrance(web, budget),
               [&] { return std::string("is_hindered=") + (hindered ? "yes" : "no"); });
      if (hindered) {
        for (auto& x : ctx.non_source_subsets) {
          del.expect(hindered_after_deleting(web, x),
                     [&] { return "X=" + show(x); });
        }
        return;
      }
      for (auto& a : web.sources()) {
        const Path p = safe_link(web, a);
        const Web residue = delete_web(web, p.vertex_set());
        safe.expect(p.initial() == a && web.sinks().contains(p.terminal()) &&
                        is_path_in(web, p) &&
                        !hindered_after_deleting(web, p.vertex_set()),
                    [&] { return "a=" + a + " P=" + p.to_string(); });
      }
    });
  }
}

// Independent reading of the two safety conditions.
struct Defects {
  std::vector<std::string> split_paths;
  bool fresh_cycle = false;
};

Defects inspect(const Warp& warp, const AlternatingPath& q) {
  Defects d;
  EdgeSet backward;
  EdgeSet forward;
  for (auto& link : q.links()) {
    for (auto& e : link.path.edges()) {
      (link.kind == LinkKind::kBackward ? backward : forward).insert(e);
    }
  }
  for (auto& p : warp.paths()) {
    std::vector<std::size_t> at;
    const auto edges = p.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (backward.contains(edges[k])) at.push_back(k);
    }
    if (!at.empty() && at.back() - at.front() + 1 != at.size()) {
      d.split_paths.push_back(p.to_string());
    }
  }
  const EdgeSet warp_edges = warp.edges();
  std::map<Vertex, std::vector<Vertex>> next;
  for (auto& e : forward) {
    if (!warp_edges.contains(e)) next[e.first].push_back(e.second);
  }
  std::map<Vertex, int> state;  // 1 on stack, 2 done
  std::function<bool(const Vertex&)> dfs = [&](const Vertex& v) {
    state[v] = 1;
    for (auto& w : next[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (auto& [v, outs] : next) {
    if (state[v] == 0 && dfs(v)) {
      d.fresh_cycle = true;
      break;
    }
  }
  return d;
}

// Edge set of a symmetric difference, computed directly.
EdgeSet toggled(const Warp& warp, const AlternatingPath& q) {
  EdgeSet out = warp.edges();
  for (auto& link : q.links()) {
    for (auto& e : link.path.edges()) {
      if (!out.erase(e)) out.insert(e);
    }
  }
  return out;
}

}  // namespace

Report lemma_suite(const Web& web, const Options& options) {
  Report report;
  Context ctx(web, options);
  auto wanted = [&](const std::string& family) {
    return options.families.empty() || options.families.contains(family);
  };
  if (wanted("warps")) warp_lemmas(ctx, report);
  if (wanted("separation")) separation_lemmas(ctx, report);
  if (wanted("waves")) wave_lemmas(ctx, report);
  if (wanted("alternating")) alternating_lemmas(ctx, report);
  if (wanted("menger")) menger_lemmas(ctx, report);
  return report;
}

std::string safe_application_violation(const Web& web, const Warp& warp,
                                       const AlternatingPath& q) {
  const AlternatingCheck check = check_alternating(&web, warp, q);
  if (!check.valid) return q.to_string() + " is not alternating: " + check.reason;
  if (!is_safe(warp, q)) return q.to_string() + " is not safe";
  const Defects d = inspect(warp, q);
  if (!d.split_paths.empty() || d.fresh_cycle) {
    return q.to_string() + " accepted as safe but has a defect";
  }
  const Cyclowarp result = apply_alternating(warp, q);
  if (!result.cycles().empty()) {
    return "applying " + q.to_string() + " to " + warp.to_string() +
           " left a cycle";
  }
  const Warp paths = result.path_part();
  if (!is_warp_in(web, paths)) {
    return "applying " + q.to_string() + " gave " + paths.to_string() +
           ", not a warp of the web";
  }
  if (paths.edges() != toggled(warp, q)) {
    return "applying " + q.to_string() + " has the wrong edge set";
  }
  const VertexSet touched = q.vertex_set();
  if (paths.isolated() != set_difference(warp.isolated(), touched)) {
    return "applying " + q.to_string() + " changed the singleton paths";
  }
  return {};
}

std::string unsafe_detection_violation(const Web& web, const Warp& warp,
                                       const AlternatingPath& q) {
  const AlternatingCheck check = check_alternating(&web, warp, q);
  if (!check.valid) return q.to_string() + " is not alternating: " + check.reason;
  if (is_safe(warp, q)) return q.to_string() + " was accepted as safe";
  const Defects d = inspect(warp, q);
  if (d.split_paths.empty() && !d.fresh_cycle) {
    return q.to_string() + " rejected without a visible defect";
  }
  if (d.fresh_cycle && apply_alternating(warp, q).cycles().empty()) {
    return "new edges of " + q.to_string() + " close a cycle the result lacks";
  }
  return {};
}

std::string sap_family_violation(const gen::SapCase& c,
                                 const SapFamily& family) {
  std::vector<Path> z_paths;
  VertexSet z_in;
  VertexSet z_ter;
  std::visit(
      [&](const auto& z) {
        z_paths = z.paths();
        z_in = z.initials();
        z_ter = z.terminals();
      },
      c.z);
  const VertexSet expected = set_difference(z_in, c.y.initials());
  VertexSet keys = family.stationary;
  for (auto& [z, q] : family.paths) keys.insert(z);
  if (keys != expected) {
    return "family covers " + to_string(keys) + " instead of " +
           to_string(expected);
  }
  auto inside_z = [&](const Path& piece) {
    for (auto& p : z_paths) {
      if (!p.contains(piece.initial()) || !p.contains(piece.terminal())) continue;
      const std::size_t from = p.index_of(piece.initial());
      if (from + piece.vertex_count() > p.vertex_count()) continue;
      if (std::equal(piece.vertices().begin(), piece.vertices().end(),
                     p.vertices().begin() + static_cast<std::ptrdiff_t>(from))) {
        return true;
      }
    }
    return false;
  };
  const VertexSet on_y = c.y.vertices();
  VertexSet ends;
  for (auto& [z, end] : family.terminals()) {
    if (!ends.insert(end).second) return "two members end at " + end;
    if (!z_ter.contains(end)) return "member from " + z + " ends off ter[Z]";
  }
  for (auto& [z, q] : family.paths) {
    const std::string who = "member " + q.to_string() + " from " + z;
    if (q.initial() != z) return who + " starts elsewhere";
    const AlternatingCheck check = check_alternating(&c.web, c.y, q);
    if (!check.valid) return who + " is invalid: " + check.reason;
    if (!check.leaving) return who + " does not leave V[Y]";
    if (!is_safe(c.y, q)) return who + " is not safe";
    for (auto& link : q.links()) {
      if (link.kind == LinkKind::kForward && !inside_z(link.path)) {
        return who + " has a forward link off Z";
      }
    }
    if (is_degenerate(c.y, q)) {
      const Cyclowarp applied = apply_alternating(c.y, q);
      for (auto& p : applied.paths()) {
        if (!p.contains(q.initial()) || !p.contains(q.terminal())) continue;
        if (!inside_z(p.segment(q.initial(), q.terminal()))) {
          return who + " is degenerate with a connecting path off Z";
        }
      }
    }
  }
  return {};
}

}  // namespace webcalc::lemmas
