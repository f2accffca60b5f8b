#include "webcalc/waves.hpp"

#include "webcalc/menger.hpp"
#include "webcalc/separation.hpp"

namespace webcalc {

bool is_wave(const Web& web, const Warp& warp) {
  return is_warp_in(web, warp) && is_subset(warp.initials(), web.sources()) &&
         is_separating(web, warp.terminals(), web.sources(), web.sinks());
}

bool is_hindrance(const Web& web, const Warp& warp) {
  return is_wave(web, warp) && warp.initials() != web.sources();
}

Wave make_wave(const Web& web, const Warp& warp) {
  if (!is_wave(web, warp)) {
    throw PreconditionError(warp.to_string() + " is not a wave");
  }
  return {warp, web};
}

Wave trivial_wave(const Web& web) {
  return {Warp::singletons(web.sources()), web};
}

VertexSet wave_roof(const Wave& wave) {
  return roofed(wave.host, wave.warp.terminals());
}

Wave trim_wave(const Wave& wave) {
  const VertexSet keep = essential_part(wave.host, wave.warp.terminals());
  std::vector<Path> paths;
  for (auto& p : wave.warp.paths()) {
    if (keep.contains(p.terminal())) paths.push_back(p);
  }
  return {Warp(std::move(paths)), wave.host};
}

WaveOrderWitness compare_waves(const Wave& left, const Wave& right) {
  if (!(left.host == right.host)) {
    throw PreconditionError("compare_waves: waves live in different webs");
  }
  WaveOrderWitness w{WaveRelation::kIncomparable, wave_roof(left),
                     wave_roof(right)};
  if (w.rf_left == w.rf_right) {
    w.relation = WaveRelation::kEquivalent;
  } else if (is_subset(w.rf_left, w.rf_right)) {
    w.relation = WaveRelation::kLess;
  } else if (is_subset(w.rf_right, w.rf_left)) {
    w.relation = WaveRelation::kGreater;
  }
  return w;
}

Web wave_quotient(const Wave& wave) {
  return quotient_over(wave.host, trim_wave(wave).warp.terminals());
}

Wave wave_arrow(const Wave& u, const Wave& v) {
  if (!(u.host == v.host)) {
    throw PreconditionError("wave_arrow: waves live in different webs");
  }
  Warp result = warp_arrow(u.warp, v.warp);
  if (!is_wave(u.host, result)) {
    throw InternalError("wave_arrow: " + result.to_string() + " is not a wave");
  }
  return {std::move(result), u.host};
}

Wave wave_star(const Wave& u, const Warp& v) {
  if (!is_wave(wave_quotient(u), v)) {
    throw PreconditionError("wave_star: " + v.to_string() +
                            " is not a wave of the quotient");
  }
  Warp result = warp_star(u.warp, v);
  if (!is_wave(u.host, result)) {
    throw InternalError("wave_star: " + result.to_string() + " is not a wave");
  }
  return {std::move(result), u.host};
}

Wave blocking_wave(const Web& web) {
  if (web.sources().empty()) return trivial_wave(web);
  const MengerStructure s = menger_structure(reverse_web(web));
  std::vector<Path> paths;
  for (auto& [path, chosen] : s.choice) {
    paths.push_back(path.reversed().prefix(chosen));
  }
  return make_wave(web, Warp(std::move(paths)));
}

namespace {

bool all_trivial(const Warp& warp) {
  for (auto& p : warp.paths()) {
    if (!p.trivial()) return false;
  }
  return true;
}

}  // namespace

Wave maximal_wave(const Web& web) {
  Wave current = trivial_wave(web);
  for (std::size_t round = 0; round <= web.vertices().size(); ++round) {
    const Wave step = blocking_wave(wave_quotient(current));
    if (all_trivial(step.warp)) return current;
    current = wave_star(current, step.warp);
  }
  throw InternalError("maximal_wave did not stabilise");
}

bool is_loose(const Web& web) { return all_trivial(blocking_wave(web).warp); }

}  // namespace webcalc
