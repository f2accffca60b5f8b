#pragma once

// Waves, hindrances and maximal waves.

#include "webcalc/core.hpp"

namespace webcalc {

// An A-starting warp of `host` whose terminal set separates A from B.
struct Wave {
  Warp warp;
  Web host;

  bool operator==(const Wave&) const = default;
};

bool is_wave(const Web& web, const Warp& warp);
// A wave that misses some source.
bool is_hindrance(const Web& web, const Warp& warp);

// Throws PreconditionError unless the warp is a wave of the web.
Wave make_wave(const Web& web, const Warp& warp);
// ⟨A⟩.
Wave trivial_wave(const Web& web);

// RF(ter[W]).
VertexSet wave_roof(const Wave& wave);

// The essential paths: those ending in E(ter[W]).
Wave trim_wave(const Wave& wave);

enum class WaveRelation { kEquivalent, kLess, kGreater, kIncomparable };

struct WaveOrderWitness {
  WaveRelation relation;
  VertexSet rf_left;
  VertexSet rf_right;
};

// Compares roofed sets. Throws PreconditionError for different hosts.
WaveOrderWitness compare_waves(const Wave& left, const Wave& right);

// Γ/W, the quotient over the essential terminals.
Web wave_quotient(const Wave& wave);

Wave wave_arrow(const Wave& u, const Wave& v);

// W * V for a wave V of wave_quotient(W). Throws PreconditionError if V is
// not such a wave.
Wave wave_star(const Wave& u, const Warp& v);

// The wave made of the initial segments, up to the separator nearest B, of
// a maximum warp. Trivial exactly when the web is loose.
Wave blocking_wave(const Web& web);

// A wave with the largest roofed set; the quotient over it is loose.
Wave maximal_wave(const Web& web);

// No wave other than ⟨A⟩.
bool is_loose(const Web& web);

}  // namespace webcalc
