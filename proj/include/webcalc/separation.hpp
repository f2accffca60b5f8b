#pragma once

// Separation, roofing and the two ways of removing vertices from a web.

#include "webcalc/core.hpp"

namespace webcalc {

struct RoofReport {
  VertexSet separator;    // S
  VertexSet roofed;       // RF(S)
  VertexSet strict_roof;  // RF°(S) = RF(S) \ E(S)
  VertexSet essential;    // E(S)
  VertexSet inessential;  // S \ E(S)
};

// Every X-Y path meets S. False whenever X n Y is not inside S.
bool is_separating(const Web& web, const VertexSet& s, const VertexSet& x,
                   const VertexSet& y);

// RF(S): vertices all of whose paths to B meet S. Vertices with no path to
// B at all are included. E(S): members of S that reach B without passing
// through another member of S.
RoofReport roof(const Web& web, const VertexSet& s);

VertexSet roofed(const Web& web, const VertexSet& s);
VertexSet essential_part(const Web& web, const VertexSet& s);
VertexSet strictly_roofed(const Web& web, const VertexSet& s);

// Γ - X.
Web delete_web(const Web& web, const VertexSet& x);

// Γ/X for X inside V \ A. Edges into X and the vertices of RF°(X) are
// removed, the sources become E(A u X).
Web quotient_web(const Web& web, const VertexSet& x);

// The same construction without the X n A restriction, as used for quotients
// over wave terminals, which may include sources.
Web quotient_over(const Web& web, const VertexSet& x);

// Γ[S] for a roofed set S (RF(S) = S): the sub-web (D[S], S n A, E(S)).
Web induced_roofed(const Web& web, const VertexSet& s);

// Minimum size of an X-Y separating set, by exhaustive search over vertex
// subsets in order of size. Throws BudgetError above `vertex_bound`.
std::size_t brute_sigma(const Web& web, const VertexSet& x, const VertexSet& y,
                        std::size_t vertex_bound = default_oracle_bound());

}  // namespace webcalc
