#pragma once

// Executable lemmas. Each check evaluates one statement of the calculus on
// every case drawn from a web (all subsets when the web is small, seeded
// samples otherwise) and records the first counterexample.

#include <set>

#include "webcalc/generators.hpp"
#include "webcalc/oracle.hpp"

namespace webcalc::lemmas {

struct Result {
  std::string family;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string witness;      // first counterexample
  std::string skip_reason;  // set when the check could not run

  bool passed() const { return failures == 0; }
};

struct Report {
  std::vector<Result> results;

  bool passed() const;
  std::size_t failures() const;
  // Adds counts of same-named results together, keeping the first witness.
  void merge(const Report& other);
  // One line per lemma: PASS/FAIL/SKIP, family/name, case count, witness.
  std::string to_text() const;
};

// Lemma families: "warps", "separation", "waves", "alternating", "menger".
const std::vector<std::string>& family_names();

struct Options {
  std::set<std::string> families;  // empty: every family
  oracle::EnumerationBudget budget;
  std::uint64_t seed = 1;
  // Webs with more vertices than this use sampled subsets.
  std::size_t exhaustive_vertices = 5;
  std::size_t samples = 48;
  // Warps asserted to be waves; each is checked and joins the wave pool.
  std::vector<Warp> claimed_waves;
};

Report lemma_suite(const Web& web, const Options& options = {});

// Stand-alone certificate checks shared with the acceptance suite. Each
// returns an empty string when the claim holds and a description of the
// first violation otherwise.

// Applying a safe path gives a cycle-free result whose paths form a warp of
// the web.
std::string safe_application_violation(const Web& web, const Warp& warp,
                                       const AlternatingPath& q);
// The path is valid, is_safe rejects it, and a second interval or a cycle
// of new edges is found by direct inspection.
std::string unsafe_detection_violation(const Web& web, const Warp& warp,
                                       const AlternatingPath& q);
// Every member is a valid, safe, Y-leaving [Z,Y]-alternating path from its
// key to ter[Z]; the keys are in[Z] \ in[Y]; the ends are distinct; a
// degenerate member's connecting path stays inside one Z-path.
std::string sap_family_violation(const gen::SapCase& c,
                                 const SapFamily& family);

}  // namespace webcalc::lemmas
