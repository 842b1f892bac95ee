#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osl/proof_kernel.hpp"
#include "osl/semantics.hpp"

namespace osl {

enum class CutPool {
  None,         // never apply Cut backward
  Subformulas,  // cut formulas: subformulas of the goal and their negations
};

struct SearchConfig {
  int max_depth = 8;
  CutPool cut_pool = CutPool::Subformulas;
  long node_budget = 200000;
};

struct SearchStats {
  long nodes = 0;
  int depth_reached = 0;
};

struct SearchOutcome {
  enum class Kind { Proved, Refuted, Exhausted };
  Kind kind = Kind::Exhausted;
  std::optional<ProofScript> script;      // Proved
  std::optional<CounterWitness> witness;  // Refuted
  SearchStats stats;

  bool proved() const { return kind == Kind::Proved; }
  bool refuted() const { return kind == Kind::Refuted; }
};

// Iterative-deepening backward search in the ten-rule system. The goal is
// normalized first. At each node: axiom closure (R6, R9), then the inverses
// of R7, R8, R10, R2, R5, R3, R4, then Cut over the configured pool.
// Stuttering is the main branching hazard (it deletes a formula and spawns a
// second obligation) and is limited to one application per branch. Every
// emitted script passes check_script. Exhaustion is reported as such, never
// as unprovability.
SearchOutcome prove(const Sequent& goal, const SearchConfig& cfg = {});

// Interleaves prove with countermodel search over the given models and
// returns whichever succeeds first.
SearchOutcome decide(const Sequent& goal, const SearchConfig& cfg = {},
                     const std::vector<std::string>& zoo_specs = {},
                     const ValidityCaps& caps = {});

// beta implies alpha: derivability of `beta, nnf(~alpha) |-`.
SearchOutcome implies(const PropPtr& beta, const PropPtr& alpha,
                      const SearchConfig& cfg = {});

// Both implications; equivalent iff both Proved.
std::pair<SearchOutcome, SearchOutcome> logically_equivalent(
    const PropPtr& alpha, const PropPtr& beta, const SearchConfig& cfg = {});

}  // namespace osl
