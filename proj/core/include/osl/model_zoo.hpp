#pragma once

#include <memory>
#include <string>
#include <vector>

#include "osl/finite_space.hpp"
#include "osl/rational_space.hpp"

namespace osl {

// Classical physics: carrier {0..n-1}, x is orthogonal to y iff x != y,
// every subset is a flat. Projection collapses to intersection and dual sum
// to union.
FiniteOSpace classical_sets(int n);

// Carrier 2^Y for an m-element Y, indexed by bitmask (subset S at index
// sum 2^i). x is orthogonal to y iff the subsets are disjoint. Flats are
// exactly the powersets 2^B for B within Y.
FiniteOSpace powerset_space(int m);

// Disjoint sum: s1's states are shifted by |s0|, cross-component pairs are
// orthogonal, the family is the set of pairwise unions.
FiniteOSpace union_space(const FiniteOSpace& s0, const FiniteOSpace& s1);

struct LoadOptions {
  bool strict = false;  // strict: throw when the loaded space fails an axiom
};

struct LoadedModel {
  FiniteOSpace space;
  AxiomReport report;
};

// Text format, one statement per line, '#' starts a comment:
//   space <size>
//   orth <i> <j>        one line per unordered orthogonal pair
//   orth-one <i> <j>    directed entry (diagnostic input; see below)
//   flat <i1> <i2> ...  optional; no flat lines => family is generated
//
// `orth` implies symmetry (both directions are set). `orth-one` sets a
// single direction so that defective, asymmetric relations can be written
// down and diagnosed; save_model emits it only for asymmetric cells, hence
// canonical files round-trip bit-exactly.
LoadedModel load_model_text(std::string_view text, const LoadOptions& opts = {});
LoadedModel load_model(const std::string& path, const LoadOptions& opts = {});
std::string save_model_text(const FiniteOSpace& space);
void save_model(const FiniteOSpace& space, const std::string& path);

// Model specs accepted by the CLI and by find_countermodel:
//   zoo:sets:<n> | zoo:powerset:<m> | zoo:q2
//   zoo:union(<spec>,<spec>)
//   anything else is read as a model file path.
std::unique_ptr<OSpace> make_model(const std::string& spec,
                                   const LoadOptions& opts = {});

// The default refutation model list, simplest first.
std::vector<std::string> default_zoo_specs();

}  // namespace osl
