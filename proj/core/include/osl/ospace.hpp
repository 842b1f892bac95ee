#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "osl/flat.hpp"

namespace osl {

struct AxiomResult {
  char axiom = '?';  // one of S Z F O A
  bool passed = true;
  std::string witness;  // empty when passed
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_passed() const;
  const AxiomResult* failure(char axiom) const;
  std::string to_string() const;
};

// Uniform facade over the two backends. The carrier X, the orthogonality
// relation and the flat family F are behind this interface; projection and
// dual sum are always computed from the defining equation
//
//   A (x) B = closure(B) ∩ (closure(B) ∩ A^perp)^perp
//   A (+) B = (B^perp (x) A^perp)^perp
//
// in terms of the backend's complement and intersection. The algebraic
// identities these operations satisfy live in the test suite, never in the
// implementation.
class OSpace {
 public:
  virtual ~OSpace() = default;

  virtual std::string name() const = 0;

  virtual Flat complement(const Flat& a) const = 0;
  virtual Flat intersect_flats(const Flat& a, const Flat& b) const = 0;
  // closure of the set union of a and b (finite: closure(a ∪ b); rational:
  // subspace sum).
  virtual Flat closure_union(const Flat& a, const Flat& b) const = 0;

  Flat closure(const Flat& a) const;
  Flat project(const Flat& a, const Flat& b) const;   // A (x) B
  Flat dual_sum(const Flat& a, const Flat& b) const;  // A (+) B

  virtual Flat zero() const = 0;  // Z
  virtual Flat top() const = 0;   // X as a flat
  virtual const std::vector<Flat>& flats() const = 0;

  virtual bool flat_subset(const Flat& a, const Flat& b) const = 0;
  bool flat_equal(const Flat& a, const Flat& b) const { return a == b; }
  bool in_family(const Flat& a) const;

  // Finite-carrier access; throws StructuralError on the rational backend,
  // whose carrier is never materialized.
  virtual bool finite_carrier() const = 0;
  virtual std::vector<int> carrier_states() const;
  virtual bool orthogonal(int a, int b) const;
  virtual Flat singleton(int state) const;
  virtual bool flat_contains(const Flat& a, int state) const;

  // The O-subspace defined by c (which must belong to the family). Flats of
  // the restriction keep the parent representation, so results are directly
  // comparable with the parent's.
  virtual std::unique_ptr<OSpace> restrict_to(const Flat& c) const = 0;

  // Exhaustive on finite carriers; the rational backend overrides with its
  // sampled checker.
  virtual AxiomReport check_axioms() const;

  virtual Flat parse_flat(std::string_view text) const;
};

// x ~ y : both states are orthogonal to exactly the same states.
bool equivalent_states(const OSpace& space, int x, int y);

// The exhaustive five-axiom check for spaces with a finite carrier.
AxiomReport check_axioms_exhaustive(const OSpace& space);

}  // namespace osl
