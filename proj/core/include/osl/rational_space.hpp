#pragma once

#include <memory>
#include <string>
#include <vector>

#include "osl/ospace.hpp"

namespace osl {

// Exact-arithmetic backend over Q^n. Subspaces play the role of flats; the
// carrier (all rational vectors) is never materialized. The true flat family
// is infinite, so an instance carries a finite list of subspaces standing in
// for the family, and the axiom check is sampled rather than exhaustive.
class RationalOSpace final : public OSpace {
 public:
  RationalOSpace(int ambient, std::vector<Subspace> family,
                 int sample_budget = 200, std::string name = "rational");

  // Q^2 with the standard family shipped by the CLI as zoo:q2: the zero
  // space, both axes, the diagonal, the anti-diagonal and the full plane
  // (the smallest family containing zero, the axes and the diagonal that is
  // closed under complement and projection).
  static RationalOSpace standard_q2(int sample_budget = 200);

  int ambient() const { return ambient_; }
  int sample_budget() const { return sample_budget_; }
  const Subspace& ambient_flat() const { return carrier_; }

  // Deterministic sample vectors: coordinates p/q with p in {-2..2},
  // q in {1,2}, tuples in lexicographic order, zero vector skipped,
  // restricted to members of the carrier, capped by budget.
  std::vector<RationalVector> sample_vectors(int budget) const;

  std::string name() const override { return name_; }
  Flat complement(const Flat& a) const override;
  Flat intersect_flats(const Flat& a, const Flat& b) const override;
  Flat closure_union(const Flat& a, const Flat& b) const override;
  Flat zero() const override;
  Flat top() const override;
  const std::vector<Flat>& flats() const override;
  bool flat_subset(const Flat& a, const Flat& b) const override;
  bool finite_carrier() const override { return false; }
  std::unique_ptr<OSpace> restrict_to(const Flat& c) const override;
  AxiomReport check_axioms() const override;
  Flat parse_flat(std::string_view text) const override;

 private:
  int ambient_ = 1;
  Subspace carrier_;  // full(ambient) normally; a flat after restrict_to
  std::vector<Flat> family_;
  int sample_budget_ = 200;
  std::string name_;
};

// The sampled five-axiom check of the rational backend. S and Z hold
// structurally over Q (dot symmetry; only 0 is self-orthogonal) and are
// spot-checked on samples. F is checked on the finite list standing in for
// the family (members are flats, Z present, closed under complement and
// projection within the list); singleton closures of sampled vectors are
// verified to be flats. O and A are checked on the sample enumeration with
// set-level statements recast as subspace memberships.
AxiomReport check_axioms_sampled(const RationalOSpace& space,
                                 const std::vector<Flat>& flats_under_test,
                                 int sample_budget);

}  // namespace osl
