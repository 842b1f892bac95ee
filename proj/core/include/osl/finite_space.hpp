#pragma once

#include <memory>
#include <string>
#include <vector>

#include "osl/ospace.hpp"

namespace osl {

// Finite relational backend: a carrier {0..n-1}, a boolean orthogonality
// matrix and an explicit flat family.
class FiniteOSpace final : public OSpace {
 public:
  // Validates sizes, index ranges and symmetry of the matrix; a
  // non-symmetric matrix is rejected here (StructuralError).
  FiniteOSpace(int size, std::vector<std::vector<bool>> orth,
               std::vector<FiniteFlat> flats, std::string name = "finite");

  // Skips the symmetry check so that defective relations can be loaded for
  // diagnosis; check_axioms() reports the S failure instead.
  static FiniteOSpace from_raw(int size, std::vector<std::vector<bool>> orth,
                               std::vector<FiniteFlat> flats,
                               std::string name = "finite");

  int size() const { return size_; }
  const std::vector<std::vector<bool>>& orth_matrix() const { return orth_; }
  const std::vector<FiniteFlat>& family() const { return family_; }

  // Subset-level operations (arguments need not be flats).
  FiniteFlat complement_set(const FiniteFlat& a) const;
  FiniteFlat closure_set(const FiniteFlat& a) const;
  FiniteFlat project_set(const FiniteFlat& a, const FiniteFlat& b) const;
  FiniteFlat dual_sum_set(const FiniteFlat& a, const FiniteFlat& b) const;
  FiniteFlat zero_set() const;

  // OSpace interface.
  std::string name() const override { return name_; }
  Flat complement(const Flat& a) const override;
  Flat intersect_flats(const Flat& a, const Flat& b) const override;
  Flat closure_union(const Flat& a, const Flat& b) const override;
  Flat zero() const override;
  Flat top() const override;
  const std::vector<Flat>& flats() const override;
  bool flat_subset(const Flat& a, const Flat& b) const override;
  bool finite_carrier() const override { return true; }
  std::vector<int> carrier_states() const override;
  bool orthogonal(int a, int b) const override;
  Flat singleton(int state) const override;
  bool flat_contains(const Flat& a, int state) const override;
  std::unique_ptr<OSpace> restrict_to(const Flat& c) const override;
  Flat parse_flat(std::string_view text) const override;

 private:
  FiniteOSpace() = default;
  void check_range(const FiniteFlat& f) const;

  int size_ = 0;
  std::vector<std::vector<bool>> orth_;
  std::vector<FiniteFlat> family_;
  std::vector<Flat> family_as_flats_;  // same content, interface type
  std::string name_;
};

// Least family containing Z, every singleton closure and every seed closure,
// closed under complement and projection. Iteration order is deterministic:
// seeds, then singletons, then pairwise products in index order. Throws
// ResourceError when the family would exceed cap.
std::vector<FiniteFlat> generate_flat_family(
    int size, const std::vector<std::vector<bool>>& orth,
    const std::vector<FiniteFlat>& seeds, int cap = 4096);

// O-subspace view of a finite space: carrier c, relation restricted,
// family filtered. Flats keep parent indices.
class FiniteRestriction final : public OSpace {
 public:
  FiniteRestriction(FiniteOSpace base, FiniteFlat carrier);

  std::string name() const override;
  Flat complement(const Flat& a) const override;
  Flat intersect_flats(const Flat& a, const Flat& b) const override;
  Flat closure_union(const Flat& a, const Flat& b) const override;
  Flat zero() const override;
  Flat top() const override;
  const std::vector<Flat>& flats() const override;
  bool flat_subset(const Flat& a, const Flat& b) const override;
  bool finite_carrier() const override { return true; }
  std::vector<int> carrier_states() const override;
  bool orthogonal(int a, int b) const override;
  Flat singleton(int state) const override;
  bool flat_contains(const Flat& a, int state) const override;
  std::unique_ptr<OSpace> restrict_to(const Flat& c) const override;
  Flat parse_flat(std::string_view text) const override;

 private:
  FiniteOSpace base_;
  FiniteFlat carrier_;
  std::vector<Flat> family_;
};

}  // namespace osl
