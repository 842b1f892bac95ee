#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "osl/matrix.hpp"

namespace osl {

// A linear subspace of Q^n, canonically represented by the reduced
// row-echelon basis of its row space. Equality is matrix equality.
class Subspace {
 public:
  Subspace() = default;  // zero subspace of Q^0

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span(int ambient, const std::vector<RationalVector>& vectors);
  static Subspace from_rref(int ambient, RationalMatrix canonical);

  int ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const RationalMatrix& basis() const { return basis_; }

  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return rank() == ambient_; }
  bool contains(const RationalVector& v) const;

  bool operator==(const Subspace&) const = default;

  std::string to_string() const;                   // span[(1,0),(0,1)]
  static Subspace parse(std::string_view text);    // whitespace-insensitive

 private:
  int ambient_ = 0;
  RationalMatrix basis_;  // rref, no zero rows
};

// All vectors orthogonal (dot product zero) to every element of a.
Subspace orth_subspace(const Subspace& a);

// Exact intersection: nullspace of the stacked constraint matrices.
Subspace intersect(const Subspace& a, const Subspace& b);

// Smallest subspace containing both (the closure of the set union).
Subspace subspace_sum(const Subspace& a, const Subspace& b);

// a included in b?
bool includes(const Subspace& a, const Subspace& b);

// Sasaki projection of a onto b: b ∩ (b ∩ a^perp)^perp, each step exact.
Subspace project_subspace(const Subspace& a, const Subspace& b);

// Dual sum: (b^perp projected-onto a^perp)^perp.
Subspace sum_dual(const Subspace& a, const Subspace& b);

}  // namespace osl
