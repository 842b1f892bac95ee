#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "osl/subspace.hpp"

namespace osl {

// A subset of a finite carrier in canonical form: strictly ascending state
// indices. Whether it is a flat (closed under double complement) depends on
// the owning space; the type itself is just a canonical set.
class FiniteFlat {
 public:
  FiniteFlat() = default;
  explicit FiniteFlat(std::vector<int> elements);

  static FiniteFlat range(int n);  // {0, 1, ..., n-1}

  const std::vector<int>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  bool contains(int x) const;
  bool subset_of(const FiniteFlat& other) const;
  int max_element() const;  // -1 when empty

  bool operator==(const FiniteFlat&) const = default;

  std::string to_string() const;                  // {0,2,5}
  static FiniteFlat parse(std::string_view text); // accepts whitespace

 private:
  std::vector<int> elems_;
};

FiniteFlat set_union(const FiniteFlat& a, const FiniteFlat& b);
FiniteFlat set_intersect(const FiniteFlat& a, const FiniteFlat& b);
FiniteFlat set_difference(const FiniteFlat& a, const FiniteFlat& b);

// A flat of either backend. Finite spaces use canonical index sets, the
// rational backend uses canonical row-echelon subspaces; equality is
// structural in both cases.
class Flat {
 public:
  Flat() : repr_(FiniteFlat{}) {}
  explicit Flat(FiniteFlat f) : repr_(std::move(f)) {}
  explicit Flat(Subspace s) : repr_(std::move(s)) {}

  bool is_finite() const { return std::holds_alternative<FiniteFlat>(repr_); }
  const FiniteFlat& finite() const;
  const Subspace& subspace() const;

  bool operator==(const Flat&) const = default;

  std::string to_string() const;
  // Flat literal: `{0, 2}` for finite sets, `span[(1,0),(0,1)]` for subspaces.
  static Flat parse(std::string_view text);

 private:
  std::variant<FiniteFlat, Subspace> repr_;
};

}  // namespace osl
