#include "osl/finite_space.hpp"

#include <algorithm>

#include "osl/errors.hpp"

namespace osl {

FiniteOSpace::FiniteOSpace(int size, std::vector<std::vector<bool>> orth,
                           std::vector<FiniteFlat> flats, std::string name)
    : FiniteOSpace(from_raw(size, std::move(orth), std::move(flats), std::move(name))) {
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (orth_[i][j] != orth_[j][i])
        throw StructuralError("orthogonality matrix is not symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
}

FiniteOSpace FiniteOSpace::from_raw(int size, std::vector<std::vector<bool>> orth,
                                    std::vector<FiniteFlat> flats, std::string name) {
  if (size < 1) throw StructuralError("carrier size must be >= 1");
  if (static_cast<int>(orth.size()) != size)
    throw StructuralError("orthogonality matrix has wrong row count");
  for (const auto& row : orth)
    if (static_cast<int>(row.size()) != size)
      throw StructuralError("orthogonality matrix has wrong column count");
  FiniteOSpace s;
  s.size_ = size;
  s.orth_ = std::move(orth);
  s.name_ = std::move(name);
  for (auto& f : flats) {
    s.check_range(f);
    if (std::find(s.family_.begin(), s.family_.end(), f) != s.family_.end())
      continue;  // family is deduplicated by canonical form
    s.family_as_flats_.push_back(Flat(f));
    s.family_.push_back(std::move(f));
  }
  return s;
}

void FiniteOSpace::check_range(const FiniteFlat& f) const {
  if (f.max_element() >= size_)
    throw StructuralError("state index " + std::to_string(f.max_element()) +
                          " out of range for carrier of size " + std::to_string(size_));
}

FiniteFlat FiniteOSpace::complement_set(const FiniteFlat& a) const {
  check_range(a);
  std::vector<int> out;
  for (int b = 0; b < size_; ++b) {
    bool orth_to_all = true;
    for (int x : a.elements()) {
      if (!orth_[b][x]) {
        orth_to_all = false;
        break;
      }
    }
    if (orth_to_all) out.push_back(b);
  }
  return FiniteFlat(std::move(out));
}

FiniteFlat FiniteOSpace::closure_set(const FiniteFlat& a) const {
  return complement_set(complement_set(a));
}

FiniteFlat FiniteOSpace::project_set(const FiniteFlat& a, const FiniteFlat& b) const {
  FiniteFlat b_bar = closure_set(b);
  return set_intersect(
      b_bar, complement_set(set_intersect(b_bar, complement_set(a))));
}

FiniteFlat FiniteOSpace::dual_sum_set(const FiniteFlat& a, const FiniteFlat& b) const {
  return complement_set(project_set(complement_set(b), complement_set(a)));
}

FiniteFlat FiniteOSpace::zero_set() const {
  return complement_set(FiniteFlat::range(size_));
}

Flat FiniteOSpace::complement(const Flat& a) const {
  return Flat(complement_set(a.finite()));
}

Flat FiniteOSpace::intersect_flats(const Flat& a, const Flat& b) const {
  return Flat(set_intersect(a.finite(), b.finite()));
}

Flat FiniteOSpace::closure_union(const Flat& a, const Flat& b) const {
  return Flat(closure_set(set_union(a.finite(), b.finite())));
}

Flat FiniteOSpace::zero() const { return Flat(zero_set()); }

Flat FiniteOSpace::top() const { return Flat(FiniteFlat::range(size_)); }

const std::vector<Flat>& FiniteOSpace::flats() const { return family_as_flats_; }

bool FiniteOSpace::flat_subset(const Flat& a, const Flat& b) const {
  return a.finite().subset_of(b.finite());
}

std::vector<int> FiniteOSpace::carrier_states() const {
  return FiniteFlat::range(size_).elements();
}

bool FiniteOSpace::orthogonal(int a, int b) const {
  if (a < 0 || a >= size_ || b < 0 || b >= size_)
    throw StructuralError("state index out of range");
  return orth_[a][b];
}

Flat FiniteOSpace::singleton(int state) const {
  if (state < 0 || state >= size_) throw StructuralError("state index out of range");
  return Flat(FiniteFlat({state}));
}

bool FiniteOSpace::flat_contains(const Flat& a, int state) const {
  return a.finite().contains(state);
}

std::unique_ptr<OSpace> FiniteOSpace::restrict_to(const Flat& c) const {
  if (!in_family(c))
    throw PreconditionError("restriction carrier " + c.to_string() +
                            " is not a member of the family");
  return std::make_unique<FiniteRestriction>(*this, c.finite());
}

Flat FiniteOSpace::parse_flat(std::string_view text) const {
  Flat f(FiniteFlat::parse(text));
  check_range(f.finite());
  return f;
}

std::vector<FiniteFlat> generate_flat_family(
    int size, const std::vector<std::vector<bool>>& orth,
    const std::vector<FiniteFlat>& seeds, int cap) {
  FiniteOSpace scratch = FiniteOSpace::from_raw(size, orth, {}, "scratch");

  std::vector<FiniteFlat> family;
  auto push = [&](const FiniteFlat& f) {
    if (std::find(family.begin(), family.end(), f) != family.end()) return;
    if (static_cast<int>(family.size()) >= cap)
      throw ResourceError("flat family exceeds cap of " + std::to_string(cap));
    family.push_back(f);
  };

  for (const auto& s : seeds) push(scratch.closure_set(s));
  push(scratch.zero_set());
  for (int x = 0; x < size; ++x) push(scratch.closure_set(FiniteFlat({x})));

  // Fixpoint under complement and projection, scanning in index order.
  bool changed = true;
  while (changed) {
    changed = false;
    size_t n = family.size();
    for (size_t i = 0; i < n; ++i) {
      size_t before = family.size();
      push(scratch.complement_set(family[i]));
      if (family.size() != before) changed = true;
    }
    n = family.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        size_t before = family.size();
        push(scratch.project_set(family[i], family[j]));
        if (family.size() != before) changed = true;
      }
    }
  }
  return family;
}

FiniteRestriction::FiniteRestriction(FiniteOSpace base, FiniteFlat carrier)
    : base_(std::move(base)), carrier_(std::move(carrier)) {
  for (const auto& f : base_.flats())
    if (base_.flat_subset(f, Flat(carrier_))) family_.push_back(f);
}

std::string FiniteRestriction::name() const {
  return base_.name() + "|" + carrier_.to_string();
}

Flat FiniteRestriction::complement(const Flat& a) const {
  return Flat(set_intersect(base_.complement_set(a.finite()), carrier_));
}

Flat FiniteRestriction::intersect_flats(const Flat& a, const Flat& b) const {
  return base_.intersect_flats(a, b);
}

Flat FiniteRestriction::closure_union(const Flat& a, const Flat& b) const {
  // closure in the restriction = double relative complement
  return complement(complement(Flat(set_union(a.finite(), b.finite()))));
}

Flat FiniteRestriction::zero() const {
  return Flat(set_intersect(base_.zero_set(), carrier_));
}

Flat FiniteRestriction::top() const { return Flat(carrier_); }

const std::vector<Flat>& FiniteRestriction::flats() const { return family_; }

bool FiniteRestriction::flat_subset(const Flat& a, const Flat& b) const {
  return base_.flat_subset(a, b);
}

std::vector<int> FiniteRestriction::carrier_states() const {
  return carrier_.elements();
}

bool FiniteRestriction::orthogonal(int a, int b) const {
  if (!carrier_.contains(a) || !carrier_.contains(b))
    throw StructuralError("state outside the restriction carrier");
  return base_.orthogonal(a, b);
}

Flat FiniteRestriction::singleton(int state) const {
  if (!carrier_.contains(state))
    throw StructuralError("state outside the restriction carrier");
  return Flat(FiniteFlat({state}));
}

bool FiniteRestriction::flat_contains(const Flat& a, int state) const {
  return a.finite().contains(state);
}

std::unique_ptr<OSpace> FiniteRestriction::restrict_to(const Flat& c) const {
  if (!in_family(c))
    throw PreconditionError("restriction carrier " + c.to_string() +
                            " is not a member of the family");
  // F ∩ 2^C' = (F ∩ 2^C) ∩ 2^C' for C' within C, so restricting the base
  // directly gives the nested restriction.
  return std::make_unique<FiniteRestriction>(base_, c.finite());
}

Flat FiniteRestriction::parse_flat(std::string_view text) const {
  Flat f = base_.parse_flat(text);
  if (!f.finite().subset_of(carrier_))
    throw StructuralError("flat extends outside the restriction carrier");
  return f;
}

}  // namespace osl
