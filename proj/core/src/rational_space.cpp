#include "osl/rational_space.hpp"

#include <algorithm>

#include "osl/errors.hpp"

namespace osl {

RationalOSpace::RationalOSpace(int ambient, std::vector<Subspace> family,
                               int sample_budget, std::string name)
    : ambient_(ambient),
      carrier_(Subspace::full(ambient)),
      sample_budget_(sample_budget),
      name_(std::move(name)) {
  if (ambient < 1) throw StructuralError("ambient dimension must be >= 1");
  for (auto& s : family) {
    if (s.ambient() != ambient)
      throw StructuralError("family member has wrong ambient dimension");
    Flat f(std::move(s));
    if (std::find(family_.begin(), family_.end(), f) == family_.end())
      family_.push_back(std::move(f));
  }
}

RationalOSpace RationalOSpace::standard_q2(int sample_budget) {
  auto vec = [](long a, long b) {
    return RationalVector{make_rational(a), make_rational(b)};
  };
  std::vector<Subspace> family{
      Subspace::zero(2),
      Subspace::span(2, {vec(1, 0)}),
      Subspace::span(2, {vec(0, 1)}),
      Subspace::span(2, {vec(1, 1)}),
      Subspace::span(2, {vec(1, -1)}),
      Subspace::full(2),
  };
  return RationalOSpace(2, std::move(family), sample_budget, "zoo:q2");
}

std::vector<RationalVector> RationalOSpace::sample_vectors(int budget) const {
  // Coordinate values p/q, p in {-2..2}, q in {1,2}, deduplicated in
  // generation order.
  std::vector<Rational> values;
  for (long p = -2; p <= 2; ++p)
    for (long q = 1; q <= 2; ++q) {
      Rational r = make_rational(p, q);
      if (std::find(values.begin(), values.end(), r) == values.end())
        values.push_back(r);
    }

  std::vector<RationalVector> out;
  std::vector<size_t> idx(static_cast<size_t>(ambient_), 0);
  while (true) {
    RationalVector v;
    v.reserve(static_cast<size_t>(ambient_));
    for (int i = 0; i < ambient_; ++i) v.push_back(values[idx[static_cast<size_t>(i)]]);
    if (!is_zero_vector(v) && carrier_.contains(v)) {
      out.push_back(std::move(v));
      if (static_cast<int>(out.size()) >= budget) break;
    }
    int pos = ambient_ - 1;
    while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == values.size()) {
      idx[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

Flat RationalOSpace::complement(const Flat& a) const {
  return Flat(intersect(orth_subspace(a.subspace()), carrier_));
}

Flat RationalOSpace::intersect_flats(const Flat& a, const Flat& b) const {
  return Flat(intersect(a.subspace(), b.subspace()));
}

Flat RationalOSpace::closure_union(const Flat& a, const Flat& b) const {
  return Flat(subspace_sum(a.subspace(), b.subspace()));
}

Flat RationalOSpace::zero() const { return Flat(Subspace::zero(ambient_)); }

Flat RationalOSpace::top() const { return Flat(carrier_); }

const std::vector<Flat>& RationalOSpace::flats() const { return family_; }

bool RationalOSpace::flat_subset(const Flat& a, const Flat& b) const {
  return includes(a.subspace(), b.subspace());
}

std::unique_ptr<OSpace> RationalOSpace::restrict_to(const Flat& c) const {
  if (!in_family(c))
    throw PreconditionError("restriction carrier " + c.to_string() +
                            " is not a member of the family");
  auto view = std::make_unique<RationalOSpace>(*this);
  view->carrier_ = c.subspace();
  view->name_ = name_ + "|" + c.to_string();
  view->family_.clear();
  for (const auto& f : family_)
    if (includes(f.subspace(), view->carrier_)) view->family_.push_back(f);
  return view;
}

AxiomReport RationalOSpace::check_axioms() const {
  return check_axioms_sampled(*this, family_, sample_budget_);
}

Flat RationalOSpace::parse_flat(std::string_view text) const {
  Flat f(Subspace::parse(text));
  if (f.subspace().ambient() != ambient_)
    throw StructuralError("subspace literal has wrong ambient dimension");
  if (!includes(f.subspace(), carrier_))
    throw StructuralError("subspace extends outside the restriction carrier");
  return f;
}

namespace {

bool in_list(const std::vector<Flat>& list, const Subspace& s) {
  for (const auto& f : list)
    if (f.subspace() == s) return true;
  return false;
}

}  // namespace

AxiomReport check_axioms_sampled(const RationalOSpace& space,
                                 const std::vector<Flat>& flats_under_test,
                                 int sample_budget) {
  AxiomReport report;
  std::vector<RationalVector> samples = space.sample_vectors(sample_budget);

  // S: dot products are symmetric over Q by commutativity of
  // multiplication; spot-check the samples anyway.
  {
    AxiomResult r{'S', true, ""};
    for (size_t i = 0; i < samples.size() && r.passed; ++i)
      for (size_t j = i; j < samples.size(); ++j)
        if (dot(samples[i], samples[j]) != dot(samples[j], samples[i])) {
          r = {'S', false,
               "dot asymmetry at " + vector_to_string(samples[i]) + ", " +
                   vector_to_string(samples[j])};
          break;
        }
    report.results.push_back(std::move(r));
  }

  // Z: over Q a vector with x·x = 0 is the zero vector (sum of squares);
  // verified on the samples, none of which is zero.
  {
    AxiomResult r{'Z', true, ""};
    for (const auto& v : samples)
      if (dot(v, v) == 0) {
        r = {'Z', false, "nonzero self-orthogonal vector " + vector_to_string(v)};
        break;
      }
    report.results.push_back(std::move(r));
  }

  // F on the finite list standing in for the family; singleton closures of
  // samples must be flats (their membership in the true family of all
  // subspaces is automatic).
  {
    AxiomResult r{'F', true, ""};
    for (const auto& f : flats_under_test) {
      if (!(space.closure(f) == f)) {
        r = {'F', false, "list member " + f.to_string() + " is not a flat"};
        break;
      }
      if (!in_list(flats_under_test, space.complement(f).subspace())) {
        r = {'F', false, "complement of " + f.to_string() + " missing from list"};
        break;
      }
    }
    if (r.passed && !in_list(flats_under_test, space.zero().subspace()))
      r = {'F', false, "zero subspace missing from list"};
    if (r.passed) {
      for (const auto& a : flats_under_test) {
        for (const auto& b : flats_under_test) {
          Flat p = space.project(a, b);
          if (!in_list(flats_under_test, p.subspace())) {
            r = {'F', false,
                 a.to_string() + " (x) " + b.to_string() + " missing from list"};
            break;
          }
        }
        if (!r.passed) break;
      }
    }
    if (r.passed) {
      for (const auto& v : samples) {
        Subspace ray = Subspace::span(space.ambient(), {v});
        if (!(space.closure(Flat(ray)) == Flat(ray))) {
          r = {'F', false,
               "singleton closure of " + vector_to_string(v) + " is not a flat"};
          break;
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  // O, recast at the subspace level with {x} = span{x}.
  {
    AxiomResult r{'O', true, ""};
    for (const auto& v : samples) {
      Flat ray(Subspace::span(space.ambient(), {v}));
      for (const auto& a : flats_under_test) {
        Flat onto = space.project(ray, a);
        Flat onto_c = space.project(ray, space.complement(a));
        if (!space.flat_subset(ray, space.closure_union(onto, onto_c))) {
          r = {'O', false,
               "span" + vector_to_string(v) +
                   " not within the sum of its projections for A=" + a.to_string()};
          break;
        }
        if (!space.flat_subset(onto, space.closure_union(ray, onto_c))) {
          r = {'O', false,
               "projection of span" + vector_to_string(v) +
                   " not within span{x} + {x}(x)A^c for A=" + a.to_string()};
          break;
        }
      }
      if (!r.passed) break;
    }
    report.results.push_back(std::move(r));
  }

  // A: the projection of a subspace is spanned by the projections of its
  // basis vectors; sampled members must project inside.
  {
    AxiomResult r{'A', true, ""};
    for (const auto& a : flats_under_test) {
      for (const auto& b : flats_under_test) {
        Flat product = space.project(a, b);
        Subspace pointwise = Subspace::zero(space.ambient());
        for (const auto& row : a.subspace().basis()) {
          Flat ray(Subspace::span(space.ambient(), {row}));
          pointwise = subspace_sum(pointwise, space.project(ray, b).subspace());
        }
        if (!(product.subspace() == pointwise)) {
          r = {'A', false,
               a.to_string() + " (x) " + b.to_string() +
                   " differs from the span of basis-vector projections"};
          break;
        }
        for (const auto& v : samples) {
          if (!a.subspace().contains(v)) continue;
          Flat ray(Subspace::span(space.ambient(), {v}));
          if (!space.flat_subset(space.project(ray, b), product)) {
            r = {'A', false,
                 "member " + vector_to_string(v) + " of " + a.to_string() +
                     " projects outside " + product.to_string()};
            break;
          }
        }
        if (!r.passed) break;
      }
      if (!r.passed) break;
    }
    report.results.push_back(std::move(r));
  }

  return report;
}

}  // namespace osl
