#include "osl/ospace.hpp"

#include <sstream>

#include "osl/errors.hpp"

namespace osl {

bool AxiomReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

const AxiomResult* AxiomReport::failure(char axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom && !r.passed) return &r;
  return nullptr;
}

std::string AxiomReport::to_string() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << r.axiom << ": " << (r.passed ? "pass" : "FAIL");
    if (!r.passed) out << " (" << r.witness << ")";
    out << '\n';
  }
  return out.str();
}

Flat OSpace::closure(const Flat& a) const { return complement(complement(a)); }

Flat OSpace::project(const Flat& a, const Flat& b) const {
  Flat b_bar = closure(b);
  return intersect_flats(b_bar,
                         complement(intersect_flats(b_bar, complement(a))));
}

Flat OSpace::dual_sum(const Flat& a, const Flat& b) const {
  return complement(project(complement(b), complement(a)));
}

bool OSpace::in_family(const Flat& a) const {
  for (const auto& f : flats())
    if (f == a) return true;
  return false;
}

std::vector<int> OSpace::carrier_states() const {
  throw StructuralError(name() + ": carrier is not materialized");
}

bool OSpace::orthogonal(int, int) const {
  throw StructuralError(name() + ": carrier is not materialized");
}

Flat OSpace::singleton(int) const {
  throw StructuralError(name() + ": carrier is not materialized");
}

bool OSpace::flat_contains(const Flat&, int) const {
  throw StructuralError(name() + ": carrier is not materialized");
}

AxiomReport OSpace::check_axioms() const { return check_axioms_exhaustive(*this); }

Flat OSpace::parse_flat(std::string_view text) const { return Flat::parse(text); }

bool equivalent_states(const OSpace& space, int x, int y) {
  return space.complement(space.singleton(x)) ==
         space.complement(space.singleton(y));
}

namespace {

AxiomResult check_s(const OSpace& space, const std::vector<int>& states) {
  for (int a : states)
    for (int b : states)
      if (space.orthogonal(a, b) != space.orthogonal(b, a))
        return {'S', false,
                "orth(" + std::to_string(a) + "," + std::to_string(b) +
                    ") != orth(" + std::to_string(b) + "," + std::to_string(a) + ")"};
  return {'S', true, ""};
}

AxiomResult check_z(const OSpace& space, const std::vector<int>& states) {
  for (int a : states) {
    if (!space.orthogonal(a, a)) continue;
    for (int b : states)
      if (!space.orthogonal(a, b))
        return {'Z', false,
                "state " + std::to_string(a) + " is self-orthogonal but not orthogonal to " +
                    std::to_string(b)};
  }
  return {'Z', true, ""};
}

AxiomResult check_f(const OSpace& space, const std::vector<int>& states) {
  const auto& family = space.flats();
  for (const auto& f : family)
    if (!(space.closure(f) == f))
      return {'F', false, "family member " + f.to_string() + " is not a flat"};
  if (!space.in_family(space.zero()))
    return {'F', false, "Z = " + space.zero().to_string() + " missing from family"};
  for (int x : states) {
    Flat cl = space.closure(space.singleton(x));
    if (!space.in_family(cl))
      return {'F', false,
              "closure of singleton {" + std::to_string(x) + "} = " + cl.to_string() +
                  " missing from family"};
  }
  for (const auto& f : family)
    if (!space.in_family(space.complement(f)))
      return {'F', false,
              "complement of " + f.to_string() + " = " +
                  space.complement(f).to_string() + " missing from family"};
  for (const auto& a : family)
    for (const auto& b : family) {
      Flat p = space.project(a, b);
      if (!space.in_family(p))
        return {'F', false,
                a.to_string() + " (x) " + b.to_string() + " = " + p.to_string() +
                    " missing from family"};
    }
  return {'F', true, ""};
}

AxiomResult check_o(const OSpace& space, const std::vector<int>& states) {
  for (int x : states) {
    Flat sx = space.singleton(x);
    for (const auto& a : space.flats()) {
      Flat onto = space.project(sx, a);
      Flat onto_c = space.project(sx, space.complement(a));
      if (!space.flat_contains(space.closure_union(onto, onto_c), x))
        return {'O', false,
                "x=" + std::to_string(x) + " not in closure({x}(x)A ∪ {x}(x)A^c) for A=" +
                    a.to_string()};
      if (!space.flat_subset(onto, space.closure_union(sx, onto_c)))
        return {'O', false,
                "{x}(x)A not within closure({x} ∪ {x}(x)A^c) for x=" +
                    std::to_string(x) + ", A=" + a.to_string()};
    }
  }
  return {'O', true, ""};
}

AxiomResult check_a(const OSpace& space) {
  for (const auto& a : space.flats()) {
    for (const auto& b : space.flats()) {
      Flat product = space.project(a, b);
      // union of the pointwise projections, as a raw set
      FiniteFlat pointwise;
      for (int s : a.finite().elements())
        pointwise = set_union(pointwise, space.project(space.singleton(s), b).finite());
      if (!product.finite().subset_of(pointwise))
        return {'A', false,
                a.to_string() + " (x) " + b.to_string() +
                    " not within the union of pointwise projections"};
    }
  }
  return {'A', true, ""};
}

}  // namespace

AxiomReport check_axioms_exhaustive(const OSpace& space) {
  if (!space.finite_carrier())
    throw StructuralError("exhaustive axiom check needs a finite carrier");
  std::vector<int> states = space.carrier_states();
  AxiomReport report;
  report.results.push_back(check_s(space, states));
  report.results.push_back(check_z(space, states));
  report.results.push_back(check_f(space, states));
  report.results.push_back(check_o(space, states));
  report.results.push_back(check_a(space));
  return report;
}

}  // namespace osl
