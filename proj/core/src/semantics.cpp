#include "osl/semantics.hpp"

#include <fstream>
#include <sstream>

#include "osl/errors.hpp"
#include "osl/model_zoo.hpp"

namespace osl {

Flat eval_prop(const OSpace& space, const Assignment& v, const PropPtr& p) {
  switch (p->kind) {
    case Prop::Kind::Atom: {
      auto it = v.find(p->atom);
      if (it == v.end()) throw EvalError("atom '" + p->atom + "' has no assigned flat");
      return it->second;
    }
    case Prop::Kind::Neg:
      return space.complement(eval_prop(space, v, p->lhs));
    case Prop::Kind::And:
      return space.project(eval_prop(space, v, p->lhs), eval_prop(space, v, p->rhs));
    case Prop::Kind::Or:
      return space.dual_sum(eval_prop(space, v, p->lhs), eval_prop(space, v, p->rhs));
  }
  throw StructuralError("malformed proposition node");
}

Flat eval_lhs(const OSpace& space, const Assignment& v,
              const std::vector<PropPtr>& lhs) {
  if (lhs.empty()) return space.top();
  Flat acc = eval_prop(space, v, lhs.front());
  for (size_t i = 1; i < lhs.size(); ++i)
    acc = space.project(acc, eval_prop(space, v, lhs[i]));
  return acc;
}

Flat eval_rhs(const OSpace& space, const Assignment& v,
              const std::vector<PropPtr>& rhs) {
  if (rhs.empty()) return space.zero();
  Flat acc = eval_prop(space, v, rhs.back());
  for (size_t i = rhs.size() - 1; i-- > 0;)
    acc = space.dual_sum(eval_prop(space, v, rhs[i]), acc);
  return acc;
}

bool eval_sequent_holds(const OSpace& space, const Assignment& v, const Sequent& s) {
  return space.flat_subset(eval_lhs(space, v, s.lhs), eval_rhs(space, v, s.rhs));
}

std::string CounterWitness::to_string() const {
  std::ostringstream out;
  out << "model: " << model_spec << "\n";
  for (const auto& [atom, flat] : assignment)
    out << atom << " = " << flat.to_string() << "\n";
  out << "lhs value: " << lhs_value.to_string() << "\n";
  out << "rhs value: " << rhs_value.to_string() << "\n";
  return out.str();
}

ValidityVerdict valid_in_model(const OSpace& space, const Sequent& s,
                               const ValidityCaps& caps,
                               const std::string& model_spec) {
  std::set<std::string> atom_set = atoms_of(s);
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  const auto& family = space.flats();
  if (family.empty()) throw StructuralError("space has an empty flat family");

  unsigned long long total = 1;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (total > caps.max_assignments / family.size() + 1)
      throw ResourceError("assignment space exceeds cap of " +
                          std::to_string(caps.max_assignments));
    total *= family.size();
  }
  if (total > caps.max_assignments)
    throw ResourceError("assignment space of " + std::to_string(total) +
                        " exceeds cap of " + std::to_string(caps.max_assignments));

  ValidityVerdict verdict;
  std::vector<size_t> idx(atoms.size(), 0);
  while (true) {
    Assignment v;
    for (size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = family[idx[i]];
    ++verdict.assignments_checked;
    Flat lhs = eval_lhs(space, v, s.lhs);
    Flat rhs = eval_rhs(space, v, s.rhs);
    if (!space.flat_subset(lhs, rhs)) {
      verdict.valid = false;
      verdict.witness = CounterWitness{
          model_spec.empty() ? space.name() : model_spec, std::move(v), lhs, rhs};
      return verdict;
    }
    // odometer, last atom fastest
    size_t pos = atoms.size();
    while (pos-- > 0) {
      if (++idx[pos] < family.size()) break;
      idx[pos] = 0;
      if (pos == 0) {
        verdict.valid = true;
        return verdict;
      }
    }
    if (atoms.empty()) {
      verdict.valid = true;
      return verdict;
    }
  }
}

std::optional<CounterWitness> find_countermodel(
    const Sequent& s, const std::vector<std::string>& model_specs,
    const ValidityCaps& caps) {
  for (const auto& spec : model_specs) {
    auto space = make_model(spec);
    ValidityVerdict verdict = valid_in_model(*space, s, caps, spec);
    if (!verdict.valid) return verdict.witness;
  }
  return std::nullopt;
}

Assignment parse_assignment_text(const OSpace& space, std::string_view text) {
  Assignment v;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    size_t nonspace = line.find_first_not_of(" \t\r");
    if (nonspace == std::string::npos) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("assignment line " + std::to_string(lineno) + ": expected '='");
    std::string atom = line.substr(0, eq);
    atom.erase(0, atom.find_first_not_of(" \t"));
    atom.erase(atom.find_last_not_of(" \t") + 1);
    if (atom.empty()) throw ParseError("assignment line " + std::to_string(lineno) +
                                       ": missing atom name");
    v[atom] = space.parse_flat(line.substr(eq + 1));
  }
  return v;
}

Assignment load_assignment(const OSpace& space, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open assignment file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_assignment_text(space, buf.str());
}

std::string save_assignment_text(const Assignment& v) {
  std::ostringstream out;
  for (const auto& [atom, flat] : v) out << atom << " = " << flat.to_string() << "\n";
  return out.str();
}

void save_assignment(const Assignment& v, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write assignment file " + path);
  out << save_assignment_text(v);
}

}  // namespace osl
