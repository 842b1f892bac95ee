#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osl/ospace.hpp"
#include "osl/proposition.hpp"

namespace osl {

// Atom name -> flat of the space's family.
using Assignment = std::map<std::string, Flat>;

// Structural recursion: atoms through the assignment, ~ -> complement,
// & -> projection, | -> dual sum. Throws EvalError on unassigned atoms.
Flat eval_prop(const OSpace& space, const Assignment& v, const PropPtr& p);

// Left side folds with projection associating to the left (empty side: X);
// right side folds with dual sum associating to the right (empty side: Z).
Flat eval_lhs(const OSpace& space, const Assignment& v,
              const std::vector<PropPtr>& lhs);
Flat eval_rhs(const OSpace& space, const Assignment& v,
              const std::vector<PropPtr>& rhs);

// Interpretation of the sequent: left value included in right value.
bool eval_sequent_holds(const OSpace& space, const Assignment& v,
                        const Sequent& s);

struct CounterWitness {
  std::string model_spec;  // re-loadable via make_model
  Assignment assignment;
  Flat lhs_value, rhs_value;

  std::string to_string() const;
};

struct ValidityVerdict {
  bool valid = false;
  std::optional<CounterWitness> witness;  // always present when not valid
  unsigned long long assignments_checked = 0;
};

struct ValidityCaps {
  unsigned long long max_assignments = 1'000'000;
};

// Exhaustive loop over |F|^#atoms assignments, atoms sorted by name, flats
// in family order, last atom varying fastest. Exceeding the cap raises
// ResourceError, never a silent "valid".
ValidityVerdict valid_in_model(const OSpace& space, const Sequent& s,
                               const ValidityCaps& caps = {},
                               const std::string& model_spec = "");

// First violating (model, assignment) over the given model specs, in order.
std::optional<CounterWitness> find_countermodel(
    const Sequent& s, const std::vector<std::string>& model_specs,
    const ValidityCaps& caps = {});

// Assignment file format: one `atom = <flat literal>` per line, '#'
// comments. Flat literals are `{i, j}` or `span[(1,0),...]`.
Assignment parse_assignment_text(const OSpace& space, std::string_view text);
Assignment load_assignment(const OSpace& space, const std::string& path);
std::string save_assignment_text(const Assignment& v);
void save_assignment(const Assignment& v, const std::string& path);

}  // namespace osl
