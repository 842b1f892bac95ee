#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osl/proposition.hpp"

namespace osl {

// The ten primitive rules. Hypothesis is not a rule: it marks an assumed
// leaf in derivations from premises (the kernel itself stays at ten rules).
enum class RuleId {
  R1_Cut,
  R2_Exchange,
  R3_LeftWeakening,
  R4_RightWeakening,
  R5_Stuttering,
  R6_NegAtomic,
  R7_LeftAnd,
  R8_RightAnd,
  R9_NegVee1,
  R10_VeeIntro,
  Hypothesis,
};

int rule_premise_count(RuleId id);
std::string rule_short_name(RuleId id);  // "R6"
std::string rule_long_name(RuleId id);   // "NegAtomic"
std::optional<RuleId> rule_from_name(std::string_view name);

// Optional explicit metavariable instantiation; the checker re-derives
// instantiations and verifies supplied ones.
struct Bindings {
  std::map<std::string, PropPtr> formulas;                // alpha, beta, sigma
  std::map<std::string, std::vector<PropPtr>> sequences;  // Gamma, Delta
  bool empty() const { return formulas.empty() && sequences.empty(); }
};

// One proof line: an empty-right-hand-side sequent over the restricted
// language, justified by a rule applied to strictly earlier steps.
struct ProofStep {
  int index = 0;  // 1-based
  RuleId rule = RuleId::R6_NegAtomic;
  std::vector<int> premises;
  int hyp_index = -1;  // 1-based assumption index for Hypothesis steps
  Bindings bindings;
  std::vector<PropPtr> conclusion;  // left-hand side; right side empty
};

struct ProofScript {
  std::vector<PropPtr> goal;
  std::vector<std::vector<PropPtr>> assumptions;  // cited by Hypothesis steps
  std::vector<ProofStep> steps;
};

struct Violation {
  int step_index = 0;  // 0: script-level problem
  std::string message;
  int position = -1;  // first mismatching formula position, when known
  std::string to_string() const;
};

// nullopt: the step (or script) checks.
using CheckResult = std::optional<Violation>;

CheckResult check_step(const ProofScript& script, int step_pos);
CheckResult check_script(const ProofScript& script);

// nnf-negation, the realization of ¬ inside rule schemas; keeps every
// kernel formula inside L and is an involution there.
PropPtr negate_in_L(const PropPtr& p);

enum class DerivedRule {
  LogicalAxiom,   // alpha
  Repetition,     // Gamma, alpha, Delta
  Contraction,    // Gamma, alpha, Delta
  AndLeftElim,    // alpha, beta, Delta
  Circ,           // alpha, beta, gamma
  AndRightElim,   // Gamma, alpha, beta
  VeeLeftElim,    // alpha, beta, Delta
  VeeRightElim,   // Gamma, alpha, beta
};

std::optional<DerivedRule> derived_rule_from_name(std::string_view name);
std::string derived_rule_name(DerivedRule r);

// Expands the named derivation template into primitive steps; premises of
// premise-bearing templates become assumptions of the emitted script. The
// result always kernel-checks.
ProofScript expand_derived(DerivedRule rule, const Bindings& bindings);

// Script text format:
//   assume: <sequent>                      (zero or more)
//   goal: <sequent>
//   <i>: <RuleTag> [<bindings>] from <j>,<k> : <sequent>
// RuleTag is `R7 LeftAnd` (either half also accepted) or `Hyp <n>`.
// Bindings are `;`-separated `name=<prop>` or `name=<p1>,<p2>,...` pairs.
ProofScript parse_proof_script(std::string_view text);
ProofScript load_proof_script(const std::string& path);
std::string print_proof_script(const ProofScript& script);

// Incremental construction helper used by the expander and the prover.
class ScriptBuilder {
 public:
  explicit ScriptBuilder(std::vector<std::vector<PropPtr>> assumptions = {});
  int add_hyp(int hyp_index);  // returns the new step index
  int add(RuleId rule, std::vector<int> premises,
          std::vector<PropPtr> conclusion, Bindings bindings = {});
  const std::vector<PropPtr>& conclusion_of(int index) const;
  ProofScript finish(std::vector<PropPtr> goal) &&;

 private:
  ProofScript script_;
};

}  // namespace osl
