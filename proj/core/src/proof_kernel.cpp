#include "osl/proof_kernel.hpp"

#include <fstream>
#include <sstream>

#include "osl/errors.hpp"

namespace osl {

namespace {

struct RuleMeta {
  RuleId id;
  const char* short_name;
  const char* long_name;
  int premises;
};

constexpr RuleMeta kRules[] = {
    {RuleId::R1_Cut, "R1", "Cut", 2},
    {RuleId::R2_Exchange, "R2", "Exchange", 1},
    {RuleId::R3_LeftWeakening, "R3", "LeftWeakening", 1},
    {RuleId::R4_RightWeakening, "R4", "RightWeakening", 1},
    {RuleId::R5_Stuttering, "R5", "Stuttering", 2},
    {RuleId::R6_NegAtomic, "R6", "NegAtomic", 0},
    {RuleId::R7_LeftAnd, "R7", "LeftAnd", 1},
    {RuleId::R8_RightAnd, "R8", "RightAnd", 1},
    {RuleId::R9_NegVee1, "R9", "NegVee1", 0},
    {RuleId::R10_VeeIntro, "R10", "VeeIntro", 2},
    {RuleId::Hypothesis, "Hyp", "Hypothesis", 0},
};

const RuleMeta& meta(RuleId id) {
  for (const auto& m : kRules)
    if (m.id == id) return m;
  throw StructuralError("unknown rule id");
}

}  // namespace

int rule_premise_count(RuleId id) { return meta(id).premises; }
std::string rule_short_name(RuleId id) { return meta(id).short_name; }
std::string rule_long_name(RuleId id) { return meta(id).long_name; }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& m : kRules)
    if (name == m.short_name || name == m.long_name) return m.id;
  return std::nullopt;
}

PropPtr negate_in_L(const PropPtr& p) { return negate_restricted(p); }

std::string Violation::to_string() const {
  std::ostringstream out;
  if (step_index > 0) out << "step " << step_index << ": ";
  out << message;
  if (position >= 0) out << " (position " << position << ")";
  return out.str();
}

// ---------------- step checking ----------------

namespace {

using Formulas = std::vector<PropPtr>;

std::string seq_str(const Formulas& fs) {
  Sequent s;
  s.lhs = fs;
  return print_sequent(s);
}

int first_mismatch(const Formulas& a, const Formulas& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i)
    if (!prop_equal(a[i], b[i])) return static_cast<int>(i);
  return a.size() == b.size() ? -1 : static_cast<int>(n);
}

Formulas splice(const Formulas& prefix_src, size_t k, const Formulas& mid,
                const Formulas& suffix_src, size_t suffix_from) {
  Formulas out(prefix_src.begin(), prefix_src.begin() + static_cast<long>(k));
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), suffix_src.begin() + static_cast<long>(suffix_from),
             suffix_src.end());
  return out;
}

// Bindings are advisory: when present they must agree with the match.
const PropPtr* bound(const Bindings& b, const char* name) {
  auto it = b.formulas.find(name);
  return it == b.formulas.end() ? nullptr : &it->second;
}

struct StepContext {
  const ProofScript& script;
  const ProofStep& step;
  std::vector<const Formulas*> premises;  // resolved, in citation order
};

CheckResult match_r1(const StepContext& ctx) {
  const Formulas& c = ctx.step.conclusion;
  const Formulas& p1 = *ctx.premises[0];
  const Formulas& p2 = *ctx.premises[1];
  if (p1.size() != c.size() + 1 || p2.size() != c.size() + 1)
    return Violation{ctx.step.index,
                     "Cut premises must each have one formula more than the conclusion",
                     first_mismatch(p1, c)};
  const PropPtr* want = bound(ctx.step.bindings, "alpha");
  for (size_t k = 0; k <= c.size(); ++k) {
    const PropPtr& cut = p1[k];
    if (want && !prop_equal(*want, cut)) continue;
    if (!lhs_equal(p1, splice(c, k, {cut}, c, k))) continue;
    if (lhs_equal(p2, splice(c, k, {negate_in_L(cut)}, c, k))) return std::nullopt;
  }
  return Violation{ctx.step.index,
                   "no cut position matches both premises against " + seq_str(c),
                   first_mismatch(p1, c)};
}

CheckResult match_r2(const StepContext& ctx) {
  const Formulas& c = ctx.step.conclusion;
  const Formulas& p = *ctx.premises[0];
  if (c.size() != 2 || p.size() != 2)
    return Violation{ctx.step.index,
                     "Exchange applies only to two-formula sequents", 0};
  if (prop_equal(c[0], p[1]) && prop_equal(c[1], p[0])) return std::nullopt;
  return Violation{ctx.step.index, "conclusion is not the premise swapped",
                   first_mismatch(c, {p[1], p[0]})};
}

CheckResult match_r3(const StepContext& ctx) {
  const Formulas& c = ctx.step.conclusion;
  const Formulas& p = *ctx.premises[0];
  if (c.size() != p.size() + 1)
    return Violation{ctx.step.index,
                     "LeftWeakening adds exactly one leftmost formula", -1};
  if (const PropPtr* a = bound(ctx.step.bindings, "alpha"))
    if (!prop_equal(*a, c.front()))
      return Violation{ctx.step.index, "bound alpha differs from the added formula", 0};
  Formulas tail(c.begin() + 1, c.end());
  if (lhs_equal(tail, p)) return std::nullopt;
  return Violation{ctx.step.index, "conclusion tail differs from the premise",
                   1 + first_mismatch(tail, p)};
}

CheckResult match_r4(const StepContext& ctx) {
  const Formulas& c = ctx.step.conclusion;
  const Formulas& p = *ctx.premises[0];
  if (c.size() != p.size() + 1)
    return Violation{ctx.step.index,
                     "RightWeakening adds exactly one rightmost formula", -1};
  if (const PropPtr* a = bound(ctx.step.bindings, "alpha"))
    if (!prop_equal(*a, c.back()))
      return Violation{ctx.step.index, "bound alpha differs from the added formula",
                       static_cast<int>(c.size()) - 1};
  Formulas head(c.begin(), c.end() - 1);
  if (lhs_equal(head, p)) return std::nullopt;
  return Violation{ctx.step.index, "conclusion head differs from the premise",
                   first_mismatch(head, p)};
}

CheckResult match_r5(const StepContext& ctx) {
  const Formulas& c = ctx.step.conclusion;
  const Formulas& p1 = *ctx.premises[0];  // Gamma, Delta
  const Formulas& p2 = *ctx.premises[1];  // Gamma, alpha
  if (c.empty())
    return Violation{ctx.step.index, "Stuttering conclusion cannot be empty", -1};
  const PropPtr* want = bound(ctx.step.bindings, "alpha");
  for (size_t k = 0; k < c.size(); ++k) {
    PropPtr alpha = negate_in_L(c[k]);  // c[k] plays ~alpha
    if (want && !prop_equal(*want, alpha)) continue;
    Formulas gamma(c.begin(), c.begin() + static_cast<long>(k));
    Formulas gd = gamma;
    gd.insert(gd.end(), c.begin() + static_cast<long>(k) + 1, c.end());
    if (!lhs_equal(p1, gd)) continue;
    Formulas ga = gamma;
    ga.push_back(alpha);
    if (lhs_equal(p2, ga)) return std::nullopt;
  }
  return Violation{ctx.step.index,
                   "no insertion position matches the Stuttering premises", -1};
}

CheckResult match_r6(const StepContext& ctx) {
  const Formulas& c = ctx.step.conclusion;
  if (c.size() != 2)
    return Violation{ctx.step.index, "NegAtomic concludes a two-formula sequent", -1};
  if (c[0]->kind != Prop::Kind::Atom)
    return Violation{ctx.step.index, "NegAtomic is restricted to atomic propositions", 0};
  if (const PropPtr* s = bound(ctx.step.bindings, "sigma"))
    if (!prop_equal(*s, c[0]))
      return Violation{ctx.step.index, "bound sigma differs from the conclusion", 0};
  if (!prop_equal(c[1], negate_in_L(c[0])))
    return Violation{ctx.step.index, "second formula is not the negated atom", 1};
  return std::nullopt;
}

CheckResult match_r7(const StepContext& ctx) {
  const Formulas& c = ctx.step.conclusion;
  const Formulas& p = *ctx.premises[0];
  if (c.empty() || c[0]->kind != Prop::Kind::And)
    return Violation{ctx.step.index, "LeftAnd needs a conjunction leftmost", 0};
  Formulas expect{c[0]->lhs, c[0]->rhs};
  expect.insert(expect.end(), c.begin() + 1, c.end());
  if (lhs_equal(p, expect)) return std::nullopt;
  return Violation{ctx.step.index, "premise is not the split conjunction",
                   first_mismatch(p, expect)};
}

CheckResult match_r8(const StepContext& ctx) {
  const Formulas& c = ctx.step.conclusion;
  const Formulas& p = *ctx.premises[0];
  if (c.empty() || c.back()->kind != Prop::Kind::And)
    return Violation{ctx.step.index, "RightAnd needs a conjunction rightmost",
                     static_cast<int>(c.size()) - 1};
  // from Gamma, alpha, beta infer Gamma, beta & alpha: note the order swap
  PropPtr beta = c.back()->lhs;
  PropPtr alpha = c.back()->rhs;
  Formulas expect(c.begin(), c.end() - 1);
  expect.push_back(alpha);
  expect.push_back(beta);
  if (lhs_equal(p, expect)) return std::nullopt;
  return Violation{ctx.step.index,
                   "premise must end with the conjuncts in swapped order",
                   first_mismatch(p, expect)};
}

CheckResult match_r9(const StepContext& ctx) {
  const Formulas& c = ctx.step.conclusion;
  if (c.size() != 3)
    return Violation{ctx.step.index, "NegVee1 concludes a three-formula sequent", -1};
  if (c[2]->kind != Prop::Kind::Or)
    return Violation{ctx.step.index, "NegVee1 needs a disjunction rightmost", 2};
  PropPtr beta = c[2]->lhs;
  PropPtr alpha = c[2]->rhs;
  if (const PropPtr* a = bound(ctx.step.bindings, "alpha"))
    if (!prop_equal(*a, alpha))
      return Violation{ctx.step.index, "bound alpha differs from the disjunct", 2};
  if (const PropPtr* b = bound(ctx.step.bindings, "beta"))
    if (!prop_equal(*b, beta))
      return Violation{ctx.step.index, "bound beta differs from the disjunct", 2};
  if (!prop_equal(c[0], negate_in_L(alpha)))
    return Violation{ctx.step.index, "first formula is not the negated right disjunct", 0};
  if (!prop_equal(c[1], negate_in_L(beta)))
    return Violation{ctx.step.index, "second formula is not the negated left disjunct", 1};
  return std::nullopt;
}

CheckResult match_r10(const StepContext& ctx) {
  const Formulas& c = ctx.step.conclusion;
  const Formulas& p1 = *ctx.premises[0];
  const Formulas& p2 = *ctx.premises[1];
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k]->kind != Prop::Kind::Or) continue;
    PropPtr alpha = c[k]->lhs;
    PropPtr beta = c[k]->rhs;
    if (!lhs_equal(p1, splice(c, k, {alpha}, c, k + 1))) continue;
    if (lhs_equal(p2, splice(c, k, {negate_in_L(alpha), beta}, c, k + 1)))
      return std::nullopt;
  }
  return Violation{ctx.step.index,
                   "no disjunction position matches the VeeIntro premises", -1};
}

}  // namespace

CheckResult check_step(const ProofScript& script, int step_pos) {
  const ProofStep& step = script.steps[static_cast<size_t>(step_pos)];
  if (step.index != step_pos + 1)
    return Violation{step.index, "step indices must be consecutive from 1", -1};
  for (const auto& f : step.conclusion)
    if (!is_restricted(f))
      return Violation{step.index,
                       "formula " + print_prop(f) + " is outside the restricted language"};

  if (step.rule == RuleId::Hypothesis) {
    if (step.hyp_index < 1 ||
        step.hyp_index > static_cast<int>(script.assumptions.size()))
      return Violation{step.index, "hypothesis index out of range", -1};
    if (!lhs_equal(step.conclusion,
                   script.assumptions[static_cast<size_t>(step.hyp_index - 1)]))
      return Violation{step.index, "conclusion differs from the cited assumption",
                       -1};
    return std::nullopt;
  }

  if (static_cast<int>(step.premises.size()) != rule_premise_count(step.rule))
    return Violation{step.index,
                     rule_short_name(step.rule) + " expects " +
                         std::to_string(rule_premise_count(step.rule)) + " premise(s)"};
  StepContext ctx{script, step, {}};
  for (int p : step.premises) {
    if (p < 1 || p > step.index - 1)
      return Violation{step.index,
                       "premise " + std::to_string(p) + " is not an earlier step"};
    ctx.premises.push_back(&script.steps[static_cast<size_t>(p - 1)].conclusion);
  }

  switch (step.rule) {
    case RuleId::R1_Cut: return match_r1(ctx);
    case RuleId::R2_Exchange: return match_r2(ctx);
    case RuleId::R3_LeftWeakening: return match_r3(ctx);
    case RuleId::R4_RightWeakening: return match_r4(ctx);
    case RuleId::R5_Stuttering: return match_r5(ctx);
    case RuleId::R6_NegAtomic: return match_r6(ctx);
    case RuleId::R7_LeftAnd: return match_r7(ctx);
    case RuleId::R8_RightAnd: return match_r8(ctx);
    case RuleId::R9_NegVee1: return match_r9(ctx);
    case RuleId::R10_VeeIntro: return match_r10(ctx);
    case RuleId::Hypothesis: break;  // handled above
  }
  return Violation{step.index, "unreachable rule dispatch"};
}

CheckResult check_script(const ProofScript& script) {
  for (const auto& f : script.goal)
    if (!is_restricted(f))
      return Violation{0, "goal formula " + print_prop(f) +
                              " is outside the restricted language"};
  if (script.steps.empty())
    return Violation{0, "empty script cannot establish the goal"};
  for (size_t i = 0; i < script.steps.size(); ++i)
    if (CheckResult v = check_step(script, static_cast<int>(i))) return v;
  if (!lhs_equal(script.steps.back().conclusion, script.goal))
    return Violation{static_cast<int>(script.steps.size()),
                     "last conclusion differs from the goal"};
  return std::nullopt;
}

// ---------------- derived-rule expansion ----------------

ScriptBuilder::ScriptBuilder(std::vector<std::vector<PropPtr>> assumptions) {
  script_.assumptions = std::move(assumptions);
}

int ScriptBuilder::add_hyp(int hyp_index) {
  ProofStep step;
  step.index = static_cast<int>(script_.steps.size()) + 1;
  step.rule = RuleId::Hypothesis;
  step.hyp_index = hyp_index;
  step.conclusion = script_.assumptions.at(static_cast<size_t>(hyp_index - 1));
  script_.steps.push_back(std::move(step));
  return static_cast<int>(script_.steps.size());
}

int ScriptBuilder::add(RuleId rule, std::vector<int> premises,
                       std::vector<PropPtr> conclusion, Bindings bindings) {
  ProofStep step;
  step.index = static_cast<int>(script_.steps.size()) + 1;
  step.rule = rule;
  step.premises = std::move(premises);
  step.conclusion = std::move(conclusion);
  step.bindings = std::move(bindings);
  script_.steps.push_back(std::move(step));
  return static_cast<int>(script_.steps.size());
}

const std::vector<PropPtr>& ScriptBuilder::conclusion_of(int index) const {
  return script_.steps.at(static_cast<size_t>(index - 1)).conclusion;
}

ProofScript ScriptBuilder::finish(std::vector<PropPtr> goal) && {
  script_.goal = std::move(goal);
  return std::move(script_);
}

namespace {

using Formulas = std::vector<PropPtr>;

Formulas cat(std::initializer_list<Formulas> parts) {
  Formulas out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const Formulas& seq_binding(const Bindings& b, const char* name) {
  static const Formulas empty;
  auto it = b.sequences.find(name);
  return it == b.sequences.end() ? empty : it->second;
}

PropPtr formula_binding(const Bindings& b, const char* name) {
  auto it = b.formulas.find(name);
  if (it == b.formulas.end())
    throw PreconditionError(std::string("missing formula binding '") + name + "'");
  if (!is_restricted(it->second))
    throw PreconditionError(std::string("binding '") + name +
                            "' is outside the restricted language");
  return it->second;
}

// alpha, ~alpha |- with the ~ pushed through by negate_in_L; closes in at
// most three primitive steps, by case on the head connective.
int emit_logical_axiom(ScriptBuilder& b, const PropPtr& alpha) {
  PropPtr neg = negate_in_L(alpha);
  switch (alpha->kind) {
    case Prop::Kind::Atom:
      return b.add(RuleId::R6_NegAtomic, {}, {alpha, neg},
                   Bindings{{{"sigma", alpha}}, {}});
    case Prop::Kind::Neg: {
      // ~sigma, sigma |- via NegAtomic then Exchange
      PropPtr sigma = alpha->lhs;
      int ax = b.add(RuleId::R6_NegAtomic, {}, {sigma, alpha},
                     Bindings{{{"sigma", sigma}}, {}});
      return b.add(RuleId::R2_Exchange, {ax}, {alpha, sigma});
    }
    case Prop::Kind::And: {
      // beta, gamma, ~gamma | ~beta |- then LeftAnd
      PropPtr beta = alpha->lhs, gamma = alpha->rhs;
      int ax = b.add(RuleId::R9_NegVee1, {}, {beta, gamma, neg});
      return b.add(RuleId::R7_LeftAnd, {ax}, {alpha, neg});
    }
    case Prop::Kind::Or: {
      // ~gamma, ~beta, beta | gamma |- then LeftAnd, Exchange
      PropPtr beta = alpha->lhs, gamma = alpha->rhs;
      int ax = b.add(RuleId::R9_NegVee1, {},
                     {negate_in_L(gamma), negate_in_L(beta), alpha});
      int join = b.add(RuleId::R7_LeftAnd, {ax}, {neg, alpha});
      return b.add(RuleId::R2_Exchange, {join}, {alpha, neg});
    }
  }
  throw StructuralError("malformed proposition node");
}

// Prepend gamma (right to left) by LeftWeakening.
int emit_prepend(ScriptBuilder& b, int step, const Formulas& gamma) {
  Formulas current = b.conclusion_of(step);
  for (size_t i = gamma.size(); i-- > 0;) {
    Formulas next = cat({{gamma[i]}, current});
    step = b.add(RuleId::R3_LeftWeakening, {step}, next,
                 Bindings{{{"alpha", gamma[i]}}, {}});
    current = std::move(next);
  }
  return step;
}

// Append delta (left to right) by RightWeakening.
int emit_append(ScriptBuilder& b, int step, const Formulas& delta) {
  Formulas current = b.conclusion_of(step);
  for (const auto& d : delta) {
    Formulas next = cat({current, {d}});
    step = b.add(RuleId::R4_RightWeakening, {step}, next,
                 Bindings{{{"alpha", d}}, {}});
    current = std::move(next);
  }
  return step;
}

// alpha & beta, Delta |-  =>  alpha, beta, Delta |-
int emit_and_left_elim(ScriptBuilder& b, int assumption_step, const PropPtr& alpha,
                       const PropPtr& beta, const Formulas& delta) {
  PropPtr conj = make_and(alpha, beta);
  int widened = emit_prepend(b, assumption_step, {alpha, beta});
  int ax = b.add(RuleId::R9_NegVee1, {}, {alpha, beta, negate_in_L(conj)});
  int negside = emit_append(b, ax, delta);
  return b.add(RuleId::R1_Cut, {widened, negside}, cat({{alpha, beta}, delta}),
               Bindings{{{"alpha", conj}}, {}});
}

// alpha, beta, gamma |-  =>  gamma, beta, alpha |-
int emit_circ(ScriptBuilder& b, int assumption_step, const PropPtr& alpha,
              const PropPtr& beta, const PropPtr& gamma) {
  int paired = b.add(RuleId::R8_RightAnd, {assumption_step},
                     {alpha, make_and(gamma, beta)});
  int swapped = b.add(RuleId::R2_Exchange, {paired}, {make_and(gamma, beta), alpha});
  return emit_and_left_elim(b, swapped, gamma, beta, {alpha});
}

ProofScript expand_logical_axiom(const Bindings& bind) {
  PropPtr alpha = formula_binding(bind, "alpha");
  ScriptBuilder b;
  int last = emit_logical_axiom(b, alpha);
  return std::move(b).finish(b.conclusion_of(last));
}

ProofScript expand_repetition(const Bindings& bind) {
  PropPtr alpha = formula_binding(bind, "alpha");
  Formulas gamma = seq_binding(bind, "Gamma");
  Formulas delta = seq_binding(bind, "Delta");
  Formulas assumption = cat({gamma, {alpha}, delta});
  ScriptBuilder b({assumption});
  int assumed = b.add_hyp(1);
  int ax = emit_logical_axiom(b, alpha);
  int widened = emit_prepend(b, ax, gamma);  // Gamma, alpha, ~alpha |-
  Formulas goal = cat({gamma, {alpha, alpha}, delta});
  int last = b.add(RuleId::R5_Stuttering, {assumed, widened}, goal,
                   Bindings{{{"alpha", negate_in_L(alpha)}}, {}});
  (void)last;
  return std::move(b).finish(goal);
}

ProofScript expand_contraction(const Bindings& bind) {
  PropPtr alpha = formula_binding(bind, "alpha");
  Formulas gamma = seq_binding(bind, "Gamma");
  Formulas delta = seq_binding(bind, "Delta");
  Formulas assumption = cat({gamma, {alpha, alpha}, delta});
  ScriptBuilder b({assumption});
  int assumed = b.add_hyp(1);
  int ax = emit_logical_axiom(b, alpha);
  int widened = emit_append(b, emit_prepend(b, ax, gamma), delta);
  Formulas goal = cat({gamma, {alpha}, delta});
  b.add(RuleId::R1_Cut, {assumed, widened}, goal, Bindings{{{"alpha", alpha}}, {}});
  return std::move(b).finish(goal);
}

ProofScript expand_and_left_elim(const Bindings& bind) {
  PropPtr alpha = formula_binding(bind, "alpha");
  PropPtr beta = formula_binding(bind, "beta");
  Formulas delta = seq_binding(bind, "Delta");
  Formulas assumption = cat({{make_and(alpha, beta)}, delta});
  ScriptBuilder b({assumption});
  int assumed = b.add_hyp(1);
  int last = emit_and_left_elim(b, assumed, alpha, beta, delta);
  return std::move(b).finish(b.conclusion_of(last));
}

ProofScript expand_circ(const Bindings& bind) {
  PropPtr alpha = formula_binding(bind, "alpha");
  PropPtr beta = formula_binding(bind, "beta");
  PropPtr gamma = formula_binding(bind, "gamma");
  ScriptBuilder b({{alpha, beta, gamma}});
  int assumed = b.add_hyp(1);
  int last = emit_circ(b, assumed, alpha, beta, gamma);
  return std::move(b).finish(b.conclusion_of(last));
}

ProofScript expand_and_right_elim(const Bindings& bind) {
  PropPtr alpha = formula_binding(bind, "alpha");
  PropPtr beta = formula_binding(bind, "beta");
  Formulas gamma = seq_binding(bind, "Gamma");
  PropPtr conj = make_and(alpha, beta);
  Formulas assumption = cat({gamma, {conj}});
  ScriptBuilder b({assumption});
  int assumed = b.add_hyp(1);
  int ax = b.add(RuleId::R9_NegVee1, {}, {alpha, beta, negate_in_L(conj)});
  int circ = emit_circ(b, ax, alpha, beta, negate_in_L(conj));
  int pos = emit_append(b, assumed, {beta, alpha});
  int neg = emit_prepend(b, circ, gamma);
  Formulas goal = cat({gamma, {beta, alpha}});
  b.add(RuleId::R1_Cut, {pos, neg}, goal, Bindings{{{"alpha", conj}}, {}});
  return std::move(b).finish(goal);
}

ProofScript expand_vee_left_elim(const Bindings& bind) {
  PropPtr alpha = formula_binding(bind, "alpha");
  PropPtr beta = formula_binding(bind, "beta");
  Formulas delta = seq_binding(bind, "Delta");
  PropPtr disj = make_or(alpha, beta);
  PropPtr conj = negate_in_L(disj);  // ~beta & ~alpha
  Formulas assumption = cat({{disj}, delta});
  ScriptBuilder b({assumption});
  int assumed = b.add_hyp(1);
  int ax = emit_logical_axiom(b, alpha);
  int w1 = b.add(RuleId::R4_RightWeakening, {ax},
                 {alpha, negate_in_L(alpha), negate_in_L(beta)},
                 Bindings{{{"alpha", negate_in_L(beta)}}, {}});
  int paired = b.add(RuleId::R8_RightAnd, {w1}, {alpha, conj});
  int pos = emit_append(b, paired, delta);      // alpha, ~beta & ~alpha, Delta
  int neg = emit_prepend(b, assumed, {alpha});  // alpha, alpha | beta, Delta
  Formulas goal = cat({{alpha}, delta});
  b.add(RuleId::R1_Cut, {pos, neg}, goal, Bindings{{{"alpha", conj}}, {}});
  return std::move(b).finish(goal);
}

ProofScript expand_vee_right_elim(const Bindings& bind) {
  PropPtr alpha = formula_binding(bind, "alpha");
  PropPtr beta = formula_binding(bind, "beta");
  Formulas gamma = seq_binding(bind, "Gamma");
  PropPtr disj = make_or(alpha, beta);
  PropPtr conj = negate_in_L(disj);  // ~beta & ~alpha
  Formulas assumption = cat({gamma, {disj}});
  ScriptBuilder b({assumption});
  int assumed = b.add_hyp(1);
  int ax = emit_logical_axiom(b, alpha);
  int swapped = b.add(RuleId::R2_Exchange, {ax}, {negate_in_L(alpha), alpha});
  int w1 = b.add(RuleId::R3_LeftWeakening, {swapped},
                 {negate_in_L(beta), negate_in_L(alpha), alpha},
                 Bindings{{{"alpha", negate_in_L(beta)}}, {}});
  int joined = b.add(RuleId::R7_LeftAnd, {w1}, {conj, alpha});
  int pos = b.add(RuleId::R4_RightWeakening, {assumed}, cat({gamma, {disj, alpha}}),
                  Bindings{{{"alpha", alpha}}, {}});
  int neg = emit_prepend(b, joined, gamma);  // Gamma, ~beta & ~alpha, alpha
  Formulas goal = cat({gamma, {alpha}});
  b.add(RuleId::R1_Cut, {pos, neg}, goal, Bindings{{{"alpha", disj}}, {}});
  return std::move(b).finish(goal);
}

}  // namespace

std::optional<DerivedRule> derived_rule_from_name(std::string_view name) {
  if (name == "LogicalAxiom") return DerivedRule::LogicalAxiom;
  if (name == "Repetition") return DerivedRule::Repetition;
  if (name == "Contraction") return DerivedRule::Contraction;
  if (name == "AndLeftElim") return DerivedRule::AndLeftElim;
  if (name == "Circ") return DerivedRule::Circ;
  if (name == "AndRightElim") return DerivedRule::AndRightElim;
  if (name == "VeeLeftElim") return DerivedRule::VeeLeftElim;
  if (name == "VeeRightElim") return DerivedRule::VeeRightElim;
  return std::nullopt;
}

std::string derived_rule_name(DerivedRule r) {
  switch (r) {
    case DerivedRule::LogicalAxiom: return "LogicalAxiom";
    case DerivedRule::Repetition: return "Repetition";
    case DerivedRule::Contraction: return "Contraction";
    case DerivedRule::AndLeftElim: return "AndLeftElim";
    case DerivedRule::Circ: return "Circ";
    case DerivedRule::AndRightElim: return "AndRightElim";
    case DerivedRule::VeeLeftElim: return "VeeLeftElim";
    case DerivedRule::VeeRightElim: return "VeeRightElim";
  }
  return "?";
}

ProofScript expand_derived(DerivedRule rule, const Bindings& bindings) {
  ProofScript script;
  switch (rule) {
    case DerivedRule::LogicalAxiom: script = expand_logical_axiom(bindings); break;
    case DerivedRule::Repetition: script = expand_repetition(bindings); break;
    case DerivedRule::Contraction: script = expand_contraction(bindings); break;
    case DerivedRule::AndLeftElim: script = expand_and_left_elim(bindings); break;
    case DerivedRule::Circ: script = expand_circ(bindings); break;
    case DerivedRule::AndRightElim: script = expand_and_right_elim(bindings); break;
    case DerivedRule::VeeLeftElim: script = expand_vee_left_elim(bindings); break;
    case DerivedRule::VeeRightElim: script = expand_vee_right_elim(bindings); break;
  }
  if (CheckResult v = check_script(script))
    throw StructuralError("expanded " + derived_rule_name(rule) +
                          " script fails the kernel: " + v->to_string());
  return script;
}

// ---------------- script text format ----------------

namespace {

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  return s;
}

Bindings parse_bindings(const std::string& text, int lineno) {
  Bindings out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": binding needs '='");
    std::string key = trim(part.substr(0, eq));
    std::string value = part.substr(eq + 1);
    if (key == "Gamma" || key == "Delta" || key == "gamma" || key == "delta") {
      std::string norm_key = key == "gamma" ? "Gamma" : key == "delta" ? "Delta" : key;
      std::vector<PropPtr>& seq = out.sequences[norm_key];
      std::istringstream vs(value);
      std::string item;
      while (std::getline(vs, item, ',')) {
        item = trim(item);
        if (!item.empty()) seq.push_back(parse_prop(item));
      }
    } else {
      out.formulas[key] = parse_prop(value);
    }
  }
  return out;
}

std::vector<PropPtr> parse_lhs_only(const std::string& text, int lineno) {
  Sequent s = parse_sequent(text);
  if (!s.rhs.empty())
    throw ParseError("line " + std::to_string(lineno) +
                     ": kernel sequents have an empty right-hand side");
  return s.lhs;
}

}  // namespace

ProofScript parse_proof_script(std::string_view text) {
  ProofScript script;
  bool have_goal = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("assume:", 0) == 0) {
      if (have_goal || !script.steps.empty())
        throw ParseError("line " + std::to_string(lineno) +
                         ": assumptions must precede the goal");
      script.assumptions.push_back(parse_lhs_only(line.substr(7), lineno));
      continue;
    }
    if (line.rfind("goal:", 0) == 0) {
      if (have_goal)
        throw ParseError("line " + std::to_string(lineno) + ": duplicate goal");
      script.goal = parse_lhs_only(line.substr(5), lineno);
      have_goal = true;
      continue;
    }

    // <index>: <RuleTag> [bindings] from i,j : <sequent>
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected step index");
    ProofStep step;
    try {
      step.index = std::stoi(trim(line.substr(0, colon)));
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad step index");
    }
    std::string rest = line.substr(colon + 1);

    // the conclusion follows the *last* top-level ':' (bindings cannot
    // contain one)
    size_t concl_colon = rest.rfind(':');
    if (concl_colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected ': <sequent>'");
    step.conclusion = parse_lhs_only(rest.substr(concl_colon + 1), lineno);
    std::string head = trim(rest.substr(0, concl_colon));

    if (auto bopen = head.find('['); bopen != std::string::npos) {
      auto bclose = head.find(']', bopen);
      if (bclose == std::string::npos)
        throw ParseError("line " + std::to_string(lineno) + ": unterminated bindings");
      step.bindings = parse_bindings(head.substr(bopen + 1, bclose - bopen - 1), lineno);
      head = trim(head.substr(0, bopen) + head.substr(bclose + 1));
    }

    if (auto from = head.find(" from "); from != std::string::npos) {
      std::string premises = head.substr(from + 6);
      head = trim(head.substr(0, from));
      std::istringstream ps(premises);
      std::string item;
      while (std::getline(ps, item, ',')) {
        try {
          step.premises.push_back(std::stoi(trim(item)));
        } catch (const std::exception&) {
          throw ParseError("line " + std::to_string(lineno) + ": bad premise index");
        }
      }
    }

    std::istringstream hs(head);
    std::string tag1, tag2;
    hs >> tag1 >> tag2;
    if (tag1 == "Hyp") {
      step.rule = RuleId::Hypothesis;
      try {
        step.hyp_index = std::stoi(tag2);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": Hyp needs an index");
      }
    } else {
      auto id1 = rule_from_name(tag1);
      if (!id1)
        throw ParseError("line " + std::to_string(lineno) + ": unknown rule '" +
                         tag1 + "'");
      if (!tag2.empty()) {
        auto id2 = rule_from_name(tag2);
        if (!id2 || *id2 != *id1)
          throw ParseError("line " + std::to_string(lineno) +
                           ": rule tag halves disagree");
      }
      step.rule = *id1;
    }
    script.steps.push_back(std::move(step));
  }
  if (!have_goal) throw ParseError("proof script has no goal line");
  return script;
}

ProofScript load_proof_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open proof script " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_proof_script(buf.str());
}

std::string print_proof_script(const ProofScript& script) {
  std::ostringstream out;
  for (const auto& a : script.assumptions) {
    Sequent s;
    s.lhs = a;
    out << "assume: " << print_sequent(s) << "\n";
  }
  {
    Sequent g;
    g.lhs = script.goal;
    out << "goal: " << print_sequent(g) << "\n";
  }
  for (const auto& step : script.steps) {
    out << step.index << ": ";
    if (step.rule == RuleId::Hypothesis) {
      out << "Hyp " << step.hyp_index;
    } else {
      out << rule_short_name(step.rule) << " " << rule_long_name(step.rule);
      // canonical bindings: the ones that name the introduced formula
      std::vector<std::string> parts;
      for (const char* key : {"sigma", "alpha", "beta"}) {
        auto it = step.bindings.formulas.find(key);
        if (it != step.bindings.formulas.end())
          parts.push_back(std::string(key) + "=" + print_prop(it->second));
      }
      if (!parts.empty()) {
        out << " [";
        for (size_t i = 0; i < parts.size(); ++i) out << (i ? "; " : "") << parts[i];
        out << "]";
      }
      if (!step.premises.empty()) {
        out << " from ";
        for (size_t i = 0; i < step.premises.size(); ++i)
          out << (i ? "," : "") << step.premises[i];
      }
    }
    Sequent c;
    c.lhs = step.conclusion;
    out << " : " << print_sequent(c) << "\n";
  }
  return out.str();
}

}  // namespace osl
