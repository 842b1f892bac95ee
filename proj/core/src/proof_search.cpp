#include "osl/proof_search.hpp"

#include <map>
#include <memory>
#include <set>

#include "osl/errors.hpp"
#include "osl/model_zoo.hpp"

namespace osl {

namespace {

using Formulas = std::vector<PropPtr>;

std::string seq_key(const Formulas& fs) {
  // Order-sensitive by construction: the logic is substructural, so no
  // multiset normalization is permitted.
  std::string key;
  for (const auto& f : fs) {
    key += print_prop(f);
    key += '\x1f';
  }
  return key;
}

struct ProofNode {
  RuleId rule;
  Formulas conclusion;
  Bindings bindings;
  std::vector<std::shared_ptr<ProofNode>> children;
};
using NodePtr = std::shared_ptr<ProofNode>;

struct SearchCtx {
  SearchConfig cfg;
  long remaining = 0;
  bool aborted = false;
  std::map<std::string, int> failed_at;  // key+flag -> highest depth that failed
  std::map<std::string, NodePtr> proved;
  Formulas cut_pool;
  SearchStats stats;
};

void collect_subformulas(const PropPtr& p, Formulas& out) {
  for (const auto& f : out)
    if (prop_equal(f, p)) return;
  out.push_back(p);
  switch (p->kind) {
    case Prop::Kind::Atom:
      return;
    case Prop::Kind::Neg:
      collect_subformulas(p->lhs, out);
      return;
    case Prop::Kind::And:
    case Prop::Kind::Or:
      collect_subformulas(p->lhs, out);
      collect_subformulas(p->rhs, out);
      return;
  }
}

Formulas build_cut_pool(const Formulas& goal, CutPool policy) {
  Formulas pool;
  if (policy == CutPool::None) return pool;
  for (const auto& f : goal) collect_subformulas(f, pool);
  size_t base = pool.size();
  for (size_t i = 0; i < base; ++i) {
    PropPtr neg = negate_in_L(pool[i]);
    bool dup = false;
    for (const auto& f : pool)
      if (prop_equal(f, neg)) dup = true;
    if (!dup) pool.push_back(neg);
  }
  return pool;
}

NodePtr make_node(RuleId rule, Formulas conclusion, Bindings bindings,
                  std::vector<NodePtr> children) {
  auto n = std::make_shared<ProofNode>();
  n->rule = rule;
  n->conclusion = std::move(conclusion);
  n->bindings = std::move(bindings);
  n->children = std::move(children);
  return n;
}

NodePtr attempt(SearchCtx& ctx, const Formulas& goal, int depth,
                bool stutter_used, std::set<std::string>& path);

NodePtr try_rule(SearchCtx& ctx, RuleId rule, const Formulas& goal,
                 Bindings bindings, const std::vector<Formulas>& subgoals,
                 int depth, bool stutter_used, std::set<std::string>& path) {
  std::vector<NodePtr> children;
  for (const auto& sub : subgoals) {
    NodePtr c = attempt(ctx, sub, depth - 1, stutter_used, path);
    if (!c) return nullptr;
    children.push_back(std::move(c));
  }
  return make_node(rule, goal, std::move(bindings), std::move(children));
}

NodePtr attempt(SearchCtx& ctx, const Formulas& goal, int depth,
                bool stutter_used, std::set<std::string>& path) {
  if (ctx.aborted || depth <= 0) return nullptr;
  std::string key = seq_key(goal);
  if (auto it = ctx.proved.find(key); it != ctx.proved.end()) return it->second;
  std::string fail_key = key + (stutter_used ? "#" : "");
  if (auto it = ctx.failed_at.find(fail_key);
      it != ctx.failed_at.end() && it->second >= depth)
    return nullptr;
  if (path.contains(key)) return nullptr;

  if (--ctx.remaining <= 0) {
    ctx.aborted = true;
    return nullptr;
  }
  ++ctx.stats.nodes;

  auto proved_node = [&](NodePtr n) {
    ctx.proved[key] = n;
    return n;
  };

  // axiom closures
  if (goal.size() == 2 && goal[0]->kind == Prop::Kind::Atom &&
      prop_equal(goal[1], negate_in_L(goal[0]))) {
    return proved_node(make_node(RuleId::R6_NegAtomic, goal,
                                 Bindings{{{"sigma", goal[0]}}, {}}, {}));
  }
  if (goal.size() == 3 && goal[2]->kind == Prop::Kind::Or &&
      prop_equal(goal[0], negate_in_L(goal[2]->rhs)) &&
      prop_equal(goal[1], negate_in_L(goal[2]->lhs))) {
    return proved_node(make_node(RuleId::R9_NegVee1, goal, {}, {}));
  }

  path.insert(key);
  NodePtr found;
  const size_t n = goal.size();

  // R7 inverse: split a leftmost conjunction
  if (!found && n >= 1 && goal[0]->kind == Prop::Kind::And) {
    Formulas sub{goal[0]->lhs, goal[0]->rhs};
    sub.insert(sub.end(), goal.begin() + 1, goal.end());
    found = try_rule(ctx, RuleId::R7_LeftAnd, goal, {}, {sub}, depth,
                     stutter_used, path);
  }

  // R8 inverse: split a rightmost conjunction, order swapped
  if (!found && n >= 1 && goal.back()->kind == Prop::Kind::And) {
    Formulas sub(goal.begin(), goal.end() - 1);
    sub.push_back(goal.back()->rhs);
    sub.push_back(goal.back()->lhs);
    found = try_rule(ctx, RuleId::R8_RightAnd, goal, {}, {sub}, depth,
                     stutter_used, path);
  }

  // R10 inverse: resolve a disjunction anywhere
  if (!found) {
    for (size_t k = 0; k < n && !found && !ctx.aborted; ++k) {
      if (goal[k]->kind != Prop::Kind::Or) continue;
      PropPtr alpha = goal[k]->lhs;
      PropPtr beta = goal[k]->rhs;
      Formulas sub1(goal.begin(), goal.begin() + static_cast<long>(k));
      Formulas sub2 = sub1;
      sub1.push_back(alpha);
      sub2.push_back(negate_in_L(alpha));
      sub2.push_back(beta);
      sub1.insert(sub1.end(), goal.begin() + static_cast<long>(k) + 1, goal.end());
      sub2.insert(sub2.end(), goal.begin() + static_cast<long>(k) + 1, goal.end());
      found = try_rule(ctx, RuleId::R10_VeeIntro, goal, {}, {sub1, sub2}, depth,
                       stutter_used, path);
    }
  }

  // R2 inverse: two-formula swap
  if (!found && n == 2) {
    Formulas sub{goal[1], goal[0]};
    found = try_rule(ctx, RuleId::R2_Exchange, goal, {}, {sub}, depth,
                     stutter_used, path);
  }

  // R5 inverse: drop a formula, proving it held; the main branching hazard,
  // capped at one application per branch
  if (!found && n >= 1 && !stutter_used) {
    for (size_t k = 0; k < n && !found && !ctx.aborted; ++k) {
      PropPtr alpha = negate_in_L(goal[k]);
      Formulas dropped(goal.begin(), goal.begin() + static_cast<long>(k));
      Formulas held = dropped;
      dropped.insert(dropped.end(), goal.begin() + static_cast<long>(k) + 1,
                     goal.end());
      held.push_back(alpha);
      found = try_rule(ctx, RuleId::R5_Stuttering, goal,
                       Bindings{{{"alpha", alpha}}, {}}, {dropped, held}, depth,
                       /*stutter_used=*/true, path);
    }
  }

  // R3/R4 inverses: undo a weakening
  if (!found && n >= 1) {
    Formulas sub(goal.begin() + 1, goal.end());
    found = try_rule(ctx, RuleId::R3_LeftWeakening, goal,
                     Bindings{{{"alpha", goal.front()}}, {}}, {sub}, depth,
                     stutter_used, path);
  }
  if (!found && n >= 1) {
    Formulas sub(goal.begin(), goal.end() - 1);
    found = try_rule(ctx, RuleId::R4_RightWeakening, goal,
                     Bindings{{{"alpha", goal.back()}}, {}}, {sub}, depth,
                     stutter_used, path);
  }

  // R1 inverse: cut over the configured pool
  if (!found && !ctx.cut_pool.empty()) {
    for (size_t k = 0; k <= n && !found && !ctx.aborted; ++k) {
      for (const auto& cut : ctx.cut_pool) {
        Formulas pos(goal.begin(), goal.begin() + static_cast<long>(k));
        Formulas neg = pos;
        pos.push_back(cut);
        neg.push_back(negate_in_L(cut));
        pos.insert(pos.end(), goal.begin() + static_cast<long>(k), goal.end());
        neg.insert(neg.end(), goal.begin() + static_cast<long>(k), goal.end());
        found = try_rule(ctx, RuleId::R1_Cut, goal, Bindings{{{"alpha", cut}}, {}},
                         {pos, neg}, depth, stutter_used, path);
        if (found || ctx.aborted) break;
      }
    }
  }

  path.erase(key);
  if (found) return proved_node(found);
  int& worst = ctx.failed_at[fail_key];
  if (depth > worst) worst = depth;
  return nullptr;
}

int linearize(const ProofNode& node, ScriptBuilder& builder,
              std::map<std::string, int>& step_of) {
  std::string key = seq_key(node.conclusion);
  if (auto it = step_of.find(key); it != step_of.end()) return it->second;
  std::vector<int> premises;
  for (const auto& c : node.children)
    premises.push_back(linearize(*c, builder, step_of));
  int index = builder.add(node.rule, std::move(premises), node.conclusion,
                          node.bindings);
  step_of[key] = index;
  return index;
}

}  // namespace

SearchOutcome prove(const Sequent& goal, const SearchConfig& cfg) {
  Sequent normalized = normalize_sequent(goal);

  SearchCtx ctx;
  ctx.cfg = cfg;
  ctx.remaining = cfg.node_budget;
  ctx.cut_pool = build_cut_pool(normalized.lhs, cfg.cut_pool);

  SearchOutcome outcome;
  for (int depth = 1; depth <= cfg.max_depth && !ctx.aborted; ++depth) {
    std::set<std::string> path;
    NodePtr root = attempt(ctx, normalized.lhs, depth, false, path);
    outcome.stats = ctx.stats;
    outcome.stats.depth_reached = depth;
    if (root) {
      ScriptBuilder builder;
      std::map<std::string, int> step_of;
      linearize(*root, builder, step_of);
      ProofScript script = std::move(builder).finish(normalized.lhs);
      if (CheckResult v = check_script(script))
        throw StructuralError("search produced a script the kernel rejects: " +
                              v->to_string());
      outcome.kind = SearchOutcome::Kind::Proved;
      outcome.script = std::move(script);
      return outcome;
    }
  }
  outcome.kind = SearchOutcome::Kind::Exhausted;
  outcome.stats = ctx.stats;
  return outcome;
}

SearchOutcome decide(const Sequent& goal, const SearchConfig& cfg,
                     const std::vector<std::string>& zoo_specs,
                     const ValidityCaps& caps) {
  const std::vector<std::string>& specs =
      zoo_specs.empty() ? default_zoo_specs() : zoo_specs;

  // a shallow, cheap proof round first
  SearchConfig quick = cfg;
  quick.max_depth = std::min(cfg.max_depth, 2);
  quick.node_budget = std::min(cfg.node_budget, std::max(1000L, cfg.node_budget / 4));
  SearchOutcome quick_out = prove(goal, quick);
  if (quick_out.proved()) return quick_out;

  if (auto witness = find_countermodel(goal, specs, caps)) {
    SearchOutcome outcome;
    outcome.kind = SearchOutcome::Kind::Refuted;
    outcome.witness = std::move(witness);
    outcome.stats = quick_out.stats;
    return outcome;
  }

  SearchOutcome full = prove(goal, cfg);
  full.stats.nodes += quick_out.stats.nodes;
  return full;
}

SearchOutcome implies(const PropPtr& beta, const PropPtr& alpha,
                      const SearchConfig& cfg) {
  Sequent goal;
  goal.lhs = {to_nnf(beta), to_nnf(make_neg(alpha))};
  return prove(goal, cfg);
}

std::pair<SearchOutcome, SearchOutcome> logically_equivalent(
    const PropPtr& alpha, const PropPtr& beta, const SearchConfig& cfg) {
  return {implies(alpha, beta, cfg), implies(beta, alpha, cfg)};
}

}  // namespace osl
