#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "osl/errors.hpp"
#include "osl/model_zoo.hpp"
#include "osl/proof_kernel.hpp"
#include "osl/semantics.hpp"

using namespace osl;
using namespace osl::testing;

namespace {

std::vector<PropPtr> lhs(const char* text) { return parse_sequent(text).lhs; }

ProofScript script_of(const char* text) { return parse_proof_script(text); }

}  // namespace

TEST_CASE("negate_in_L") {
  CHECK(print_prop(negate_in_L(parse_prop("s"))) == "~s");
  CHECK(print_prop(negate_in_L(parse_prop("~s"))) == "s");
  CHECK(print_prop(negate_in_L(parse_prop("a & b"))) == "~b | ~a");
  PropPtr p = parse_prop("p | (q & r)");
  CHECK(prop_equal(negate_in_L(negate_in_L(p)), p));
}

TEST_CASE("single-step checks") {
  // the NegAtomic axiom
  ProofScript ok = script_of("goal: s, ~s |-\n1: R6 NegAtomic [sigma=s] : s, ~s |-\n");
  CHECK_FALSE(check_script(ok));

  // R6 demands an atom
  ProofScript not_atomic =
      script_of("goal: a & b, ~b | ~a |-\n1: R6 NegAtomic : a & b, ~b | ~a |-\n");
  CHECK(check_script(not_atomic));

  // R8 must swap the order: concluding a & b from G, a, b is a violation
  ProofScript r8_bad = script_of(
      "goal: g, a & b |-\n"
      "1: R6 NegAtomic : a, ~a |-\n"  // filler premise of the right shape
      "2: R8 RightAnd from 1 : g, a & b |-\n");
  CHECK(check_script(r8_bad));
  ProofScript r8_good = script_of(
      "goal: b & a |-\n"
      "1: R6 NegAtomic : a, ~a |-\n"
      "2: R8 RightAnd from 1 : b & a |-\n");
  // premise is a, ~a: conclusion must be (~a) & a
  CHECK(check_script(r8_good));
  ProofScript r8_really_good = script_of(
      "goal: ~a & a |-\n"
      "1: R6 NegAtomic : a, ~a |-\n"
      "2: R8 RightAnd from 1 : ~a & a |-\n");
  CHECK_FALSE(check_script(r8_really_good));

  // R2 on three formulas is a violation
  ProofScript r2_bad = script_of(
      "assume: a, b, c |-\n"
      "goal: c, b, a |-\n"
      "1: Hyp 1 : a, b, c |-\n"
      "2: R2 Exchange from 1 : c, b, a |-\n");
  CHECK(check_script(r2_bad));
}

TEST_CASE("the derivation of LogicalAxiom for a negated atom kernel-checks") {
  ProofScript s = script_of(
      "goal: ~s, s |-\n"
      "1: R6 NegAtomic [sigma=s] : s, ~s |-\n"
      "2: R2 Exchange from 1 : ~s, s |-\n");
  CHECK_FALSE(check_script(s));
}

TEST_CASE("script-level violations") {
  // forward reference
  ProofScript fwd = script_of(
      "goal: q, ~q |-\n"
      "1: R2 Exchange from 2 : ~q, q |-\n"
      "2: R6 NegAtomic : q, ~q |-\n");
  CHECK(check_script(fwd));

  // empty script with a nonempty goal
  ProofScript empty;
  empty.goal = lhs("p |-");
  CHECK(check_script(empty));

  // goal mismatch
  ProofScript wrong = script_of("goal: p, ~p |-\n1: R6 NegAtomic : q, ~q |-\n");
  CHECK(check_script(wrong));

  // right-hand sides must be empty inside the kernel
  CHECK_THROWS_AS(script_of("goal: p |- q\n1: R6 NegAtomic : p, ~p |-\n"),
                  ParseError);

  // unrestricted formulas are rejected by the checker
  ProofScript unrestricted;
  unrestricted.goal = lhs("~(a & b) |-");
  ProofStep step;
  step.index = 1;
  step.rule = RuleId::R6_NegAtomic;
  step.conclusion = lhs("~(a & b) |-");
  unrestricted.steps.push_back(step);
  CHECK(check_script(unrestricted));
}

TEST_CASE("a weaken-then-join script checks end to end") {
  ProofScript s = script_of(
      "goal: p & q, ~q |-\n"
      "1: R6 NegAtomic [sigma=q]            : q, ~q |-\n"
      "2: R3 LeftWeakening [alpha=p] from 1 : p, q, ~q |-\n"
      "3: R7 LeftAnd from 2                 : p & q, ~q |-\n");
  CHECK_FALSE(check_script(s));

  // mismatched supplied binding is a violation
  ProofScript bad = script_of(
      "goal: p & q, ~q |-\n"
      "1: R6 NegAtomic [sigma=p] : q, ~q |-\n"
      "2: R3 LeftWeakening from 1 : p, q, ~q |-\n"
      "3: R7 LeftAnd from 2 : p & q, ~q |-\n");
  CHECK(check_script(bad));
}

TEST_CASE("proof script print/parse round trip") {
  ProofScript s = script_of(
      "assume: g, a, d |-\n"
      "goal: g, a, a, d |-\n"
      "1: Hyp 1 : g, a, d |-\n"
      "2: R6 NegAtomic [sigma=a] : a, ~a |-\n"
      "3: R3 LeftWeakening [alpha=g] from 2 : g, a, ~a |-\n"
      "4: R5 Stuttering [alpha=~a] from 1,3 : g, a, a, d |-\n");
  CHECK_FALSE(check_script(s));
  std::string text = print_proof_script(s);
  ProofScript back = parse_proof_script(text);
  CHECK_FALSE(check_script(back));
  CHECK(print_proof_script(back) == text);
}

TEST_CASE("derived rules expand and kernel-check on the paper's instances") {
  Bindings la;
  la.formulas["alpha"] = parse_prop("a & b");
  ProofScript s = expand_derived(DerivedRule::LogicalAxiom, la);
  CHECK(lhs_equal(s.goal, lhs("a & b, ~b | ~a |-")));
  CHECK(s.steps.size() == 2);  // NegVee1 then LeftAnd

  Bindings circ;
  circ.formulas["alpha"] = parse_prop("a");
  circ.formulas["beta"] = parse_prop("b");
  circ.formulas["gamma"] = parse_prop("c");
  ProofScript cs = expand_derived(DerivedRule::Circ, circ);
  CHECK(lhs_equal(cs.goal, lhs("c, b, a |-")));
  REQUIRE(cs.assumptions.size() == 1);
  CHECK(lhs_equal(cs.assumptions[0], lhs("a, b, c |-")));

  Bindings contraction;
  contraction.formulas["alpha"] = parse_prop("a");
  contraction.sequences["Gamma"] = lhs("g |-");
  contraction.sequences["Delta"] = lhs("d |-");
  ProofScript ks = expand_derived(DerivedRule::Contraction, contraction);
  CHECK(lhs_equal(ks.goal, lhs("g, a, d |-")));
  CHECK(lhs_equal(ks.assumptions[0], lhs("g, a, a, d |-")));
}

TEST_CASE("derived rules expand over a generated corpus") {
  std::mt19937 rng(101);
  std::vector<std::string> atoms{"a", "b", "c"};
  for (int i = 0; i < 120; ++i) {
    Bindings bind;
    bind.formulas["alpha"] = random_prop(rng, atoms, 3, true);
    bind.formulas["beta"] = random_prop(rng, atoms, 3, true);
    bind.formulas["gamma"] = random_prop(rng, atoms, 3, true);
    bind.sequences["Gamma"] = random_prop_list(rng, atoms, 2, 2, true);
    bind.sequences["Delta"] = random_prop_list(rng, atoms, 2, 2, true);
    for (DerivedRule rule :
         {DerivedRule::LogicalAxiom, DerivedRule::Repetition,
          DerivedRule::Contraction, DerivedRule::AndLeftElim, DerivedRule::Circ,
          DerivedRule::AndRightElim, DerivedRule::VeeLeftElim,
          DerivedRule::VeeRightElim}) {
      // expand_derived kernel-checks internally and throws on failure
      CHECK_NOTHROW(expand_derived(rule, bind));
    }
  }
}

TEST_CASE("implication transitivity template kernel-checks for arbitrary bindings") {
  std::mt19937 rng(103);
  std::vector<std::string> atoms{"a", "b", "c"};
  for (int i = 0; i < 60; ++i) {
    PropPtr alpha = random_prop(rng, atoms, 2, true);
    PropPtr beta = random_prop(rng, atoms, 2, true);
    PropPtr gamma = random_prop(rng, atoms, 2, true);
    // assumptions: gamma -> beta and beta -> alpha, encoded as sequents
    std::vector<PropPtr> h1{to_nnf(beta), negate_in_L(alpha)};
    std::vector<PropPtr> h2{to_nnf(gamma), negate_in_L(beta)};
    // the derivation: weaken each premise into position, cut on beta
    ScriptBuilder b({h1, h2});
    int a1 = b.add_hyp(1);
    int a2 = b.add_hyp(2);
    // ~gamma-side: prepend gamma's sequent with nothing; build
    // gamma, beta, ~alpha and gamma, ~beta... use Stuttering-free route:
    //   gamma, ~beta |- (h2 with Exchange-free layout) we instead derive
    //   gamma, beta, ~alpha |- from h1 by LeftWeakening, and
    //   gamma, ~beta, ~alpha |- from h2 by RightWeakening, then Cut.
    int left = b.add(RuleId::R3_LeftWeakening, {a1},
                     {to_nnf(gamma), to_nnf(beta), negate_in_L(alpha)},
                     Bindings{{{"alpha", to_nnf(gamma)}}, {}});
    int right = b.add(RuleId::R4_RightWeakening, {a2},
                      {to_nnf(gamma), negate_in_L(beta), negate_in_L(alpha)},
                      Bindings{{{"alpha", negate_in_L(alpha)}}, {}});
    std::vector<PropPtr> goal{to_nnf(gamma), negate_in_L(alpha)};
    b.add(RuleId::R1_Cut, {left, right}, goal,
          Bindings{{{"alpha", to_nnf(beta)}}, {}});
    ProofScript script = std::move(b).finish(goal);
    CHECK_FALSE(check_script(script));
  }
}

TEST_CASE("orthogonal disjunction commutes, as a derivation template") {
  // given a script for alpha, beta |- the template concludes
  // alpha | beta, ~(beta | alpha) |- i.e. (alpha | beta) -> (beta | alpha)
  auto commute_template = [](const PropPtr& alpha, const PropPtr& beta) {
    std::vector<PropPtr> assumption{alpha, beta};
    ScriptBuilder b({assumption});
    int assumed = b.add_hyp(1);
    Bindings la;
    la.formulas["alpha"] = alpha;
    // alpha, ~alpha |-
    ProofScript ax_script = expand_derived(DerivedRule::LogicalAxiom, la);
    // inline the (at most two-step) axiom script
    std::map<int, int> remap;
    for (const auto& step : ax_script.steps) {
      std::vector<int> premises;
      for (int p : step.premises) premises.push_back(remap.at(p));
      remap[step.index] = b.add(step.rule, premises, step.conclusion, step.bindings);
    }
    int ax = remap.at(static_cast<int>(ax_script.steps.size()));
    // Stuttering: from (alpha, ~alpha) and (alpha, beta) infer
    // alpha, ~beta, ~alpha
    int d1 = b.add(RuleId::R5_Stuttering, {ax, assumed},
                   {alpha, negate_in_L(beta), negate_in_L(alpha)},
                   Bindings{{{"alpha", beta}}, {}});
    // beta, ~beta |-
    Bindings lb;
    lb.formulas["alpha"] = beta;
    ProofScript bx_script = expand_derived(DerivedRule::LogicalAxiom, lb);
    std::map<int, int> remap2;
    for (const auto& step : bx_script.steps) {
      std::vector<int> premises;
      for (int p : step.premises) premises.push_back(remap2.at(p));
      remap2[step.index] = b.add(step.rule, premises, step.conclusion, step.bindings);
    }
    int bx = remap2.at(static_cast<int>(bx_script.steps.size()));
    // ~alpha, beta, ~beta, ~alpha |- by weakening on both sides
    int w1 = b.add(RuleId::R3_LeftWeakening, {bx},
                   {negate_in_L(alpha), beta, negate_in_L(beta)},
                   Bindings{{{"alpha", negate_in_L(alpha)}}, {}});
    int w2 = b.add(RuleId::R4_RightWeakening, {w1},
                   {negate_in_L(alpha), beta, negate_in_L(beta), negate_in_L(alpha)},
                   Bindings{{{"alpha", negate_in_L(alpha)}}, {}});
    // VeeIntro: Gamma empty, Delta = (~beta, ~alpha)
    int vi = b.add(RuleId::R10_VeeIntro, {d1, w2},
                   {make_or(alpha, beta), negate_in_L(beta), negate_in_L(alpha)});
    // RightAnd: ~alpha & ~beta = ~(beta | alpha)
    std::vector<PropPtr> goal{make_or(alpha, beta),
                              negate_in_L(make_or(beta, alpha))};
    b.add(RuleId::R8_RightAnd, {vi}, goal);
    return std::move(b).finish(goal);
  };

  std::mt19937 rng(107);
  std::vector<std::string> atoms{"a", "b"};
  for (int i = 0; i < 40; ++i) {
    PropPtr alpha = random_prop(rng, atoms, 2, true);
    PropPtr beta = random_prop(rng, atoms, 2, true);
    ProofScript s = commute_template(alpha, beta);
    CHECK_FALSE(check_script(s));
    // and the swapped direction comes from the same template
    ProofScript t = commute_template(beta, alpha);
    CHECK_FALSE(check_script(t));
  }
}

TEST_CASE("kernel-accepted scripts have semantically valid goals") {
  // kernel soundness, empirically: expansion outputs with no assumptions
  // are valid in every zoo model
  Bindings la;
  la.formulas["alpha"] = parse_prop("(a & b) | ~c");
  ProofScript s = expand_derived(DerivedRule::LogicalAxiom, la);
  Sequent goal;
  goal.lhs = s.goal;
  for (const char* spec : {"zoo:sets:2", "zoo:powerset:2", "zoo:q2"}) {
    auto space = make_model(spec);
    CHECK(valid_in_model(*space, goal).valid);
  }
}
