#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace osl {

struct Prop;
using PropPtr = std::shared_ptr<const Prop>;

// Proposition AST. The binary connectives are non-associative and
// non-commutative: the tree is the meaning.
struct Prop {
  enum class Kind { Atom, Neg, And, Or };
  Kind kind;
  std::string atom;  // Kind::Atom only
  PropPtr lhs, rhs;  // Neg uses lhs only
};

PropPtr make_atom(std::string name);
PropPtr make_neg(PropPtr p);
PropPtr make_and(PropPtr l, PropPtr r);
PropPtr make_or(PropPtr l, PropPtr r);

bool prop_equal(const PropPtr& a, const PropPtr& b);

// Language L: negation applied to atoms only.
bool is_restricted(const PropPtr& p);

// Sorted atom names occurring in p.
std::set<std::string> atoms_of(const PropPtr& p);

// Surface syntax: `~` `&` `|`, `&` binds tighter than `|`, `~` tightest.
// Unparenthesized chains of the same binary operator are rejected: the
// connectives are non-associative, so `p & q & r` is ambiguous. Unicode
// input aliases: ¬ ∧ ∨.
PropPtr parse_prop(std::string_view text);
std::string print_prop(const PropPtr& p);

// Negation normal form. Negation distributes with operand order reversal:
//   ~(a & b) -> nnf(~b) | nnf(~a)
//   ~(a | b) -> nnf(~b) & nnf(~a)
//   ~~a      -> nnf(a)
// The result is in the restricted language L.
PropPtr to_nnf(const PropPtr& p);

// nnf(~p) for p already in L; an involution on L.
PropPtr negate_restricted(const PropPtr& p);

struct Sequent {
  std::vector<PropPtr> lhs;
  std::vector<PropPtr> rhs;
};

bool sequent_equal(const Sequent& a, const Sequent& b);
bool lhs_equal(const std::vector<PropPtr>& a, const std::vector<PropPtr>& b);

// `lhs |- rhs`, comma-separated, either side possibly empty. `⊢` and `⊨`
// are accepted for `|-` on input.
Sequent parse_sequent(std::string_view text);
std::string print_sequent(const Sequent& s);

std::set<std::string> atoms_of(const Sequent& s);

// Empty-right-hand-side form: every right formula beta, leftmost first, is
// appended to the left side as nnf(~beta); left formulas are NNF-normalized
// as well. Validity is preserved in every O-space.
Sequent normalize_sequent(const Sequent& s);

}  // namespace osl
