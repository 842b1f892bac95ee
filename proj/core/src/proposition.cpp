#include "osl/proposition.hpp"

#include <sstream>

#include "osl/errors.hpp"

namespace osl {

PropPtr make_atom(std::string name) {
  auto p = std::make_shared<Prop>();
  p->kind = Prop::Kind::Atom;
  p->atom = std::move(name);
  return p;
}

PropPtr make_neg(PropPtr p) {
  auto q = std::make_shared<Prop>();
  q->kind = Prop::Kind::Neg;
  q->lhs = std::move(p);
  return q;
}

PropPtr make_and(PropPtr l, PropPtr r) {
  auto q = std::make_shared<Prop>();
  q->kind = Prop::Kind::And;
  q->lhs = std::move(l);
  q->rhs = std::move(r);
  return q;
}

PropPtr make_or(PropPtr l, PropPtr r) {
  auto q = std::make_shared<Prop>();
  q->kind = Prop::Kind::Or;
  q->lhs = std::move(l);
  q->rhs = std::move(r);
  return q;
}

bool prop_equal(const PropPtr& a, const PropPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Prop::Kind::Atom:
      return a->atom == b->atom;
    case Prop::Kind::Neg:
      return prop_equal(a->lhs, b->lhs);
    case Prop::Kind::And:
    case Prop::Kind::Or:
      return prop_equal(a->lhs, b->lhs) && prop_equal(a->rhs, b->rhs);
  }
  return false;
}

bool is_restricted(const PropPtr& p) {
  switch (p->kind) {
    case Prop::Kind::Atom:
      return true;
    case Prop::Kind::Neg:
      return p->lhs->kind == Prop::Kind::Atom;
    case Prop::Kind::And:
    case Prop::Kind::Or:
      return is_restricted(p->lhs) && is_restricted(p->rhs);
  }
  return false;
}

namespace {

void collect_atoms(const PropPtr& p, std::set<std::string>& out) {
  switch (p->kind) {
    case Prop::Kind::Atom:
      out.insert(p->atom);
      return;
    case Prop::Kind::Neg:
      collect_atoms(p->lhs, out);
      return;
    case Prop::Kind::And:
    case Prop::Kind::Or:
      collect_atoms(p->lhs, out);
      collect_atoms(p->rhs, out);
      return;
  }
}

}  // namespace

std::set<std::string> atoms_of(const PropPtr& p) {
  std::set<std::string> out;
  collect_atoms(p, out);
  return out;
}

std::set<std::string> atoms_of(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& p : s.lhs) collect_atoms(p, out);
  for (const auto& p : s.rhs) collect_atoms(p, out);
  return out;
}

// ---------------- tokenizer ----------------

namespace {

enum class Tok { Atom, Not, And, Or, LParen, RParen, Comma, Turnstile, End };

struct Token {
  Tok kind;
  std::string text;
};

struct Lexer {
  std::string_view src;
  size_t pos = 0;
  Token current;

  explicit Lexer(std::string_view s) : src(s) { advance(); }

  bool starts_with(std::string_view s) const {
    return src.substr(pos, s.size()) == s;
  }

  void advance() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos >= src.size()) {
      current = {Tok::End, ""};
      return;
    }
    // unicode aliases first (multi-byte)
    struct Alias {
      std::string_view text;
      Tok kind;
    };
    static constexpr Alias aliases[] = {
        {"|-", Tok::Turnstile}, {"⊢", Tok::Turnstile}, {"⊨", Tok::Turnstile},
        {"¬", Tok::Not},   {"∧", Tok::And},       {"∨", Tok::Or},
    };
    for (const auto& a : aliases) {
      if (starts_with(a.text)) {
        current = {a.kind, std::string(a.text)};
        pos += a.text.size();
        return;
      }
    }
    char c = src[pos];
    switch (c) {
      case '~': current = {Tok::Not, "~"}; ++pos; return;
      case '&': current = {Tok::And, "&"}; ++pos; return;
      case '|': current = {Tok::Or, "|"}; ++pos; return;
      case '(': current = {Tok::LParen, "("}; ++pos; return;
      case ')': current = {Tok::RParen, ")"}; ++pos; return;
      case ',': current = {Tok::Comma, ","}; ++pos; return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos;
      current = {Tok::Atom, std::string(src.substr(start, pos - start))};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "' at position " +
                     std::to_string(pos));
  }
};

// prop     := or_expr
// or_expr  := and_expr ('|' and_expr)?     -- a second '|' is ambiguous
// and_expr := unary ('&' unary)?           -- a second '&' is ambiguous
// unary    := '~' unary | atom | '(' or_expr ')'
struct PropParser {
  Lexer& lex;

  PropPtr parse_unary() {
    switch (lex.current.kind) {
      case Tok::Not:
        lex.advance();
        return make_neg(parse_unary());
      case Tok::Atom: {
        std::string name = lex.current.text;
        lex.advance();
        return make_atom(std::move(name));
      }
      case Tok::LParen: {
        lex.advance();
        PropPtr p = parse_or();
        if (lex.current.kind != Tok::RParen) throw ParseError("expected ')'");
        lex.advance();
        return p;
      }
      case Tok::End:
        throw ParseError("unexpected end of proposition");
      default:
        throw ParseError("unexpected token '" + lex.current.text + "'");
    }
  }

  PropPtr parse_and() {
    PropPtr l = parse_unary();
    if (lex.current.kind != Tok::And) return l;
    lex.advance();
    PropPtr r = parse_unary();
    if (lex.current.kind == Tok::And)
      throw ParseError(
          "ambiguous association: chained '&' needs parentheses (the connective "
          "is not associative)");
    return make_and(std::move(l), std::move(r));
  }

  PropPtr parse_or() {
    PropPtr l = parse_and();
    if (lex.current.kind != Tok::Or) return l;
    lex.advance();
    PropPtr r = parse_and();
    if (lex.current.kind == Tok::Or)
      throw ParseError(
          "ambiguous association: chained '|' needs parentheses (the connective "
          "is not associative)");
    return make_or(std::move(l), std::move(r));
  }
};

}  // namespace

PropPtr parse_prop(std::string_view text) {
  Lexer lex(text);
  PropParser parser{lex};
  PropPtr p = parser.parse_or();
  if (lex.current.kind != Tok::End)
    throw ParseError("trailing input after proposition: '" + lex.current.text + "'");
  return p;
}

namespace {

int precedence(Prop::Kind k) {
  switch (k) {
    case Prop::Kind::Or: return 1;
    case Prop::Kind::And: return 2;
    default: return 3;
  }
}

void print_rec(const PropPtr& p, int parent_prec, std::ostringstream& out) {
  // Parenthesize when binding is looser than the context, and always between
  // same-precedence binary nodes: the connectives are non-associative.
  int prec = precedence(p->kind);
  bool parens = (p->kind == Prop::Kind::And || p->kind == Prop::Kind::Or) &&
                prec <= parent_prec;
  if (parens) out << '(';
  switch (p->kind) {
    case Prop::Kind::Atom:
      out << p->atom;
      break;
    case Prop::Kind::Neg:
      out << '~';
      print_rec(p->lhs, 3, out);
      break;
    case Prop::Kind::And:
      print_rec(p->lhs, 2, out);
      out << " & ";
      print_rec(p->rhs, 2, out);
      break;
    case Prop::Kind::Or:
      print_rec(p->lhs, 1, out);
      out << " | ";
      print_rec(p->rhs, 1, out);
      break;
  }
  if (parens) out << ')';
}

}  // namespace

std::string print_prop(const PropPtr& p) {
  std::ostringstream out;
  print_rec(p, 0, out);
  return out.str();
}

PropPtr to_nnf(const PropPtr& p) {
  switch (p->kind) {
    case Prop::Kind::Atom:
      return p;
    case Prop::Kind::And:
      return make_and(to_nnf(p->lhs), to_nnf(p->rhs));
    case Prop::Kind::Or:
      return make_or(to_nnf(p->lhs), to_nnf(p->rhs));
    case Prop::Kind::Neg: {
      const PropPtr& q = p->lhs;
      switch (q->kind) {
        case Prop::Kind::Atom:
          return p;
        case Prop::Kind::Neg:
          return to_nnf(q->lhs);
        case Prop::Kind::And:  // ~(a & b) -> nnf(~b) | nnf(~a)
          return make_or(to_nnf(make_neg(q->rhs)), to_nnf(make_neg(q->lhs)));
        case Prop::Kind::Or:  // ~(a | b) -> nnf(~b) & nnf(~a)
          return make_and(to_nnf(make_neg(q->rhs)), to_nnf(make_neg(q->lhs)));
      }
    }
  }
  throw StructuralError("malformed proposition node");
}

PropPtr negate_restricted(const PropPtr& p) {
  if (!is_restricted(p))
    throw PreconditionError("negate_restricted expects a proposition in L");
  return to_nnf(make_neg(p));
}

// ---------------- sequents ----------------

bool lhs_equal(const std::vector<PropPtr>& a, const std::vector<PropPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!prop_equal(a[i], b[i])) return false;
  return true;
}

bool sequent_equal(const Sequent& a, const Sequent& b) {
  return lhs_equal(a.lhs, b.lhs) && lhs_equal(a.rhs, b.rhs);
}

Sequent parse_sequent(std::string_view text) {
  Lexer lex(text);
  PropParser parser{lex};
  Sequent s;
  auto parse_list = [&](std::vector<PropPtr>& out, bool until_turnstile) {
    if (until_turnstile && lex.current.kind == Tok::Turnstile) return;
    if (!until_turnstile && lex.current.kind == Tok::End) return;
    while (true) {
      out.push_back(parser.parse_or());
      if (lex.current.kind == Tok::Comma) {
        lex.advance();
        continue;
      }
      break;
    }
  };
  parse_list(s.lhs, true);
  if (lex.current.kind != Tok::Turnstile)
    throw ParseError("expected '|-' in sequent");
  lex.advance();
  parse_list(s.rhs, false);
  if (lex.current.kind != Tok::End)
    throw ParseError("trailing input after sequent: '" + lex.current.text + "'");
  return s;
}

std::string print_sequent(const Sequent& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.lhs.size(); ++i) {
    if (i) out << ", ";
    out << print_prop(s.lhs[i]);
  }
  if (!s.lhs.empty()) out << ' ';
  out << "|-";
  for (size_t i = 0; i < s.rhs.size(); ++i) {
    out << (i ? ", " : " ");
    out << print_prop(s.rhs[i]);
  }
  return out.str();
}

Sequent normalize_sequent(const Sequent& s) {
  Sequent out;
  for (const auto& p : s.lhs) out.lhs.push_back(to_nnf(p));
  for (const auto& p : s.rhs) out.lhs.push_back(to_nnf(make_neg(p)));
  return out;
}

}  // namespace osl
