#include "osl/subspace.hpp"

#include <cctype>
#include <sstream>

#include "osl/errors.hpp"

namespace osl {

Subspace Subspace::zero(int ambient) {
  if (ambient < 1) throw StructuralError("ambient dimension must be >= 1");
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s = zero(ambient);
  for (int i = 0; i < ambient; ++i) {
    RationalVector row(static_cast<size_t>(ambient), Rational(0));
    row[static_cast<size_t>(i)] = 1;
    s.basis_.push_back(std::move(row));
  }
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<RationalVector>& vectors) {
  Subspace s = zero(ambient);
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient)
      throw StructuralError("span vector has wrong dimension");
  s.basis_ = rref(vectors);
  return s;
}

Subspace Subspace::from_rref(int ambient, RationalMatrix canonical) {
  Subspace s = zero(ambient);
  s.basis_ = std::move(canonical);
  return s;
}

bool Subspace::contains(const RationalVector& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw StructuralError("vector has wrong dimension");
  return in_row_space(basis_, v);
}

std::string Subspace::to_string() const {
  std::ostringstream out;
  out << "span[";
  if (basis_.empty()) {
    // keep the ambient dimension in the literal so it parses back
    out << vector_to_string(RationalVector(static_cast<size_t>(ambient_), Rational(0)));
  }
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (i) out << ',';
    out << vector_to_string(basis_[i]);
  }
  out << ']';
  return out.str();
}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in " + what);
  }
};

RationalVector parse_vector(Cursor& cur) {
  cur.expect('(', "subspace literal");
  RationalVector v;
  cur.skip_ws();
  while (cur.pos < cur.text.size() && cur.text[cur.pos] != ')') {
    size_t start = cur.pos;
    while (cur.pos < cur.text.size() &&
           (std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])) ||
            cur.text[cur.pos] == '-' || cur.text[cur.pos] == '+' ||
            cur.text[cur.pos] == '/'))
      ++cur.pos;
    if (cur.pos == start) throw ParseError("expected rational in vector literal");
    v.push_back(parse_rational(cur.text.substr(start, cur.pos - start)));
    cur.skip_ws();
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == ',') {
      ++cur.pos;
      cur.skip_ws();
    }
  }
  cur.expect(')', "vector literal");
  return v;
}

}  // namespace

Subspace Subspace::parse(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  constexpr std::string_view kw = "span";
  if (cur.text.substr(cur.pos, kw.size()) != kw)
    throw ParseError("subspace literal must start with 'span['");
  cur.pos += kw.size();
  cur.expect('[', "subspace literal");
  std::vector<RationalVector> vectors;
  cur.skip_ws();
  while (cur.pos < cur.text.size() && cur.text[cur.pos] != ']') {
    vectors.push_back(parse_vector(cur));
    cur.skip_ws();
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == ',') {
      ++cur.pos;
      cur.skip_ws();
    }
  }
  cur.expect(']', "subspace literal");
  cur.skip_ws();
  if (cur.pos != cur.text.size())
    throw ParseError("trailing characters after subspace literal");
  if (vectors.empty())
    throw ParseError("empty span literal has no dimension; use span[(0,...,0)]");
  int ambient = static_cast<int>(vectors.front().size());
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient)
      throw ParseError("inconsistent vector dimensions in span literal");
  return Subspace::span(ambient, vectors);
}

Subspace orth_subspace(const Subspace& a) {
  return Subspace::from_rref(a.ambient(), nullspace(a.basis(), a.ambient()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw StructuralError("intersect: ambient dimension mismatch");
  // Constraints cutting out a and b, stacked; their nullspace is a ∩ b.
  Subspace ca = orth_subspace(a);
  Subspace cb = orth_subspace(b);
  return Subspace::from_rref(
      a.ambient(), nullspace(stack(ca.basis(), cb.basis()), a.ambient()));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw StructuralError("sum: ambient dimension mismatch");
  return Subspace::from_rref(a.ambient(), rref(stack(a.basis(), b.basis())));
}

bool includes(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw StructuralError("includes: ambient dimension mismatch");
  for (const auto& row : a.basis())
    if (!in_row_space(b.basis(), row)) return false;
  return true;
}

Subspace project_subspace(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw StructuralError("project: ambient dimension mismatch");
  Subspace step = intersect(b, orth_subspace(a));
  return intersect(b, orth_subspace(step));
}

Subspace sum_dual(const Subspace& a, const Subspace& b) {
  return orth_subspace(project_subspace(orth_subspace(b), orth_subspace(a)));
}

}  // namespace osl
