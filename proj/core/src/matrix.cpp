#include "osl/matrix.hpp"

#include <sstream>

#include "osl/errors.hpp"

namespace osl {

Rational make_rational(long num, long den) {
  if (den == 0) throw StructuralError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw ParseError("bad rational literal: " + s);
  }
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(mpz_class(s));
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: " + s);
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + s);
  }
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw StructuralError("dot product dimension mismatch");
  Rational acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RationalMatrix rref(RationalMatrix m) {
  if (m.empty()) return m;
  const size_t rows = m.size();
  const size_t cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw StructuralError("ragged matrix");

  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t sel = pivot_row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[pivot_row]);
    Rational inv = m[pivot_row][col];
    for (size_t c = col; c < cols; ++c) m[pivot_row][c] /= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[pivot_row][c];
    }
    ++pivot_row;
  }
  m.resize(pivot_row);  // remaining rows are zero
  return m;
}

int rank(const RationalMatrix& rref_matrix) {
  return static_cast<int>(rref_matrix.size());
}

RationalMatrix nullspace(const RationalMatrix& m, int cols) {
  RationalMatrix r = rref(m);
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (const auto& row : r) {
    int p = 0;
    while (p < cols && row[static_cast<size_t>(p)] == 0) ++p;
    pivot_col_of_row.push_back(p);
    if (p < cols) is_pivot[static_cast<size_t>(p)] = true;
  }
  RationalMatrix basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    RationalVector v(static_cast<size_t>(cols), Rational(0));
    v[static_cast<size_t>(free_col)] = 1;
    for (size_t row = 0; row < r.size(); ++row) {
      int p = pivot_col_of_row[row];
      if (p < cols) v[static_cast<size_t>(p)] = -r[row][static_cast<size_t>(free_col)];
    }
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis));
}

RationalMatrix stack(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool in_row_space(const RationalMatrix& rref_matrix, const RationalVector& v) {
  // Reduce v by the echelon rows; membership iff the residue is zero.
  RationalVector residue = v;
  const size_t cols = v.size();
  for (const auto& row : rref_matrix) {
    size_t p = 0;
    while (p < cols && row[p] == 0) ++p;
    if (p == cols) continue;
    if (residue[p] == 0) continue;
    Rational factor = residue[p];
    for (size_t c = p; c < cols; ++c) residue[c] -= factor * row[c];
  }
  return is_zero_vector(residue);
}

std::string vector_to_string(const RationalVector& v) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i].get_str();
  }
  out << ')';
  return out.str();
}

}  // namespace osl
