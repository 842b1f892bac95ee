#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace osl {

// Exact arbitrary-precision rational scalar. Floating point is forbidden in
// the rational backend: flat equality must be decidable and bit-stable.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);  // "p" or "p/q"
std::string rational_to_string(const Rational& r);

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero_vector(const RationalVector& v);

// Reduced row echelon form: pivots 1, pivot columns otherwise zero, zero rows
// dropped, rows ordered by pivot column. The result is the canonical
// representative of the row space.
RationalMatrix rref(RationalMatrix m);

int rank(const RationalMatrix& rref_matrix);

// Basis (in rref form) of { x : m x = 0 }, rows of m read as constraints.
RationalMatrix nullspace(const RationalMatrix& m, int cols);

RationalMatrix stack(const RationalMatrix& a, const RationalMatrix& b);

// Is v a linear combination of the rows of rref_matrix?
bool in_row_space(const RationalMatrix& rref_matrix, const RationalVector& v);

std::string vector_to_string(const RationalVector& v);  // (1,-1/2,0)

}  // namespace osl
