#include "osl/flat.hpp"

#include <algorithm>
#include <sstream>

#include "osl/errors.hpp"

namespace osl {

FiniteFlat::FiniteFlat(std::vector<int> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.front() < 0)
    throw StructuralError("negative state index in flat");
}

FiniteFlat FiniteFlat::range(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  FiniteFlat f;
  f.elems_ = std::move(v);
  return f;
}

bool FiniteFlat::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool FiniteFlat::subset_of(const FiniteFlat& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

int FiniteFlat::max_element() const { return elems_.empty() ? -1 : elems_.back(); }

std::string FiniteFlat::to_string() const {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) out << ',';
    out << elems_[i];
  }
  out << '}';
  return out.str();
}

FiniteFlat FiniteFlat::parse(std::string_view text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '{')
    throw ParseError("finite flat literal must start with '{'");
  ++pos;
  std::vector<int> elems;
  skip_ws();
  while (pos < text.size() && text[pos] != '}') {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected state index in flat literal");
    elems.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_ws();
    }
  }
  if (pos >= text.size()) throw ParseError("unterminated flat literal");
  ++pos;  // '}'
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after flat literal");
  return FiniteFlat(std::move(elems));
}

FiniteFlat set_union(const FiniteFlat& a, const FiniteFlat& b) {
  std::vector<int> out;
  std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(),
                 b.elements().end(), std::back_inserter(out));
  return FiniteFlat(std::move(out));
}

FiniteFlat set_intersect(const FiniteFlat& a, const FiniteFlat& b) {
  std::vector<int> out;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return FiniteFlat(std::move(out));
}

FiniteFlat set_difference(const FiniteFlat& a, const FiniteFlat& b) {
  std::vector<int> out;
  std::set_difference(a.elements().begin(), a.elements().end(),
                      b.elements().begin(), b.elements().end(),
                      std::back_inserter(out));
  return FiniteFlat(std::move(out));
}

const FiniteFlat& Flat::finite() const {
  if (!is_finite()) throw StructuralError("flat is not a finite set");
  return std::get<FiniteFlat>(repr_);
}

const Subspace& Flat::subspace() const {
  if (is_finite()) throw StructuralError("flat is not a subspace");
  return std::get<Subspace>(repr_);
}

std::string Flat::to_string() const {
  return is_finite() ? finite().to_string() : subspace().to_string();
}

Flat Flat::parse(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos < text.size() && text[pos] == '{') return Flat(FiniteFlat::parse(text));
  return Flat(Subspace::parse(text));
}

}  // namespace osl
