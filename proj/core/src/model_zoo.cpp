#include "osl/model_zoo.hpp"

#include <fstream>
#include <sstream>

#include "osl/errors.hpp"

namespace osl {

FiniteOSpace classical_sets(int n) {
  if (n < 1) throw StructuralError("classical_sets requires n >= 1");
  std::vector<std::vector<bool>> orth(static_cast<size_t>(n),
                                      std::vector<bool>(static_cast<size_t>(n), true));
  for (int i = 0; i < n; ++i) orth[i][i] = false;

  // All 2^n subsets, in bitmask order.
  std::vector<FiniteFlat> flats;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) elems.push_back(i);
    flats.push_back(FiniteFlat(std::move(elems)));
  }
  return FiniteOSpace(n, std::move(orth), std::move(flats),
                      "zoo:sets:" + std::to_string(n));
}

FiniteOSpace powerset_space(int m) {
  if (m < 0) throw StructuralError("powerset_space requires m >= 0");
  int size = 1 << m;  // states are the subsets of Y, indexed by bitmask
  std::vector<std::vector<bool>> orth(static_cast<size_t>(size),
                                      std::vector<bool>(static_cast<size_t>(size)));
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) orth[x][y] = ((x & y) == 0);

  // Flats are exactly the powersets 2^B: the set of submasks of B.
  // (Construction deduplicates; only m = 0 produces a duplicate.)
  std::vector<FiniteFlat> flats;
  for (int b = 0; b < size; ++b) {
    std::vector<int> elems;
    for (int s = 0; s < size; ++s)
      if ((s & ~b) == 0) elems.push_back(s);
    flats.push_back(FiniteFlat(std::move(elems)));
  }
  return FiniteOSpace(size, std::move(orth), std::move(flats),
                      "zoo:powerset:" + std::to_string(m));
}

FiniteOSpace union_space(const FiniteOSpace& s0, const FiniteOSpace& s1) {
  int n0 = s0.size();
  int n = n0 + s1.size();
  std::vector<std::vector<bool>> orth(static_cast<size_t>(n),
                                      std::vector<bool>(static_cast<size_t>(n), true));
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j) orth[i][j] = s0.orthogonal(i, j);
  for (int i = 0; i < s1.size(); ++i)
    for (int j = 0; j < s1.size(); ++j) orth[n0 + i][n0 + j] = s1.orthogonal(i, j);

  std::vector<FiniteFlat> flats;
  for (const auto& a : s0.family()) {
    for (const auto& b : s1.family()) {
      std::vector<int> elems = a.elements();
      for (int x : b.elements()) elems.push_back(n0 + x);
      flats.push_back(FiniteFlat(std::move(elems)));
    }
  }
  return FiniteOSpace(n, std::move(orth), std::move(flats),
                      "union(" + s0.name() + "," + s1.name() + ")");
}

namespace {

struct ParsedModelFile {
  int size = -1;
  std::vector<std::vector<bool>> orth;
  std::vector<FiniteFlat> flats;
  bool has_flat_lines = false;
};

ParsedModelFile parse_model_file(std::string_view text) {
  ParsedModelFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto need_space = [&] {
    if (out.size < 0)
      throw ParseError("line " + std::to_string(lineno) + ": `space` must come first");
  };
  auto check_index = [&](int i) {
    if (i < 0 || i >= out.size)
      throw ParseError("line " + std::to_string(lineno) + ": state " +
                       std::to_string(i) + " out of range");
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "space") {
      int n;
      if (!(ls >> n) || n < 1)
        throw ParseError("line " + std::to_string(lineno) + ": bad carrier size");
      if (out.size >= 0)
        throw ParseError("line " + std::to_string(lineno) + ": duplicate `space`");
      out.size = n;
      out.orth.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    } else if (word == "orth" || word == "orth-one") {
      need_space();
      int i, j;
      if (!(ls >> i >> j))
        throw ParseError("line " + std::to_string(lineno) + ": `" + word +
                         "` needs two state indices");
      check_index(i);
      check_index(j);
      out.orth[i][j] = true;
      if (word == "orth") out.orth[j][i] = true;
    } else if (word == "flat") {
      need_space();
      std::vector<int> elems;
      int i;
      while (ls >> i) {
        check_index(i);
        elems.push_back(i);
      }
      out.flats.push_back(FiniteFlat(std::move(elems)));
      out.has_flat_lines = true;
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown statement `" +
                       word + "`");
    }
    std::string rest;
    if (ls >> rest)
      throw ParseError("line " + std::to_string(lineno) + ": trailing `" + rest + "`");
  }
  if (out.size < 0) throw ParseError("model file has no `space` statement");
  return out;
}

}  // namespace

LoadedModel load_model_text(std::string_view text, const LoadOptions& opts) {
  ParsedModelFile parsed = parse_model_file(text);
  std::vector<FiniteFlat> flats = parsed.has_flat_lines
                                      ? parsed.flats
                                      : generate_flat_family(parsed.size, parsed.orth, {});
  FiniteOSpace space =
      FiniteOSpace::from_raw(parsed.size, parsed.orth, std::move(flats), "file");
  AxiomReport report = space.check_axioms();
  if (opts.strict && !report.all_passed())
    throw StructuralError("model fails axioms:\n" + report.to_string());
  return LoadedModel{std::move(space), std::move(report)};
}

LoadedModel load_model(const std::string& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  LoadedModel m = load_model_text(buf.str(), opts);
  return m;
}

std::string save_model_text(const FiniteOSpace& space) {
  std::ostringstream out;
  out << "space " << space.size() << "\n";
  const auto& orth = space.orth_matrix();
  for (int i = 0; i < space.size(); ++i)
    for (int j = i; j < space.size(); ++j)
      if (orth[i][j] && orth[j][i]) out << "orth " << i << " " << j << "\n";
  for (int i = 0; i < space.size(); ++i)
    for (int j = 0; j < space.size(); ++j)
      if (orth[i][j] && !orth[j][i]) out << "orth-one " << i << " " << j << "\n";
  for (const auto& f : space.family()) {
    out << "flat";
    for (int x : f.elements()) out << " " << x;
    out << "\n";
  }
  return out.str();
}

void save_model(const FiniteOSpace& space, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write model file " + path);
  out << save_model_text(space);
}

namespace {

// zoo:union(<spec>,<spec>) needs a comma split at nesting depth zero.
std::pair<std::string, std::string> split_union_args(const std::string& args) {
  int depth = 0;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == '(') ++depth;
    if (args[i] == ')') --depth;
    if (args[i] == ',' && depth == 0)
      return {args.substr(0, i), args.substr(i + 1)};
  }
  throw ParseError("zoo:union needs two comma-separated operand specs");
}

FiniteOSpace make_finite_model(const std::string& spec, const LoadOptions& opts);

FiniteOSpace make_zoo_finite(const std::string& spec, const LoadOptions& opts) {
  if (spec.rfind("zoo:sets:", 0) == 0) return classical_sets(std::stoi(spec.substr(9)));
  if (spec.rfind("zoo:powerset:", 0) == 0)
    return powerset_space(std::stoi(spec.substr(13)));
  if (spec.rfind("zoo:union(", 0) == 0 && spec.back() == ')') {
    auto [left, right] = split_union_args(spec.substr(10, spec.size() - 11));
    return union_space(make_finite_model(left, opts), make_finite_model(right, opts));
  }
  throw ParseError("unknown zoo spec " + spec);
}

FiniteOSpace make_finite_model(const std::string& spec, const LoadOptions& opts) {
  if (spec.rfind("zoo:", 0) == 0) return make_zoo_finite(spec, opts);
  return load_model(spec, opts).space;
}

}  // namespace

std::unique_ptr<OSpace> make_model(const std::string& spec, const LoadOptions& opts) {
  try {
    if (spec == "zoo:q2")
      return std::make_unique<RationalOSpace>(RationalOSpace::standard_q2());
    return std::make_unique<FiniteOSpace>(make_finite_model(spec, opts));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad model spec " + spec);
  } catch (const std::out_of_range&) {
    throw ParseError("bad model spec " + spec);
  }
}

std::vector<std::string> default_zoo_specs() {
  return {"zoo:sets:1", "zoo:sets:2", "zoo:sets:3", "zoo:powerset:2", "zoo:q2"};
}

}  // namespace osl
