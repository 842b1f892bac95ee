#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "lemma_suite.hpp"
#include "oracles.hpp"
#include "osl/errors.hpp"
#include "osl/model_zoo.hpp"

using namespace osl;
using namespace osl::testing;

TEST_CASE("classical_sets basics") {
  FiniteOSpace one = classical_sets(1);
  CHECK(one.size() == 1);
  CHECK(one.zero_set() == FiniteFlat{});
  CHECK(one.family().size() == 2);  // {} and {0}

  FiniteOSpace two = classical_sets(2);
  CHECK(two.family().size() == 4);

  FiniteOSpace three = classical_sets(3);
  for (const auto& a : three.family())
    for (const auto& b : three.family()) {
      CHECK(three.project_set(a, b) == set_intersect(a, b));
      CHECK(three.dual_sum_set(a, b) == set_union(a, b));
    }
  CHECK_THROWS_AS(classical_sets(0), StructuralError);
}

TEST_CASE("powerset_space basics") {
  FiniteOSpace zero = powerset_space(0);
  CHECK(zero.size() == 1);
  CHECK(zero.zero_set() == FiniteFlat({0}));  // the empty subset is in Z
  CHECK(zero.check_axioms().all_passed());

  FiniteOSpace one = powerset_space(1);
  CHECK(one.size() == 2);
  CHECK(one.zero_set() == FiniteFlat({0}));
  CHECK(one.family().size() == 2);

  FiniteOSpace two = powerset_space(2);
  CHECK(two.family().size() == 4);  // exactly the powersets 2^B
  // matches the generated family
  auto expect = naive_flat_family(two.size(), two.orth_matrix(), {});
  std::set<std::vector<int>> got;
  for (const auto& f : two.family()) got.insert(f.elements());
  CHECK(got == expect);
}

TEST_CASE("union of two one-point classical spaces is the two-point one") {
  FiniteOSpace u = union_space(classical_sets(1), classical_sets(1));
  FiniteOSpace two = classical_sets(2);
  CHECK(u.size() == two.size());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(u.orthogonal(i, j) == two.orthogonal(i, j));
  std::set<std::vector<int>> fu, ft;
  for (const auto& f : u.family()) fu.insert(f.elements());
  for (const auto& f : two.family()) ft.insert(f.elements());
  CHECK(fu == ft);
}

TEST_CASE("union zero set and complements split componentwise") {
  FiniteOSpace s0 = classical_sets(2);
  FiniteOSpace s1 = powerset_space(2);
  FiniteOSpace u = union_space(s0, s1);
  CHECK(u.size() == 6);
  // Z of the union is the union of the zero sets (shifted)
  FiniteFlat z = u.zero_set();
  FiniteFlat expect_z = set_union(s0.zero_set(), FiniteFlat({2 + 0}));
  CHECK(z == expect_z);

  // A^perp = (A ∩ X0)^perp0 ∪ (A ∩ X1)^perp1, checked on every subset of a
  // small sample
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<int> elems;
    for (int i = 0; i < 6; ++i)
      if (mask & (1u << i)) elems.push_back(i);
    FiniteFlat a(std::move(elems));
    std::vector<int> left, right;
    for (int x : a.elements()) (x < 2 ? left : right).push_back(x);
    for (int& x : right) x -= 2;
    FiniteFlat c0 = s0.complement_set(FiniteFlat(left));
    FiniteFlat c1 = s1.complement_set(FiniteFlat(right));
    std::vector<int> combined = c0.elements();
    for (int x : c1.elements()) combined.push_back(x + 2);
    CHECK(u.complement_set(a) == FiniteFlat(combined));
  }

  CHECK(u.check_axioms().all_passed());
  CHECK(lemma_suite_failures(u).empty());
}

TEST_CASE("every zoo constructor passes the axioms") {
  for (int n : {1, 2, 3, 4}) CHECK(classical_sets(n).check_axioms().all_passed());
  for (int m : {0, 1, 2, 3}) CHECK(powerset_space(m).check_axioms().all_passed());
  CHECK(union_space(classical_sets(2), powerset_space(2)).check_axioms().all_passed());
}

TEST_CASE("model file round trip") {
  FiniteOSpace s = classical_sets(2);
  std::string text = save_model_text(s);
  LoadedModel loaded = load_model_text(text);
  CHECK(loaded.report.all_passed());
  CHECK(loaded.space.size() == 2);
  CHECK(save_model_text(loaded.space) == text);

  // comments and odd orderings load to the same canonical save
  std::string annotated =
      "# a comment\nspace 2\north 1 0  # reversed pair\nflat\nflat 0\nflat 1\nflat 0 1\n";
  CHECK(save_model_text(load_model_text(annotated).space) == text);
}

TEST_CASE("duplicate flat lines collapse to one family member") {
  LoadedModel m = load_model_text(
      "space 2\north 0 1\nflat\nflat 0\nflat 0\nflat 1\nflat 0 1\nflat 1 0\n");
  CHECK(m.space.family().size() == 4);
  CHECK(m.report.all_passed());
}

TEST_CASE("file without flat lines generates the family") {
  LoadedModel m = load_model_text("space 2\north 0 1\n");
  CHECK(m.report.all_passed());
  std::set<std::vector<int>> got;
  for (const auto& f : m.space.family()) got.insert(f.elements());
  CHECK(got == naive_flat_family(2, m.space.orth_matrix(), {}));
}

TEST_CASE("asymmetric relation loads with an S failure report") {
  LoadedModel m = load_model_text("space 2\north-one 0 1\nflat\nflat 0\nflat 1\nflat 0 1\n");
  CHECK_FALSE(m.report.all_passed());
  CHECK(m.report.failure('S') != nullptr);
  CHECK_THROWS_AS(
      load_model_text("space 2\north-one 0 1\nflat\nflat 0\nflat 1\nflat 0 1\n",
                      LoadOptions{true}),
      StructuralError);
  // and it round-trips through save
  CHECK(save_model_text(load_model_text(save_model_text(m.space)).space) ==
        save_model_text(m.space));
}

TEST_CASE("malformed files are parse errors") {
  CHECK_THROWS_AS(load_model_text(""), ParseError);
  CHECK_THROWS_AS(load_model_text("orth 0 1\n"), ParseError);
  CHECK_THROWS_AS(load_model_text("space 2\north 0 5\n"), ParseError);
  CHECK_THROWS_AS(load_model_text("space 2\nfrob 1\n"), ParseError);
  CHECK_THROWS_AS(load_model_text("space 0\n"), ParseError);
}

TEST_CASE("model specs") {
  CHECK(make_model("zoo:sets:3")->finite_carrier());
  CHECK(make_model("zoo:powerset:2")->carrier_states().size() == 4);
  CHECK_FALSE(make_model("zoo:q2")->finite_carrier());
  auto u = make_model("zoo:union(zoo:sets:2,zoo:powerset:2)");
  CHECK(u->carrier_states().size() == 6);
  CHECK_THROWS_AS(make_model("zoo:frobnicate:3"), ParseError);
  CHECK_THROWS_AS(make_model("no/such/file.osm"), ParseError);
}

TEST_CASE("shipped model files load and re-save bit-stably") {
  namespace fs = std::filesystem;
  fs::path dir = fs::path(OSL_DATA_DIR) / "models";
  int count = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".osm") continue;
    ++count;
    std::ifstream in(entry.path());
    std::ostringstream buf;
    buf << in.rdbuf();
    LoadedModel m = load_model_text(buf.str());
    CHECK(save_model_text(m.space) == buf.str());
  }
  CHECK(count >= 4);
}
