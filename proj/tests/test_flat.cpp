#include <doctest.h>

#include <random>

#include "osl/errors.hpp"
#include "osl/flat.hpp"

using namespace osl;

TEST_CASE("finite flats canonicalize on construction") {
  FiniteFlat f({3, 1, 2, 1, 3});
  CHECK(f.elements() == std::vector<int>{1, 2, 3});
  CHECK(f == FiniteFlat({1, 2, 3}));
  CHECK(FiniteFlat{}.empty());
  CHECK_THROWS_AS(FiniteFlat({-1}), StructuralError);
}

TEST_CASE("set operations") {
  FiniteFlat a({0, 1, 3});
  FiniteFlat b({1, 2});
  CHECK(set_union(a, b) == FiniteFlat({0, 1, 2, 3}));
  CHECK(set_intersect(a, b) == FiniteFlat({1}));
  CHECK(set_difference(a, b) == FiniteFlat({0, 3}));
  CHECK(FiniteFlat({1}).subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  CHECK(FiniteFlat{}.subset_of(b));
}

TEST_CASE("flat literal round trip") {
  CHECK(FiniteFlat::parse("{0, 2, 5}") == FiniteFlat({0, 2, 5}));
  CHECK(FiniteFlat::parse(" { } ") == FiniteFlat{});
  CHECK(FiniteFlat({0, 2}).to_string() == "{0,2}");
  CHECK_THROWS_AS(FiniteFlat::parse("{0,"), ParseError);
  CHECK_THROWS_AS(FiniteFlat::parse("0, 1"), ParseError);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 8), elem(0, 30);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> elems;
    for (int k = len(rng); k-- > 0;) elems.push_back(elem(rng));
    FiniteFlat f(std::move(elems));
    CHECK(FiniteFlat::parse(f.to_string()) == f);
  }
}

TEST_CASE("generic flat wrapper dispatches by kind") {
  Flat fin{FiniteFlat({1, 2})};
  CHECK(fin.is_finite());
  CHECK(fin.finite() == FiniteFlat({1, 2}));
  CHECK_THROWS_AS(fin.subspace(), StructuralError);

  Flat sub{Subspace::full(2)};
  CHECK_FALSE(sub.is_finite());
  CHECK(sub.subspace().rank() == 2);

  CHECK(Flat::parse("{1,2}") == fin);
  CHECK(Flat::parse("span[(1,0),(0,1)]") == sub);
}
