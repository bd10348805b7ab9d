#include <doctest.h>

#include <random>

#include "skewalg/core.hpp"
#include "skewalg/kernels.hpp"

using namespace skewalg;

TEST_CASE("ElementSet normalises and range-checks") {
  const ElementSet s(10, {8, 0, 8, 3});
  CHECK(s.items() == std::vector<Element>{0, 3, 8});
  CHECK(s.to_string() == "0,3,8");
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(ElementSet(10, {0, 3}).is_subset_of(s));
  CHECK(s.intersect(ElementSet(10, {3, 4, 8})) == ElementSet(10, {3, 8}));
  CHECK(ElementSet::from_mask(s.mask()) == s);
  CHECK(ElementSet::all(3) == ElementSet(3, {0, 1, 2}));
  CHECK_THROWS_AS(ElementSet(4, {4}), Error);
}

TEST_CASE("ElementSet ordering is by size then lexicographic") {
  CHECK(ElementSet(8, {5}) < ElementSet(8, {0, 1}));
  CHECK(ElementSet(8, {0, 2}) < ElementSet(8, {1, 2}));
  CHECK_FALSE(ElementSet(8, {1, 2}) < ElementSet(8, {1, 2}));
}

TEST_CASE("parse_csv_elements") {
  CHECK(parse_csv_elements("0,8, 16") == std::vector<Element>{0, 8, 16});
  CHECK_THROWS_AS(parse_csv_elements("0,,1"), Error);
  CHECK_THROWS_AS(parse_csv_elements("0,-1"), Error);
  try {
    parse_csv_elements("a");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("Verdict records witnesses") {
  Verdict v("demo");
  CHECK(v.holds);
  v.fail("triple", {1, 2, 3});
  CHECK_FALSE(v.holds);
  REQUIRE(v.first("triple") != nullptr);
  CHECK(v.first("triple")->elements == std::vector<Element>{1, 2, 3});
  CHECK(v.first("other") == nullptr);
  CHECK(v.to_string() == "demo: false [triple 1 2 3]");
}

TEST_CASE("parallel triple scan agrees with the serial reference") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 20 + rng() % 20;
    std::vector<char> bad(n * n * n, 0);
    const int holes = int(rng() % 4);
    for (int h = 0; h < holes; ++h) bad[rng() % bad.size()] = 1;
    auto holds = [&](Element a, Element b, Element c) { return !bad[(std::size_t(a) * n + b) * n + c]; };
    CHECK(kernels::first_failing_triple_serial(n, holds) == kernels::first_failing_triple_parallel(n, holds));
    CHECK(kernels::first_failing_triple(n, holds) == kernels::first_failing_triple_serial(n, holds));
  }
}

TEST_CASE("errc names are distinct") {
  CHECK(std::string(errc_name(Errc::NotLatinSquare)) != errc_name(Errc::NoIdentity));
  const Error e(Errc::NotAssociative, "msg", {1, 2, 3}, "mul");
  CHECK(e.code() == Errc::NotAssociative);
  CHECK(e.side() == "mul");
  CHECK(e.witness().size() == 3);
}
