#include <doctest.h>

#include "oracles.hpp"
#include "skewalg/algebra.hpp"
#include "skewalg/verify.hpp"

using namespace skewalg;
using namespace skewalg::nalg;

namespace {

StructureAlgebra unit_line() { return make_algebra(1, {{0, 0, 0, 1}}); }

Errc algebra_error(std::size_t dim, std::vector<Entry> entries) {
  try {
    make_algebra(dim, std::move(entries));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(to_string(Rational(2, 4)) == "1/2");
  CHECK(to_string(Rational(-3)) == "-3/1");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("make_algebra normalises and validates") {
  const auto a = make_algebra(2, {{1, 1, 0, 3}, {0, 0, 0, 0}, {0, 1, 1, 1}});
  REQUIRE(a.product_entries().size() == 2);
  CHECK(a.product_entries()[0].i == 0);
  CHECK(a.product_entries()[1].coeff == 3);
  CHECK(algebra_error(4, {{0, 0, 5, 1}}) == Errc::IndexOutOfRange);
  CHECK(algebra_error(2, {{0, 0, 0, 1}, {0, 0, 0, 2}}) == Errc::DuplicateEntry);
  CHECK_THROWS_AS(multiply(a, Vec(3), Vec(2)), Error);
}

TEST_CASE("I4 products") {
  const auto a = build_i4();
  CHECK(a.dim() == 4);
  CHECK(multiply(a, basis(4, 1), basis(4, 1)) == basis(4, 0));
  CHECK(multiply(a, basis(4, 1), basis(4, 2)) == Vec(4));
  CHECK(multiply(a, basis(4, 0), basis(4, 0)) == Vec{2, 0, 0, 0});
  CHECK(multiply(a, basis(4, 3), basis(4, 3)) == basis(4, 0));
  CHECK(multiply(a, basis(4, 0), basis(4, 3)) == basis(4, 3));
  CHECK(multiply(a, basis(4, 3), basis(4, 0)) == Vec(4));
  const Vec u{1, 2, 0, 0}, v{0, 1, 0, Rational(1, 2)};
  // (e1 + 2e2)(e2 + e4/2) = e2 + e4/2 + 2e1
  CHECK(multiply(a, u, v) == Vec{2, 1, 0, Rational(1, 2)});
}

TEST_CASE("pre-Lie checks") {
  CHECK(is_pre_lie(build_i4()).holds);
  CHECK(is_pre_lie(unit_line()).holds);
  const auto bad = make_algebra(2, {{0, 0, 0, 1}, {1, 0, 0, 1}});
  const auto v = is_pre_lie(bad);
  CHECK_FALSE(v.holds);
  REQUIRE(v.first("triple") != nullptr);
  CHECK(v.first("triple")->elements == std::vector<Element>{0, 1, 0});
}

TEST_CASE("Novikov checks") {
  CHECK(is_novikov(unit_line()).holds);
  CHECK(is_novikov(make_algebra(3, {})).holds);
  const auto v = is_novikov(build_i4());
  CHECK_FALSE(v.holds);
  CHECK(v.first("pre-lie") == nullptr);
  const auto& ws = v.witnesses;
  CHECK(std::any_of(ws.begin(), ws.end(),
                    [](const Witness& w) { return w.elements == std::vector<Element>{1, 1, 2}; }));
}

TEST_CASE("post-Lie checks") {
  const std::vector<Entry> heis{{0, 1, 2, 1}, {1, 0, 2, -1}};
  CHECK(is_post_lie(make_algebra(3, {}, heis)).holds);
  CHECK(is_post_lie(make_algebra(3, heis, heis)).holds);
  CHECK(is_post_lie(make_algebra(4, build_i4().product_entries(), std::vector<Entry>{})).holds);
  CHECK(is_post_lie(build_i4()).holds);  // absent bracket is zero
  const auto not_anti = is_post_lie(make_algebra(2, {}, std::vector<Entry>{{0, 1, 0, 1}}));
  CHECK_FALSE(not_anti.holds);
  CHECK(not_anti.first("antisymmetry") != nullptr);
  // sl2-like bracket with zero product: Lie, so post-Lie
  const std::vector<Entry> sl2{{0, 1, 2, 1}, {1, 0, 2, -1}, {2, 0, 0, 2}, {0, 2, 0, -2}, {2, 1, 1, -2}, {1, 2, 1, 2}};
  CHECK(is_post_lie(make_algebra(3, {}, sl2)).holds);
  // a bracket failing Jacobi
  const std::vector<Entry> broken{{0, 1, 2, 1}, {1, 0, 2, -1}, {0, 2, 0, 1}, {2, 0, 0, -1}};
  CHECK(is_post_lie(make_algebra(3, {}, broken)).first("jacobi") != nullptr);
}

TEST_CASE("identity equations for I4") {
  const auto a = build_i4();
  const auto left = identity_equations(a, Side::Left);
  CHECK(left.size() == 256);  // d^4 for d = 4
  const auto right = solve_identity(a, Side::Right);
  CHECK_FALSE(right.consistent);
  CHECK_FALSE(right.sample);
  REQUIRE(right.witness);
  CHECK(*right.witness == std::array<std::size_t, 3>{1, 2, 2});
  CHECK(std::find(right.certificates.begin(), right.certificates.end(), std::array<std::size_t, 3>{2, 1, 1}) !=
        right.certificates.end());
  const auto l = solve_identity(a, Side::Left);
  CHECK(l.consistent);
  REQUIRE(l.sample);
  CHECK(zero_residual(a, Side::Left, *l.sample));
  CHECK(zero_residual(a, Side::Left, pre_lie_left_assignment()));
  CHECK_FALSE(zero_residual(a, Side::Right, pre_lie_left_assignment()));
  CHECK(accessibility_verdict(a).obstructs());
}

TEST_CASE("small algebras have no obstruction") {
  for (std::size_t d = 1; d <= 3; ++d) CHECK_FALSE(accessibility_verdict(make_algebra(d, {})).obstructs());
  const auto v = accessibility_verdict(unit_line());
  CHECK_FALSE(v.obstructs());
  CHECK(v.left.nullity == 7);
}

TEST_CASE("solver agrees with the grid oracle on dimension 2") {
  const auto corpus = verify::algebra_corpus();
  std::size_t infeasible = 0, checked = 0;
  for (std::size_t idx = 0; idx < corpus.size(); idx += 5) {
    const auto& a = corpus[idx];
    if (a.dim() != 2) continue;
    for (auto side : {Side::Left, Side::Right}) {
      const auto sol = solve_identity(a, side);
      ++checked;
      if (sol.consistent) {
        CHECK(zero_residual(a, side, *sol.sample));
        continue;
      }
      ++infeasible;
      REQUIRE(sol.witness);
      const auto eqs = identity_equations(a, side);
      // a certificate block admits no solution, so no grid point satisfies it
      for (const auto& t : sol.certificates) CHECK_FALSE(oracle::grid_satisfies_block(eqs, t));
      if (sol.certificates.empty()) {
        std::vector<const Equation*> all;
        for (const auto& e : eqs) all.push_back(&e);
        CHECK_FALSE(oracle::grid_satisfies(all));
      }
    }
  }
  CHECK(checked > 100);
  CHECK(infeasible > 0);
}

TEST_CASE("pre-Lie corpus satisfies the fixed left assignment") {
  std::size_t pre_lie = 0;
  for (const auto& a : verify::algebra_corpus())
    if (is_pre_lie(a).holds) {
      ++pre_lie;
      CHECK(zero_residual(a, Side::Left, pre_lie_left_assignment()));
    }
  CHECK(pre_lie > 10);
}

TEST_CASE("algebra files") {
  const auto a = build_i4();
  const std::string text = format_algebra(a);
  CHECK(text.rfind("dim 4\nproduct\n0 0 0 2/1\n", 0) == 0);
  const auto back = parse_algebra(text);
  CHECK(format_algebra(back) == text);
  const auto with_bracket = make_algebra(3, {}, std::vector<Entry>{{0, 1, 2, Rational(1, 3)}, {1, 0, 2, Rational(-1, 3)}});
  CHECK(format_algebra(parse_algebra(format_algebra(with_bracket))) == format_algebra(with_bracket));
  CHECK(parse_algebra("# comment\ndim 1\nproduct\n0 0 0 1\n").product_entries().size() == 1);
  try {
    parse_algebra("dim 2\nproduct\n0 0 0\n");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(e.witness() == std::vector<std::size_t>{3});
  }
  CHECK_THROWS_AS(parse_algebra("dim 2\n"), Error);
  CHECK_THROWS_AS(parse_algebra("product\n"), Error);
  try {
    parse_algebra("dim 2\nproduct\n0 0 3 1\n");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndexOutOfRange);
  }
}
