#include <doctest.h>

#include "oracles.hpp"
#include "skewalg/group.hpp"

using namespace skewalg;
using namespace skewalg::grp;

namespace {

Errc error_of(const Table& t) {
  try {
    make_group(t);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::ParseError;
}

std::vector<NamedGroup> all_small() {
  std::vector<NamedGroup> out;
  for (std::size_t n = 1; n <= 8; ++n)
    for (auto& g : small_groups(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST_CASE("validation rejects malformed tables in order") {
  CHECK(error_of({{0, 1}, {1}}) == Errc::NotSquare);
  CHECK(error_of({{0, 2}, {1, 0}}) == Errc::IndexOutOfRange);
  CHECK(error_of({{0, 1}, {0, 1}}) == Errc::NotLatinSquare);
  // x o y = -x - y mod 3: a latin square without identity
  CHECK(error_of({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}) == Errc::NoIdentity);
  CHECK(error_of({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}}) ==
        Errc::NoInverse);
  // a loop of order 5 in which every element is its own inverse
  CHECK(error_of({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}) ==
        Errc::NotAssociative);
}

TEST_CASE("witnesses of validation errors") {
  try {
    make_group({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLatinSquare);
    CHECK(e.witness() == std::vector<std::size_t>{1});  // column 1 repeats
  }
}

TEST_CASE("standard groups are valid and re-validate") {
  for (const auto& g : all_small()) {
    CAPTURE(g.name);
    CHECK(check_group_axioms(g.group).holds);
    CHECK(make_group(g.group.table()) == g.group);
  }
  CHECK(symmetric_group(4).order() == 24);
  CHECK(!symmetric_group(3).is_abelian());
  CHECK(dihedral_group(12).order() == 24);
  CHECK(is_dihedral(dihedral_group(4), 4));
  CHECK(!is_dihedral(quaternion_group(), 4));
  CHECK(!is_dihedral(cyclic_group(8), 4));
  CHECK(is_dihedral(symmetric_group(3), 3));
}

TEST_CASE("element orders and powers") {
  const auto z = cyclic_group(6);
  CHECK(z.element_order(2) == 3);
  CHECK(z.power(5, 4) == 2);
  const auto q = quaternion_group();
  std::size_t order4 = 0;
  for (Element x = 0; x < 8; ++x) order4 += q.element_order(x) == 4;
  CHECK(order4 == 6);
}

TEST_CASE("subgroups agree with subset brute force") {
  for (const auto& g : all_small()) {
    CAPTURE(g.name);
    CHECK(subgroups(g.group) == oracle::subgroups(g.group));
  }
  CHECK(subgroups(symmetric_group(3)).size() == 6);
  CHECK(subgroups(dihedral_group(4)).size() == 10);
  CHECK(subgroups(quaternion_group()).size() == 6);
}

TEST_CASE("normal subgroups") {
  const auto s3 = symmetric_group(3);
  for (const auto& h : subgroups(s3)) {
    const bool normal = is_normal_subgroup(s3, h).holds;
    CHECK(normal == (h.size() != 2));
  }
  CHECK_THROWS_AS(is_normal_subgroup(s3, ElementSet(6, {0, 1, 2})), Error);
  const auto v = is_normal_subgroup(s3, subgroups(s3)[1]);
  REQUIRE(!v.holds);
  CHECK(v.first("conjugate") != nullptr);
}

TEST_CASE("automorphisms agree with permutation brute force") {
  for (const auto& g : all_small()) {
    CAPTURE(g.name);
    const auto fast = automorphisms(g.group);
    const auto slow = oracle::automorphisms(g.group);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].images == slow[i]);
    for (const auto& f : fast) CHECK(is_automorphism(g.group, f));
  }
  CHECK(automorphisms(direct_product(cyclic_group(2), cyclic_group(4))).size() == 8);
  CHECK(automorphisms(direct_product(cyclic_group(2), cyclic_group(2))).size() == 6);
  CHECK(automorphisms(direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2)))).size() ==
        168);
  CHECK_THROWS_AS(automorphisms(cyclic_group(17)), Error);
}

TEST_CASE("abelian invariants") {
  using V = std::vector<std::uint64_t>;
  CHECK(abelian_invariants(cyclic_group(1)) == V{});
  CHECK(abelian_invariants(cyclic_group(6)) == V{6});
  CHECK(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(4))) == V{2, 4});
  CHECK(abelian_invariants(direct_product(cyclic_group(4), cyclic_group(6))) == V{2, 12});
  CHECK(abelian_invariants(direct_product(cyclic_group(3), cyclic_group(8))) == V{24});
  CHECK(abelian_invariants(direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(3)))) ==
        V{2, 6});
  CHECK(!abelian_invariants(symmetric_group(3)));
}

TEST_CASE("opposite group and homomorphisms") {
  const auto s3 = symmetric_group(3);
  const auto op = opposite(s3);
  GroupMap inv{s3.inverses()};
  CHECK(is_homomorphism(s3, op, inv));
  CHECK(!is_homomorphism(s3, s3, inv));
}

TEST_CASE("holomorph and regular subgroups") {
  const auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  const auto hol = holomorph(v4);
  CHECK(hol.perm.group.order() == 24);
  CHECK(regular_subgroups(hol.perm).size() == 4);
  const auto z4 = holomorph(cyclic_group(4));
  CHECK(z4.perm.group.order() == 8);
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& g : small_groups(n)) {
      CAPTURE(g.name);
      const auto h = holomorph(g.group);
      const auto regs = regular_subgroups(h.perm);
      CHECK(regs == regular_subgroups_serial(h.perm));
      for (const auto& r : regs) {
        CHECK(r.size() == n);
        CHECK(is_subgroup(h.perm.group, r));
        std::vector<char> hit(n, 0);
        for (Element x : r) hit[h.perm.perms[x][0]] = 1;
        CHECK(std::count(hit.begin(), hit.end(), 1) == int(n));
      }
    }
}

TEST_CASE("permutation groups") {
  const Permutation swap{1, 0, 2}, id{0, 1, 2};
  std::vector<Permutation> perms{id, swap};
  const auto pg = make_permutation_group(perms);
  CHECK(pg.group.order() == 2);
  CHECK(pg.degree == 3);
  const Element gens[] = {1};
  CHECK(generated_subgroup(cyclic_group(6), gens).size() == 6);
}
