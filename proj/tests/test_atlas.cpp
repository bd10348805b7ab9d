#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include <unistd.h>

#include "oracles.hpp"
#include "skewalg/atlas.hpp"

using namespace skewalg;
using namespace skewalg::atlas;

TEST_CASE("Q labels and element facts") {
  const auto q = build_q8();
  CHECK(q.label(4) == "(1,0)");
  CHECK(q.label(3) == "(0,3)");
  CHECK(q.brace.mul(4, 3) == 1);
  CHECK(q.brace.mul(1, 1) == 6);
  CHECK(b24_kernel_in_q() == ElementSet(8, {0, 1, 5, 6}));
}

TEST_CASE("order-12 brace formula") {
  const auto b = build_acbon12().brace;
  auto idx = [](Element n, Element m) { return Element(4 * n + m); };
  CHECK(b.add(idx(2, 1), idx(2, 1)) == idx(1, 2));
  // (n,m) o (x,y) = (n + (-1)^(m(m-1)/2) x, m + (-1)^m y)
  CHECK(b.mul(idx(0, 2), idx(1, 1)) == idx(2, 3));
  CHECK(b.mul(idx(0, 1), idx(1, 1)) == idx(1, 0));
  CHECK(b.mul(idx(1, 3), idx(1, 2)) == idx(0, 1));
}

TEST_CASE("order-24 brace structure") {
  const auto e = build_b24();
  CHECK(e.brace.order() == 24);
  CHECK(grp::is_dihedral(e.brace.multiplicative(), 12));
  CHECK(grp::abelian_invariants(e.brace.additive()) == std::vector<std::uint64_t>{2, 12});
  CHECK(e.label(9) == "(1,(0,1))");
  CHECK(e.metadata.find("625") != std::string::npos);
}

TEST_CASE("enumeration matches the lambda-map oracle up to order 6") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : grp::small_groups(n)) {
      CAPTURE(g.name);
      const auto fast = enumerate_skew_braces(g.group);
      const auto slow = oracle::brace_classes(g.group);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i)
        for (std::size_t j = i + 1; j < fast.size(); ++j) CHECK_FALSE(oracle::brace_isomorphic(fast[i], fast[j]));
      for (const auto& s : slow)
        CHECK(std::count_if(fast.begin(), fast.end(),
                            [&](const skb::SkewBrace& f) { return oracle::brace_isomorphic(f, s); }) == 1);
    }
}

TEST_CASE("class counts match the lambda-propagation oracle through order 8") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& g : grp::small_groups(n)) {
      CAPTURE(g.name);
      CHECK(enumerate_skew_braces(g.group).size() == oracle::brace_class_count_backtrack(g.group));
    }
}

TEST_CASE("class counts") {
  const std::map<std::string, std::size_t> expected{{"Z4", 2}, {"Z2xZ2", 2}, {"Z6", 2},        {"S3", 4},
                                                    {"Z8", 5}, {"Z2xZ4", 14}, {"Z2xZ2xZ2", 8}, {"D8", 12},
                                                    {"Q8", 8}};
  for (std::size_t n : {4, 6, 8})
    for (const auto& g : grp::small_groups(n)) {
      CAPTURE(g.name);
      CHECK(enumerate_skew_braces(g.group).size() == expected.at(g.name));
    }
  for (std::size_t p : {2, 3, 5, 7}) CHECK(enumerate_skew_braces(grp::cyclic_group(p)).size() == 1);
  std::size_t abelian_additive = 0;
  for (const auto& g : grp::small_groups(8))
    if (g.group.is_abelian()) abelian_additive += enumerate_skew_braces(g.group).size();
  CHECK(abelian_additive == 27);
}

TEST_CASE("raw regular subgroups over-count before deduplication") {
  const auto v4 = grp::direct_product(grp::cyclic_group(2), grp::cyclic_group(2));
  CHECK(braces_from_regular_subgroups(v4).size() == 4);
  CHECK(enumerate_skew_braces(v4).size() == 2);
  CHECK_THROWS_AS(enumerate_skew_braces(grp::cyclic_group(9)), Error);
}

TEST_CASE("trivial and almost trivial braces are enumerated") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& g : grp::small_groups(n)) {
      CAPTURE(g.name);
      const auto classes = enumerate_skew_braces(g.group);
      const auto auts = grp::automorphisms(g.group);
      auto present = [&](const skb::SkewBrace& b) {
        const auto c = canonical_mul_table(b, auts);
        return std::any_of(classes.begin(), classes.end(),
                           [&](const skb::SkewBrace& x) { return canonical_mul_table(x, auts) == c; });
      };
      CHECK(present(build_trivial(g.group).brace));
      CHECK(present(build_almost_trivial(g.group).brace));
    }
}

TEST_CASE("Q is the unique Z2xZ4 class with trivial socle") {
  const auto z2z4 = grp::direct_product(grp::cyclic_group(2), grp::cyclic_group(4));
  std::vector<skb::SkewBrace> trivial_socle;
  for (const auto& b : enumerate_skew_braces(z2z4))
    if (skb::socle(b).size() == 1) trivial_socle.push_back(b);
  REQUIRE(trivial_socle.size() == 1);
  CHECK(oracle::brace_isomorphic(trivial_socle[0], build_q8().brace));
}

TEST_CASE("scan") {
  for (const auto& l : scan_centralisers(3)) {
    CHECK(l.centraliser);
    CHECK(l.normal);
  }
  const auto lines = scan_centralisers(24, {build_b24()});
  std::vector<std::string> failing;
  for (const auto& l : lines)
    if (!l.normal) {
      CHECK(l.brace_id == "b24");
      failing.push_back(l.ideal.to_string());
    }
  CHECK(failing == std::vector<std::string>{"0,8,16", "0,2,4,6,8,10,12,14,16,18,20,22"});
  const auto text = render_scan(lines);
  CHECK(text.find("24\tb24\t0,8,16\t0,6,8,14,16,22\tNOT_NORMAL\n") != std::string::npos);
  CHECK(text.find("24\tb24\t0,2,4,6,8,10,12,14,16,18,20,22\t0,6\tNOT_NORMAL\n") != std::string::npos);
  CHECK(render_scan(scan_centralisers(2)) == "1\t1.Z1.1\t0\t0\tNORMAL\n2\t2.Z2.1\t0\t0,1\tNORMAL\n2\t2.Z2.1\t0,1\t0,1\tNORMAL\n");
}

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / ("skewalg-atlas-" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("brace files round-trip") {
  TempDir dir;
  for (const auto& e : {build_q8(), build_acbon12(), build_b24()}) {
    const auto path = dir.path / (e.name + ".skb");
    save_brace(e, path);
    const auto loaded = load_brace(path);
    CHECK(loaded.name == e.name);
    CHECK(loaded.brace == e.brace);
    save_brace(loaded, dir.path / "again.skb");
    CHECK(slurp(path) == slurp(dir.path / "again.skb"));
  }
  const auto g = grp::symmetric_group(3);
  save_group(g, dir.path / "s3.grp");
  CHECK(load_group(dir.path / "s3.grp") == g);
  CHECK(format_group(grp::cyclic_group(2)) == "order 2\ntable\n0 1\n1 0\n");
}

TEST_CASE("parse errors carry line numbers") {
  const std::string good = "# Z2\norder 2\nadd\n0 1\n1 0\n\nmul\n0 1   # comment\n1 0\n";
  CHECK(parse_brace(good).order() == 2);
  try {
    parse_brace("order 2\nadd\n0 1\n1 0\nmul\n0 1\n");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(e.witness() == std::vector<std::size_t>{7});
    CHECK(std::string(e.what()).find("line 7") != std::string::npos);
  }
  try {
    parse_brace("order 2\nadd\n0 1\n1 0\nmul\n0 1\n0 1\n");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLatinSquare);
    CHECK(e.side() == "mul");
  }
  CHECK_THROWS_AS(parse_brace("order 2\nadd\n0 1\n1 0\nmul\n0 1\n1 0\nextra\n"), Error);
  CHECK_THROWS_AS(parse_brace("order x\n"), Error);
  CHECK_THROWS_AS(parse_brace("order 2\nadd\n0 2\n1 0\nmul\n0 1\n1 0\n"), Error);
  CHECK_THROWS_AS(parse_group("order 2\ntable\n0 1 1\n1 0\n"), Error);
}
