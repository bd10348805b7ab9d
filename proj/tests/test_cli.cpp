#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "skewalg/algebra.hpp"
#include "skewalg/atlas.hpp"
#include "skewalg/cli.hpp"

using namespace skewalg;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("skewalg-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"construct", "--name", "q8"}).code == 2);
  CHECK(run({"solve-identities", "--algebra", "x", "--side", "up"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("construct and centraliser on the order-24 brace") {
  TempDir dir;
  const auto b24 = dir / "b24.skb";
  const auto c = run({"construct", "--name", "b24", "--out", b24});
  REQUIRE(c.code == 0);
  CHECK(has(c.out, "RESULT\tconstruct\tb24\torder\t24\n"));
  CHECK(has(c.out, "RESULT\tmetadata\t"));
  const auto r = run({"centraliser", "--brace", b24, "--ideal", "0,8,16"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "RESULT\tcentraliser\t0,6,8,14,16,22\tsize\t6\n"));
  CHECK(has(r.out, "RESULT\tverdict\tNOT_NORMAL\n"));
  CHECK(has(r.out, "RESULT\twitness\tlambda\t1,6,4\n"));
  CHECK(has(r.out, "RESULT\tc_set_subbrace\tno\tadd\t1,1,2\n"));
  CHECK(run({"centraliser", "--brace", b24, "--ideal", "0,8,16", "--expect-fail"}).code == 0);
  CHECK(run({"centraliser", "--brace", b24, "--ideal", "0,8", "--expect-fail"}).code == 3);
  CHECK(run({"centraliser", "--brace", b24, "--ideal", "0,x"}).code == 2);
  CHECK(run({"ybe", "--brace", b24}).out == "RESULT\tybe\tPASS\n");
}

TEST_CASE("centraliser on a normal example with --expect-fail exits 3") {
  TempDir dir;
  const auto path = dir / "a12.skb";
  REQUIRE(run({"construct", "--name", "acbon12", "--out", path}).code == 0);
  const auto r = run({"centraliser", "--brace", path, "--ideal", "0,4,8"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "RESULT\tverdict\tNORMAL\n"));
  CHECK(run({"centraliser", "--brace", path, "--ideal", "0,4,8", "--expect-fail"}).code == 3);
}

TEST_CASE("construct from group files") {
  TempDir dir;
  atlas::save_group(grp::symmetric_group(3), dir / "s3.grp");
  CHECK(run({"construct", "--name", "almost-trivial:" + (dir / "s3.grp"), "--out", dir / "at.skb"}).code == 0);
  CHECK(atlas::load_brace(dir / "at.skb").brace.two_sided());
  CHECK(run({"construct", "--name", "trivial:" + (dir / "s3.grp"), "--out", dir / "t.skb"}).code == 0);
  CHECK(run({"construct", "--name", "trivial:" + (dir / "missing.grp"), "--out", dir / "t.skb"}).code == 2);
  CHECK(run({"construct", "--name", "nonsense", "--out", dir / "t.skb"}).code == 2);
  std::ofstream(dir / "bad.skb") << "order 2\nadd\n0 1\n1 0\nmul\n0 1\n0 1\n";
  CHECK(run({"ybe", "--brace", dir / "bad.skb"}).code == 3);
  std::ofstream(dir / "short.skb") << "order 2\nadd\n0 1\n";
  const auto r = run({"ybe", "--brace", dir / "short.skb"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "line 4"));
}

TEST_CASE("enumerate") {
  TempDir dir;
  const auto r = run({"enumerate", "--order", "4", "--out", dir / "e"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "RESULT\torder\t4\tclasses\t4\n"));
  CHECK(fs::exists(dir.path / "e" / "4.Z2xZ2.2.skb"));
  CHECK(run({"enumerate", "--order", "9"}).code == 4);
  CHECK(run({"enumerate", "--order", "8"}).out == run({"enumerate", "--order", "8"}).out);
}

TEST_CASE("scan-centralisers with ingestion") {
  TempDir dir;
  fs::create_directories(dir.path / "in");
  REQUIRE(run({"construct", "--name", "b24", "--out", dir / "in/b24.skb"}).code == 0);
  const auto r = run({"scan-centralisers", "--max-order", "24", "--ingest", dir / "in", "--out", dir / "scan.tsv"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "RESULT\tfailing\t24\tb24\t0,8,16\t0,6,8,14,16,22\tNOT_NORMAL\n"));
  CHECK(has(r.out, "\tnot_normal\t2\n"));
  const auto first = slurp(dir / "scan.tsv");
  run({"scan-centralisers", "--max-order", "24", "--ingest", dir / "in", "--out", dir / "scan2.tsv"});
  CHECK(first == slurp(dir / "scan2.tsv"));
  const auto small = run({"scan-centralisers", "--max-order", "8", "--out", dir / "s8.tsv"});
  CHECK(has(small.out, "\tabsent\t0\tnot_normal\t0\n"));
  CHECK(run({"scan-centralisers", "--max-order", "8", "--ingest", dir / "nowhere", "--out", dir / "x"}).code == 2);
}

TEST_CASE("solve-identities") {
  TempDir dir;
  nalg::save_algebra(nalg::build_i4(), dir / "i4.alg");
  const auto right = run({"solve-identities", "--algebra", dir / "i4.alg", "--side", "right"});
  CHECK(right.code == 0);
  CHECK(has(right.out, "RESULT\tside\tright\tINFEASIBLE\twitness\t1,2,2\t"));
  const auto both = run({"solve-identities", "--algebra", dir / "i4.alg"});
  CHECK(has(both.out, "RESULT\tside\tleft\tCONSISTENT\tnullity\t1\tsample\t1/1\t-1/1\t0/1\t0/1\t0/1\t0/1\t1/1\t0/1\n"));
  CHECK(has(both.out, "RESULT\taccessibility\tOBSTRUCTED\n"));
  CHECK(has(both.out, "RESULT\tpre-lie\tyes\n"));
  CHECK(has(both.out, "RESULT\tnovikov\tno\n"));
  CHECK(run({"solve-identities", "--algebra", dir / "i4.alg", "--side", "left", "--expect-fail"}).code == 3);
  CHECK(run({"solve-identities", "--algebra", dir / "i4.alg", "--side", "right", "--expect-fail"}).code == 0);
  std::ofstream(dir / "bad.alg") << "dim 2\nproduct\n0 0 7 1\n";
  CHECK(run({"solve-identities", "--algebra", dir / "bad.alg"}).code == 2);
}
