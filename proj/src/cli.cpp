#include "skewalg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "skewalg/algebra.hpp"
#include "skewalg/atlas.hpp"
#include "skewalg/huq.hpp"
#include "skewalg/verify.hpp"

namespace skewalg::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kResult = "RESULT\t";

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::IndexOutOfRange:
    case Errc::DuplicateEntry:
    case Errc::DimensionMismatch:
      return kInputError;
    case Errc::BoundExceeded:
      return kBoundExceeded;
    default:
      return kCheckFailed;
  }
}

std::string elements(const std::vector<Element>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string set_or_absent(const std::optional<ElementSet>& s) { return s ? s->to_string() : "ABSENT"; }

int cmd_verify(bool verbose, std::ostream& out, std::ostream& err) {
  bool all = true;
  for (int id = 1; id <= verify::kCriterionCount; ++id) {
    const auto r = verify::run_criterion(id);
    all = all && r.passed();
    out << kResult << "criterion\t" << verify::summary_line(r) << '\n';
    if (verbose || !r.passed()) out << verify::detail_lines(r);
    err << "criterion " << id << ": " << r.seconds << " s\n";
  }
  out << kResult << "verify-paper\t" << (all ? "PASS" : "FAIL") << '\n';
  return all ? kOk : kCheckFailed;
}

int cmd_construct(const std::string& name, const fs::path& path, std::ostream& out) {
  atlas::CatalogEntry entry = [&] {
    auto with_group = [&](const std::string& prefix) { return fs::path(name.substr(prefix.size())); };
    if (name == "q8") return atlas::build_q8();
    if (name == "acbon12") return atlas::build_acbon12();
    if (name == "b24") return atlas::build_b24();
    if (name.starts_with("trivial:")) return atlas::build_trivial(atlas::load_group(with_group("trivial:")));
    if (name.starts_with("almost-trivial:"))
      return atlas::build_almost_trivial(atlas::load_group(with_group("almost-trivial:")));
    throw Error(Errc::ParseError, "unknown construction '" + name + "'");
  }();
  atlas::save_brace(entry, path);
  out << kResult << "construct\t" << entry.name << "\torder\t" << entry.brace.order() << '\n';
  if (!entry.metadata.empty()) out << kResult << "metadata\t" << entry.metadata << '\n';
  if (!entry.labels.empty())
    for (Element x = 0; x < entry.brace.order(); ++x) out << kResult << "label\t" << x << '\t' << entry.label(x) << '\n';
  return kOk;
}

int cmd_centraliser(const fs::path& brace_path, const std::string& ideal_csv, bool expect_fail, std::ostream& out) {
  const auto entry = atlas::load_brace(brace_path);
  const auto& b = entry.brace;
  const ElementSet ideal(b.order(), parse_csv_elements(ideal_csv));
  const auto report = huq::centraliser_report(b, ideal);
  out << kResult << "ideal\t" << report.ideal.to_string() << '\n';
  out << kResult << "c_set\t" << report.c_set.to_string() << "\tsize\t" << report.c_set.size() << '\n';
  out << kResult << "c_set_subbrace\t" << (report.c_set_is_subbrace ? "yes" : "no");
  if (report.c_set_closure_witness)
    out << '\t' << report.c_set_closure_witness->clause << '\t' << elements(report.c_set_closure_witness->elements);
  out << '\n';
  out << kResult << "cooperating_subbraces\t" << report.cooperating_subbraces.size() << '\n';
  out << kResult << "centraliser\t" << set_or_absent(report.centraliser);
  if (report.centraliser) out << "\tsize\t" << report.centraliser->size();
  out << '\n';
  out << kResult << "verdict\t" << (report.normal() ? "NORMAL" : "NOT_NORMAL") << '\n';
  if (!report.centraliser) out << kResult << "note\tno Huq centraliser\n";
  if (report.centraliser_is_ideal)
    for (const auto& w : report.centraliser_is_ideal->witnesses)
      out << kResult << "witness\t" << w.clause << '\t' << elements(w.elements) << '\n';
  return expect_fail && report.normal() ? kCheckFailed : kOk;
}

std::vector<atlas::CatalogEntry> ingest(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(Errc::ParseError, "not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(dir))
    if (f.is_regular_file() && f.path().extension() == ".skb") files.push_back(f.path());
  std::sort(files.begin(), files.end());
  std::vector<atlas::CatalogEntry> out;
  for (const auto& f : files) out.push_back(atlas::load_brace(f));
  return out;
}

int cmd_scan(std::size_t max_order, const std::string& ingest_dir, const fs::path& path, std::ostream& out) {
  const auto extra = ingest_dir.empty() ? std::vector<atlas::CatalogEntry>{} : ingest(ingest_dir);
  const auto lines = atlas::scan_centralisers(max_order, extra);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::ParseError, "cannot write " + path.string());
  file << atlas::render_scan(lines);
  std::size_t absent = 0, not_normal = 0;
  for (const auto& l : lines) {
    if (!l.centraliser) ++absent;
    if (!l.normal) {
      ++not_normal;
      out << kResult << "failing\t" << atlas::render_scan({l});
    }
  }
  out << kResult << "scan\tlines\t" << lines.size() << "\tabsent\t" << absent << "\tnot_normal\t" << not_normal
      << '\n';
  return kOk;
}

int cmd_enumerate(std::size_t order, const std::string& out_dir, std::ostream& out) {
  if (order == 0 || order > atlas::kEnumerationBound)
    throw Error(Errc::BoundExceeded,
                "enumeration covers orders 1.." + std::to_string(atlas::kEnumerationBound), {order});
  if (!out_dir.empty()) fs::create_directories(out_dir);
  std::size_t total = 0;
  for (const auto& g : grp::small_groups(order)) {
    const auto braces = atlas::enumerate_skew_braces(g.group);
    for (std::size_t k = 0; k < braces.size(); ++k) {
      const std::string id = std::to_string(order) + "." + g.name + "." + std::to_string(k + 1);
      const auto& b = braces[k];
      out << kResult << "brace\t" << id << "\tsocle\t" << skb::socle(b).size() << "\ttwo_sided\t"
          << (b.two_sided() ? "yes" : "no") << "\tmul_abelian\t" << (b.multiplicative().is_abelian() ? "yes" : "no")
          << '\n';
      if (!out_dir.empty()) atlas::save_brace({id, b, {}, ""}, fs::path(out_dir) / (id + ".skb"));
    }
    out << kResult << "group\t" << g.name << "\tclasses\t" << braces.size() << '\n';
    total += braces.size();
  }
  out << kResult << "order\t" << order << "\tclasses\t" << total << '\n';
  return kOk;
}

int cmd_solve(const fs::path& path, const std::string& side, bool expect_fail, std::ostream& out) {
  const auto a = nalg::load_algebra(path);
  out << kResult << "pre-lie\t" << (nalg::is_pre_lie(a).holds ? "yes" : "no") << '\n';
  out << kResult << "novikov\t" << (nalg::is_novikov(a).holds ? "yes" : "no") << '\n';
  std::vector<nalg::Side> sides;
  if (side == "left" || side == "both") sides.push_back(nalg::Side::Left);
  if (side == "right" || side == "both") sides.push_back(nalg::Side::Right);
  bool any_infeasible = false;
  for (auto s : sides) {
    const auto sol = nalg::solve_identity(a, s);
    out << kResult << "side\t" << nalg::side_name(s) << '\t';
    if (sol.consistent) {
      out << "CONSISTENT\tnullity\t" << sol.nullity << "\tsample";
      for (const auto& q : *sol.sample) out << '\t' << nalg::to_string(q);
    } else {
      any_infeasible = true;
      const auto& w = *sol.witness;
      out << "INFEASIBLE\twitness\t" << w[0] << ',' << w[1] << ',' << w[2];
      out << "\tcertificates\t" << sol.certificates.size();
    }
    out << '\n';
  }
  if (side == "both" || sides.size() == 2)
    out << kResult << "accessibility\t" << (any_infeasible ? "OBSTRUCTED" : "NO_OBSTRUCTION") << '\n';
  return expect_fail && !any_infeasible ? kCheckFailed : kOk;
}

int cmd_ybe(const fs::path& path, std::ostream& out) {
  const auto entry = atlas::load_brace(path);
  const auto v = skb::check_yb(entry.brace);
  out << kResult << "ybe\t" << (v.holds ? "PASS" : "FAIL") << '\n';
  for (const auto& w : v.witnesses) out << kResult << "witness\t" << w.clause << '\t' << elements(w.elements) << '\n';
  return v.holds ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew braces, Huq centralisers and nonassociative identity solving"};
  app.name("skewalg");
  app.require_subcommand(1);
  std::function<int()> action;

  bool verbose = false;
  auto* verify = app.add_subcommand("verify-paper", "Run the full acceptance suite");
  verify->add_flag("--verbose", verbose, "Print every individual check");
  verify->callback([&] { action = [&] { return cmd_verify(verbose, out, err); }; });

  std::string name, out_path;
  auto* construct = app.add_subcommand("construct", "Build a catalogued brace and save it");
  construct->add_option("--name", name, "q8 | acbon12 | b24 | trivial:<groupfile> | almost-trivial:<groupfile>")
      ->required();
  construct->add_option("--out", out_path, "Output brace file")->required();
  construct->callback([&] { action = [&] { return cmd_construct(name, out_path, out); }; });

  std::string brace_path, ideal_csv;
  bool expect_fail = false;
  auto* centraliser = app.add_subcommand("centraliser", "Report the Huq centraliser of an ideal");
  centraliser->add_option("--brace", brace_path, "Brace file")->required();
  centraliser->add_option("--ideal", ideal_csv, "Comma-separated element indices")->required();
  centraliser->add_flag("--expect-fail", expect_fail, "Exit 3 unless the centraliser is missing or not normal");
  centraliser->callback([&] { action = [&] { return cmd_centraliser(brace_path, ideal_csv, expect_fail, out); }; });

  std::size_t max_order = 0;
  std::string ingest_dir;
  auto* scan = app.add_subcommand("scan-centralisers", "Scan every ideal of every small brace");
  scan->add_option("--max-order", max_order, "Largest order (enumeration stops at 8)")->required();
  scan->add_option("--ingest", ingest_dir, "Directory of extra .skb files");
  scan->add_option("--out", out_path, "Report file")->required();
  scan->callback([&] { action = [&] { return cmd_scan(max_order, ingest_dir, out_path, out); }; });

  std::size_t order = 0;
  std::string out_dir;
  auto* enumerate = app.add_subcommand("enumerate", "List skew brace classes of one order");
  enumerate->add_option("--order", order, "Order, at most 8")->required();
  enumerate->add_option("--out", out_dir, "Directory for brace files");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(order, out_dir, out); }; });

  std::string algebra_path, side = "both";
  auto* solve = app.add_subcommand("solve-identities", "Solve the eight-term identities of an algebra");
  solve->add_option("--algebra", algebra_path, "Algebra file")->required();
  solve->add_option("--side", side, "left | right | both")->check(CLI::IsMember({"left", "right", "both"}));
  solve->add_flag("--expect-fail", expect_fail, "Exit 3 unless some side is infeasible");
  solve->callback([&] { action = [&] { return cmd_solve(algebra_path, side, expect_fail, out); }; });

  auto* ybe = app.add_subcommand("ybe", "Check the Yang-Baxter solution of a brace");
  ybe->add_option("--brace", brace_path, "Brace file")->required();
  ybe->callback([&] { action = [&] { return cmd_ybe(brace_path, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace skewalg::cli
