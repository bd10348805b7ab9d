#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "skewalg/brace.hpp"
#include "skewalg/huq.hpp"

namespace skewalg::atlas {

using skb::SkewBrace;

inline constexpr std::size_t kEnumerationBound = 8;

struct CatalogEntry {
  std::string name;
  SkewBrace brace;
  /// Human-readable label per element, e.g. "(1,2)".
  std::vector<std::string> labels;
  std::string metadata;

  std::string label(Element x) const { return x < labels.size() ? labels[x] : std::to_string(x); }
};

/// Order-8 brace on Z2 x Z4 with trivial socle; (a, m) has index 4a + m.
CatalogEntry build_q8();
/// Order-12 brace on Z3 x Z4 with (n,m) o (x,y) = (n + (-1)^(m(m-1)/2) x, m + (-1)^m y);
/// (n, m) has index 4n + m.
CatalogEntry build_acbon12();
/// Z3 ⋊ Q8-brace of order 24; (j, q) has index 8j + q.
CatalogEntry build_b24();
CatalogEntry build_trivial(const grp::FiniteGroup& g, std::string name = "trivial");
CatalogEntry build_almost_trivial(const grp::FiniteGroup& g, std::string name = "almost-trivial");

/// Elements of ker sigma in Q used by build_b24: <(0,1)>_o.
ElementSet b24_kernel_in_q();

/// Smallest multiplication table in the orbit of `b` under Aut(B,+); two braces
/// on the same additive table are isomorphic iff their canonical tables agree.
std::vector<Element> canonical_mul_table(const SkewBrace& b, const std::vector<grp::GroupMap>& auts);

/// One brace per isomorphism class with the given additive group, sorted by
/// canonical multiplication table. Each is returned in canonical form.
std::vector<SkewBrace> enumerate_skew_braces(const grp::FiniteGroup& additive,
                                             std::size_t bound = kEnumerationBound);

/// Braces read off every regular subgroup of Hol(G), before deduplication.
std::vector<SkewBrace> braces_from_regular_subgroups(const grp::FiniteGroup& additive,
                                                     std::size_t bound = kEnumerationBound);

struct EnumeratedBrace {
  std::string id;  // "<order>.<group>.<class>"
  SkewBrace brace;
};

/// Every skew brace of each order in [1, max_order], over small_groups(order).
std::vector<EnumeratedBrace> enumerate_all(std::size_t max_order);

struct ScanLine {
  std::size_t order = 0;
  std::string brace_id;
  ElementSet ideal;
  std::optional<ElementSet> centraliser;
  bool normal = false;
};

/// One line per (brace, ideal). Enumerated braces come first, then `extra`
/// (e.g. ingested files) in the given order.
std::vector<ScanLine> scan_centralisers(std::size_t max_order, const std::vector<CatalogEntry>& extra = {});

/// Tab-separated: order, brace-id, ideal, centraliser|ABSENT, NORMAL|NOT_NORMAL.
std::string render_scan(const std::vector<ScanLine>& lines);

// Text formats. Brace files: "order n", "add" + n rows, "mul" + n rows.
// Group files: "order n", "table" + n rows. '#' comments and blank lines are
// ignored on input.
std::string format_brace(const SkewBrace& b);
std::string format_group(const grp::FiniteGroup& g);
SkewBrace parse_brace(const std::string& text);
grp::FiniteGroup parse_group(const std::string& text);

void save_brace(const CatalogEntry& entry, const std::filesystem::path& path);
CatalogEntry load_brace(const std::filesystem::path& path);
void save_group(const grp::FiniteGroup& g, const std::filesystem::path& path);
grp::FiniteGroup load_group(const std::filesystem::path& path);

}  // namespace skewalg::atlas
