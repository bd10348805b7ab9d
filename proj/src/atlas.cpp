#include "skewalg/atlas.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <omp.h>

namespace skewalg::atlas {

namespace {

std::string pair_label(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

CatalogEntry build_q8() {
  constexpr std::size_t n = 8;
  auto idx = [](std::size_t a, std::size_t m) { return Element(4 * (a % 2) + m % 4); };
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t a = p / 4, m = p % 4, b = q / 4, k = q % 4;
      add[p * n + q] = idx(a + b, m + k);
      // m = x + 2y and k = u + 2v with x, y, u, v in {0, 1}
      const std::size_t x = m % 2, y = m / 2, u = k % 2, v = k / 2;
      const std::size_t first = a + b + u * (a + x + y + a * x);
      const std::size_t second = x + 2 * y + 2 * x * b + 2 * (a + x * y) * u + u + 2 * v;
      mul[p * n + q] = idx(first, second);
    }
  CatalogEntry e{"q8", skb::make_skew_brace(grp::from_flat(n, add), grp::from_flat(n, mul)), {}, ""};
  for (std::size_t p = 0; p < n; ++p) e.labels.push_back(pair_label(p / 4, p % 4));
  e.metadata = "additive Z2xZ4, multiplicative D8, trivial socle";
  return e;
}

CatalogEntry build_acbon12() {
  constexpr std::size_t n = 12;
  auto idx = [](std::size_t a, std::size_t m) { return Element(4 * (a % 3) + m % 4); };
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t a = p / 4, m = p % 4, x = q / 4, y = q % 4;
      add[p * n + q] = idx(a + x, m + y);
      const std::size_t tri = m == 0 ? 0 : m * (m - 1) / 2;
      const bool flip_first = tri % 2 == 1;
      const bool flip_second = m % 2 == 1;
      mul[p * n + q] = idx(a + (flip_first ? 3 - x : x), m + (flip_second ? 4 - y : y));
    }
  CatalogEntry e{"acbon12", skb::make_skew_brace(grp::from_flat(n, add), grp::from_flat(n, mul)), {}, ""};
  for (std::size_t p = 0; p < n; ++p) e.labels.push_back(pair_label(p / 4, p % 4));
  e.metadata = "additive Z3xZ4, q = 3";
  return e;
}

ElementSet b24_kernel_in_q() {
  // <(0,1)>_o = {(0,0), (0,1), (1,2), (1,1)}
  return ElementSet(8, {0, 1, 6, 5});
}

CatalogEntry build_b24() {
  const CatalogEntry q = build_q8();
  const SkewBrace j = build_trivial(grp::cyclic_group(3)).brace;
  const auto ker = b24_kernel_in_q();
  skb::ActionTables sigma(q.brace.order());
  for (Element u = 0; u < q.brace.order(); ++u)
    sigma[u] = ker.contains(u) ? std::vector<Element>{0, 1, 2} : std::vector<Element>{0, 2, 1};
  CatalogEntry e{"b24", skb::semidirect_product(j, q.brace, sigma), {}, ""};
  for (std::size_t p = 0; p < e.brace.order(); ++p)
    e.labels.push_back("(" + std::to_string(p / 8) + "," + q.labels[p % 8] + ")");
  e.metadata = "Z3 x| Q, YangBaxter type 625";
  return e;
}

CatalogEntry build_trivial(const grp::FiniteGroup& g, std::string name) {
  return {std::move(name), skb::make_skew_brace(g, g), {}, "trivial"};
}

CatalogEntry build_almost_trivial(const grp::FiniteGroup& g, std::string name) {
  return {std::move(name), skb::make_skew_brace(g, grp::opposite(g)), {}, "almost trivial"};
}

std::vector<Element> canonical_mul_table(const SkewBrace& b, const std::vector<grp::GroupMap>& auts) {
  const std::size_t n = b.order();
  std::vector<Element> best, cur(n * n);
  for (const auto& f : auts) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) cur[std::size_t(f(x)) * n + f(y)] = f(b.mul(x, y));
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

std::vector<SkewBrace> braces_from_regular_subgroups(const grp::FiniteGroup& additive, std::size_t bound) {
  const std::size_t n = additive.order();
  if (n > bound)
    throw Error(Errc::BoundExceeded, "skew brace enumeration bound " + std::to_string(bound) + " exceeded", {n});
  const auto hol = grp::holomorph(additive, std::max<std::size_t>(bound, grp::kDefaultAutBound));
  const auto regular = grp::regular_subgroups(hol.perm);
  const Element base = additive.identity();
  std::vector<SkewBrace> out;
  out.reserve(regular.size());
  for (const auto& r : regular) {
    // x o y = r_x(y), where r_x is the unique element sending the identity to x
    std::vector<Element> mul(n * n);
    for (Element h : r) {
      const auto& p = hol.perm.perms[h];
      const Element x = p[base];
      for (Element y = 0; y < n; ++y) mul[std::size_t(x) * n + y] = p[y];
    }
    out.push_back(skb::make_skew_brace(additive, grp::from_flat(n, std::move(mul))));
  }
  return out;
}

std::vector<SkewBrace> enumerate_skew_braces(const grp::FiniteGroup& additive, std::size_t bound) {
  const std::size_t n = additive.order();
  const auto raw = braces_from_regular_subgroups(additive, bound);
  const auto auts = grp::automorphisms(additive, std::max<std::size_t>(bound, grp::kDefaultAutBound));
  std::set<std::vector<Element>> classes;
  for (const auto& b : raw) classes.insert(canonical_mul_table(b, auts));
  std::vector<SkewBrace> out;
  for (const auto& table : classes)
    out.push_back(skb::make_skew_brace(additive, grp::from_flat(n, table)));
  return out;
}

std::vector<EnumeratedBrace> enumerate_all(std::size_t max_order) {
  std::vector<EnumeratedBrace> out;
  for (std::size_t order = 1; order <= max_order; ++order)
    for (const auto& g : grp::small_groups(order)) {
      auto braces = enumerate_skew_braces(g.group);
      for (std::size_t k = 0; k < braces.size(); ++k)
        out.push_back({std::to_string(order) + "." + g.name + "." + std::to_string(k + 1), std::move(braces[k])});
    }
  return out;
}

namespace {

std::vector<ScanLine> scan_one(const std::string& id, const SkewBrace& b) {
  std::vector<ScanLine> lines;
  for (const auto& ideal : skb::enumerate_ideals(b)) {
    const auto report = huq::centraliser_report(b, ideal);
    lines.push_back({b.order(), id, ideal, report.centraliser, report.normal()});
  }
  return lines;
}

}  // namespace

std::vector<ScanLine> scan_centralisers(std::size_t max_order, const std::vector<CatalogEntry>& extra) {
  const auto enumerated = enumerate_all(std::min(max_order, kEnumerationBound));
  std::vector<std::pair<std::string, const SkewBrace*>> jobs;
  for (const auto& e : enumerated) jobs.emplace_back(e.id, &e.brace);
  for (const auto& e : extra)
    if (e.brace.order() <= max_order) jobs.emplace_back(e.name, &e.brace);

  std::vector<std::vector<ScanLine>> partial(jobs.size());
  const auto count = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i)
    partial[std::size_t(i)] = scan_one(jobs[std::size_t(i)].first, *jobs[std::size_t(i)].second);

  std::vector<ScanLine> out;
  for (auto& p : partial)
    for (auto& l : p) out.push_back(std::move(l));
  return out;
}

std::string render_scan(const std::vector<ScanLine>& lines) {
  std::ostringstream os;
  for (const auto& l : lines)
    os << l.order << '\t' << l.brace_id << '\t' << l.ideal.to_string() << '\t'
       << (l.centraliser ? l.centraliser->to_string() : std::string("ABSENT")) << '\t'
       << (l.normal ? "NORMAL" : "NOT_NORMAL") << '\n';
  return os.str();
}

}  // namespace skewalg::atlas
