#include "skewalg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <omp.h>

#include "skewalg/kernels.hpp"

namespace skewalg::grp {

namespace detail {

FiniteGroup build_group(std::size_t n, std::vector<Element> flat, bool check_associativity) {
  if (n == 0 || flat.size() != n * n) throw Error(Errc::NotSquare, "table is not a nonempty square");
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (flat[i] >= n)
      throw Error(Errc::IndexOutOfRange, "entry at row " + std::to_string(i / n) + ", column " +
                                             std::to_string(i % n) + " is out of range",
                  {i / n, i % n});

  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[flat[i * n + j]])
        throw Error(Errc::NotLatinSquare, "row " + std::to_string(i) + " repeats an entry", {i});
      seen[flat[i * n + j]] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[flat[i * n + j]])
        throw Error(Errc::NotLatinSquare, "column " + std::to_string(j) + " repeats an entry", {j});
      seen[flat[i * n + j]] = 1;
    }
  }

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = flat[e * n + x] == x && flat[x * n + e] == x;
    if (ok) identity = Element(e);
  }
  if (!identity) throw Error(Errc::NoIdentity, "no two-sided identity");

  std::vector<Element> inverses(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j)
      if (flat[i * n + j] == *identity && flat[j * n + i] == *identity) {
        inverses[i] = Element(j);
        found = true;
      }
    if (!found)
      throw Error(Errc::NoInverse, "element " + std::to_string(i) + " has no two-sided inverse", {i});
  }

  if (check_associativity) {
    const auto* t = flat.data();
    auto bad = kernels::first_failing_triple(n, [t, n](Element a, Element b, Element c) {
      return t[std::size_t(t[a * n + b]) * n + c] == t[std::size_t(a) * n + t[std::size_t(b) * n + c]];
    });
    if (bad)
      throw Error(Errc::NotAssociative,
                  "(" + std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) + "," +
                      std::to_string((*bad)[2]) + ") does not associate",
                  {(*bad)[0], (*bad)[1], (*bad)[2]});
  }

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.identity_ = *identity;
  g.inverses_ = std::move(inverses);
  return g;
}

}  // namespace detail

FiniteGroup make_group(const Table& table) {
  const std::size_t n = table.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error(Errc::NotSquare, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return detail::build_group(n, std::move(flat), true);
}

FiniteGroup from_flat(std::size_t n, std::vector<Element> flat) {
  return detail::build_group(n, std::move(flat), true);
}

Table FiniteGroup::table() const {
  Table t(n_);
  for (std::size_t i = 0; i < n_; ++i) t[i].assign(table_.begin() + i * n_, table_.begin() + (i + 1) * n_);
  return t;
}

Element FiniteGroup::power(Element a, std::uint64_t k) const {
  Element r = identity_;
  for (std::uint64_t i = 0; i < k; ++i) r = op(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = op(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (table_[a * n_ + b] != table_[b * n_ + a]) return false;
  return true;
}

Verdict check_group_axioms(const FiniteGroup& g) {
  Verdict v{"group axioms"};
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    if (g.op(g.identity(), a) != a || g.op(a, g.identity()) != a) v.fail("identity", {a});
    if (g.op(a, g.inverse(a)) != g.identity() || g.op(g.inverse(a), a) != g.identity())
      v.fail("inverse", {a});
  }
  auto bad = kernels::first_failing_triple(n, [&g](Element a, Element b, Element c) {
    return g.op(g.op(a, b), c) == g.op(a, g.op(b, c));
  });
  if (bad) v.fail("associativity", {(*bad)[0], (*bad)[1], (*bad)[2]});
  for (Element a = 0; a < n; ++a) {
    std::vector<char> row(n), col(n);
    for (Element b = 0; b < n; ++b) {
      row[g.op(a, b)] = 1;
      col[g.op(b, a)] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != std::ptrdiff_t(n) ||
        std::count(col.begin(), col.end(), 1) != std::ptrdiff_t(n))
      v.fail("latin", {a});
  }
  return v;
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupMap& f) {
  if (f.images.size() != src.order()) return false;
  for (Element a = 0; a < src.order(); ++a)
    for (Element b = 0; b < src.order(); ++b)
      if (f(src.op(a, b)) != dst.op(f(a), f(b))) return false;
  return true;
}

bool is_automorphism(const FiniteGroup& g, const GroupMap& f) {
  if (!is_homomorphism(g, g, f)) return false;
  std::vector<Element> sorted = f.images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) return false;
  return true;
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = Element((i + j) % n);
  return from_flat(n, std::move(flat));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order(), k = h.order(), n = m * k;
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[a * n + b] = Element(g.op(Element(a / k), Element(b / k)) * k + h.op(Element(a % k), Element(b % k)));
  return from_flat(n, std::move(flat));
}

FiniteGroup symmetric_group(std::size_t k) {
  std::vector<Permutation> perms;
  Permutation p(k);
  std::iota(p.begin(), p.end(), Element(0));
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return make_permutation_group(std::move(perms)).group;
}

FiniteGroup dihedral_group(std::size_t m) {
  const std::size_t n = 2 * m;
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t i = a % m, e = a / m, j = b % m, f = b / m;
      const std::size_t rot = e ? (i + m - j) % m : (i + j) % m;
      flat[a * n + b] = Element(rot + m * ((e + f) % 2));
    }
  return from_flat(n, std::move(flat));
}

FiniteGroup quaternion_group() {
  // index = 4*sign + unit, units 1, i, j, k
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Element> flat(64);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t u = a % 4, v = b % 4;
      const std::size_t sign = (a / 4 + b / 4 + std::size_t(neg[u][v])) % 2;
      flat[a * 8 + b] = Element(4 * sign + std::size_t(unit[u][v]));
    }
  return from_flat(8, std::move(flat));
}

FiniteGroup opposite(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> flat(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) flat[std::size_t(a) * n + b] = g.op(b, a);
  return from_flat(n, std::move(flat));
}

std::vector<NamedGroup> small_groups(std::size_t order) {
  const auto z = cyclic_group;
  switch (order) {
    case 1: return {{"Z1", z(1)}};
    case 2: return {{"Z2", z(2)}};
    case 3: return {{"Z3", z(3)}};
    case 4: return {{"Z4", z(4)}, {"Z2xZ2", direct_product(z(2), z(2))}};
    case 5: return {{"Z5", z(5)}};
    case 6: return {{"Z6", z(6)}, {"S3", symmetric_group(3)}};
    case 7: return {{"Z7", z(7)}};
    case 8:
      return {{"Z8", z(8)},
              {"Z2xZ4", direct_product(z(2), z(4))},
              {"Z2xZ2xZ2", direct_product(z(2), direct_product(z(2), z(2)))},
              {"D8", dihedral_group(4)},
              {"Q8", quaternion_group()}};
    default:
      throw Error(Errc::BoundExceeded, "small group catalogue covers orders 1..8", {order});
  }
}

namespace {

// Closure of `start` under right multiplication by `gens`; in a finite group
// this is the subgroup generated by start and gens.
std::vector<char> close_under(const FiniteGroup& g, std::vector<char> member,
                              std::span<const Element> gens) {
  std::vector<Element> queue;
  for (Element x = 0; x < g.order(); ++x)
    if (member[x]) queue.push_back(x);
  if (!member[g.identity()]) {
    member[g.identity()] = 1;
    queue.push_back(g.identity());
  }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Element s : gens) {
      const Element y = g.op(queue[head], s);
      if (!member[y]) {
        member[y] = 1;
        queue.push_back(y);
      }
    }
  return member;
}

}  // namespace

ElementSet generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> member(g.order(), 0);
  member[g.identity()] = 1;
  return ElementSet::from_mask(close_under(g, std::move(member), gens));
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(g.identity())) return false;
  const auto m = s.mask();
  for (Element a : s)
    for (Element b : s)
      if (!m[g.op(a, g.inverse(b))]) return false;
  return true;
}

std::vector<ElementSet> subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::set<std::vector<Element>> seen;
  std::vector<ElementSet> found;
  auto add = [&](ElementSet s) {
    if (seen.insert(s.items()).second) found.push_back(std::move(s));
  };
  for (Element x = 0; x < n; ++x) {
    const Element gen[1] = {x};
    add(generated_subgroup(g, gen));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet base = found[i];
    const auto mask = base.mask();
    for (Element x = 0; x < n; ++x) {
      if (mask[x]) continue;
      std::vector<Element> gens = base.items();
      gens.push_back(x);
      add(ElementSet::from_mask(close_under(g, mask, gens)));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

Verdict is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) throw Error(Errc::NotASubgroup, "{" + s.to_string() + "} is not a subgroup");
  Verdict v{"normal subgroup"};
  const auto m = s.mask();
  for (Element x = 0; x < g.order(); ++x)
    for (Element y : s)
      if (!m[g.op(g.op(x, y), g.inverse(x))]) {
        v.fail("conjugate", {x, y});
        return v;
      }
  return v;
}

std::optional<std::vector<std::uint64_t>> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) return std::nullopt;
  std::uint64_t n = g.order();
  // For each prime p | n, #{x : p^k x = 0} = p^(sum_i min(k, e_i)) determines
  // the exponents e_i of the p-primary part.
  std::vector<std::vector<std::uint64_t>> primary;  // prime powers, descending
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    unsigned a = 0;
    while (rest % p == 0) {
      rest /= p;
      ++a;
    }
    std::vector<unsigned> log_count(a + 1, 0);
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= a; ++k) {
      pk *= p;
      std::uint64_t cnt = 0;
      for (Element x = 0; x < n; ++x)
        if (g.power(x, pk) == g.identity()) ++cnt;
      unsigned l = 0;
      while (cnt > 1) {
        cnt /= p;
        ++l;
      }
      log_count[k] = l;
    }
    // number of cyclic factors of exponent >= k is log_count[k] - log_count[k-1]
    std::vector<std::uint64_t> powers;
    for (unsigned k = a; k >= 1; --k) {
      const unsigned at_least_k = log_count[k] - log_count[k - 1];
      const unsigned at_least_k1 = k < a ? log_count[k + 1] - log_count[k] : 0;
      std::uint64_t q = 1;
      for (unsigned t = 0; t < k; ++t) q *= p;
      for (unsigned c = at_least_k1; c < at_least_k; ++c) powers.push_back(q);
    }
    primary.push_back(std::move(powers));
  }
  std::size_t len = 0;
  for (const auto& pw : primary) len = std::max(len, pw.size());
  std::vector<std::uint64_t> factors(len, 1);
  // largest prime powers combine into the last invariant factor
  for (const auto& pw : primary)
    for (std::size_t i = 0; i < pw.size(); ++i) factors[len - 1 - i] *= pw[i];
  return factors;
}

bool is_dihedral(const FiniteGroup& g, std::size_t m) {
  if (m < 2 || g.order() != 2 * m) return false;
  for (Element r = 0; r < g.order(); ++r) {
    if (g.element_order(r) != m) continue;
    for (Element s = 0; s < g.order(); ++s) {
      if (g.element_order(s) != 2) continue;
      if (g.op(g.op(s, r), s) != g.inverse(r)) continue;
      const Element gens[2] = {r, s};
      if (generated_subgroup(g, gens).size() == g.order()) return true;
    }
  }
  return false;
}

namespace {

// Extends the partial map on <gens[0..k)> along Cayley edges. Returns false on
// a conflict or a non-injective image.
bool extend_map(const FiniteGroup& g, std::span<const Element> gens, std::span<const Element> imgs,
                std::vector<std::int64_t>& phi) {
  std::fill(phi.begin(), phi.end(), -1);
  std::vector<char> used(g.order(), 0);
  phi[g.identity()] = g.identity();
  used[g.identity()] = 1;
  std::vector<Element> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = g.op(x, gens[i]);
      const Element fy = g.op(Element(phi[x]), imgs[i]);
      if (phi[y] < 0) {
        if (used[fy]) return false;
        phi[y] = fy;
        used[fy] = 1;
        queue.push_back(y);
      } else if (Element(phi[y]) != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<GroupMap> automorphisms(const FiniteGroup& g, std::size_t bound) {
  const std::size_t n = g.order();
  if (n > bound)
    throw Error(Errc::BoundExceeded, "automorphism search bound " + std::to_string(bound) +
                                         " exceeded by order " + std::to_string(n),
                {n});
  std::vector<Element> gens;
  std::vector<char> span_mask(n, 0);
  span_mask[g.identity()] = 1;
  for (Element x = 0; x < n; ++x)
    if (!span_mask[x]) {
      gens.push_back(x);
      span_mask = close_under(g, std::move(span_mask), gens);
    }

  std::vector<std::size_t> orders(n);
  for (Element x = 0; x < n; ++x) orders[x] = g.element_order(x);

  std::vector<GroupMap> result;
  std::vector<Element> imgs;
  std::vector<std::int64_t> phi(n);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      if (!extend_map(g, gens, imgs, phi)) return;
      GroupMap f;
      f.images.reserve(n);
      for (auto v : phi) {
        if (v < 0) return;
        f.images.push_back(Element(v));
      }
      result.push_back(std::move(f));
      return;
    }
    for (Element y = 0; y < n; ++y) {
      if (orders[y] != orders[gens[k]]) continue;
      imgs.push_back(y);
      if (extend_map(g, std::span(gens).first(k + 1), imgs, phi)) self(self, k + 1);
      imgs.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(result.begin(), result.end());
  return result;
}

PermutationGroup make_permutation_group(std::vector<Permutation> perms) {
  const std::size_t n = perms.size();
  const std::size_t degree = n ? perms.front().size() : 0;
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(perms[i], Element(i));
  std::vector<Element> flat(n * n);
  Permutation comp(degree);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < degree; ++x) comp[x] = perms[a][perms[b][x]];
      auto it = index.find(comp);
      if (it == index.end())
        throw Error(Errc::NotASubgroup, "permutations are not closed under composition", {a, b});
      flat[a * n + b] = it->second;
    }
  PermutationGroup pg;
  pg.degree = degree;
  pg.group = detail::build_group(n, std::move(flat), false);
  pg.perms = std::move(perms);
  return pg;
}

Holomorph holomorph(const FiniteGroup& g, std::size_t bound) {
  const std::size_t n = g.order();
  Holomorph hol;
  hol.auts = automorphisms(g, bound);
  std::vector<Permutation> perms;
  perms.reserve(n * hol.auts.size());
  for (std::size_t k = 0; k < hol.auts.size(); ++k)
    for (Element t = 0; t < n; ++t) {
      Permutation p(n);
      for (Element x = 0; x < n; ++x) p[x] = g.op(t, hol.auts[k](x));
      perms.push_back(std::move(p));
      hol.labels.push_back({t, k});
    }
  hol.perm = make_permutation_group(std::move(perms));
  return hol;
}

namespace {

// Backtracking for regular subgroups. A regular subgroup contains exactly one
// element sending point 0 to each point, so a branch is identified by the
// element chosen for the smallest point not yet reached; every regular
// subgroup is reached along exactly one path.
class RegularSearch {
 public:
  explicit RegularSearch(const PermutationGroup& h) : h_(h), by_image_(h.degree) {
    for (Element e = 0; e < h.group.order(); ++e) by_image_[h.perms[e][0]].push_back(e);
  }

  // Subgroup generated by gens, or empty if it contains a nontrivial element
  // fixing point 0.
  std::vector<Element> close(std::span<const Element> gens) const {
    const FiniteGroup& g = h_.group;
    std::vector<char> member(g.order(), 0);
    std::vector<char> hit(h_.degree, 0);
    std::vector<Element> items{g.identity()};
    member[g.identity()] = 1;
    hit[0] = 1;
    for (std::size_t head = 0; head < items.size(); ++head)
      for (Element s : gens) {
        const Element y = g.op(items[head], s);
        if (member[y]) continue;
        const Element pt = h_.perms[y][0];
        if (hit[pt]) return {};
        member[y] = 1;
        hit[pt] = 1;
        items.push_back(y);
      }
    return items;
  }

  std::vector<Element> candidates(const std::vector<Element>& current) const {
    std::vector<char> hit(h_.degree, 0);
    for (Element e : current) hit[h_.perms[e][0]] = 1;
    for (std::size_t pt = 0; pt < h_.degree; ++pt)
      if (!hit[pt]) return by_image_[pt];
    return {};
  }

  void search(std::vector<Element>& gens, const std::vector<Element>& current,
              std::vector<ElementSet>& out) const {
    if (current.size() == h_.degree) {
      out.emplace_back(h_.group.order(), current);
      return;
    }
    for (Element c : candidates(current)) {
      gens.push_back(c);
      auto next = close(gens);
      if (!next.empty()) search(gens, next, out);
      gens.pop_back();
    }
  }

  std::vector<Element> root() const { return {h_.group.identity()}; }

 private:
  const PermutationGroup& h_;
  std::vector<std::vector<Element>> by_image_;
};

}  // namespace

std::vector<ElementSet> regular_subgroups_serial(const PermutationGroup& h) {
  std::vector<ElementSet> out;
  if (h.degree == 0) return out;
  RegularSearch rs(h);
  std::vector<Element> gens;
  rs.search(gens, rs.root(), out);
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return a.items() < b.items(); });
  return out;
}

std::vector<ElementSet> regular_subgroups(const PermutationGroup& h) {
  std::vector<ElementSet> out;
  if (h.degree == 0) return out;
  RegularSearch rs(h);
  const auto root = rs.root();
  if (root.size() == h.degree) return regular_subgroups_serial(h);
  const auto first = rs.candidates(root);
  std::vector<std::vector<ElementSet>> partial(first.size());
  const std::int64_t count = static_cast<std::int64_t>(first.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    std::vector<Element> gens{first[std::size_t(i)]};
    auto next = rs.close(gens);
    if (!next.empty()) rs.search(gens, next, partial[std::size_t(i)]);
  }
  for (auto& p : partial)
    for (auto& s : p) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return a.items() < b.items(); });
  return out;
}

}  // namespace skewalg::grp
