#include "skewalg/brace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "skewalg/kernels.hpp"

namespace skewalg::skb {

namespace {

std::vector<Element> triple_witness(const kernels::Triple& t) { return {t[0], t[1], t[2]}; }

bool brace_identity(const SkewBrace& b, Element x, Element y, Element z) {
  return b.mul(x, b.add(y, z)) == b.add(b.sub(b.mul(x, y), x), b.mul(x, z));
}

bool two_sided_identity(const SkewBrace& b, Element x, Element y, Element z) {
  return b.mul(b.add(x, y), z) == b.add(b.sub(b.mul(x, z), z), b.mul(y, z));
}

void internal_fault(const std::string& what) { throw std::logic_error("internal fault: " + what); }

}  // namespace

SkewBrace make_skew_brace(const Table& add_table, const Table& mul_table) {
  FiniteGroup add, mul;
  try {
    add = grp::make_group(add_table);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("additive table: ") + e.what(), e.witness(), "add");
  }
  try {
    mul = grp::make_group(mul_table);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("multiplicative table: ") + e.what(), e.witness(), "mul");
  }
  return make_skew_brace(std::move(add), std::move(mul));
}

SkewBrace make_skew_brace(FiniteGroup add, FiniteGroup mul) {
  if (add.order() != mul.order())
    throw Error(Errc::NotSquare, "additive and multiplicative tables differ in size", {}, "mul");
  if (add.identity() != mul.identity())
    throw Error(Errc::IdentityMismatch, "identities differ", {add.identity(), mul.identity()});
  SkewBrace b;
  b.add_ = std::move(add);
  b.mul_ = std::move(mul);
  auto bad = kernels::first_failing_triple(
      b.order(), [&b](Element x, Element y, Element z) { return brace_identity(b, x, y, z); });
  if (bad)
    throw Error(Errc::BraceIdentityFails,
                "a o (b + c) != a o b - a + a o c at (" + std::to_string((*bad)[0]) + "," +
                    std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")",
                {(*bad)[0], (*bad)[1], (*bad)[2]});
  b.two_sided_ = !kernels::first_failing_triple(
      b.order(), [&b](Element x, Element y, Element z) { return two_sided_identity(b, x, y, z); });
  return b;
}

std::vector<Element> BraceMap::inverse_row(Element a) const {
  std::vector<Element> inv(n_);
  for (Element x = 0; x < n_; ++x) inv[(*this)(a, x)] = x;
  return inv;
}

BraceMap lambda_map(const SkewBrace& b) {
  const std::size_t n = b.order();
  std::vector<Element> flat(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element x = 0; x < n; ++x) flat[std::size_t(a) * n + x] = b.lambda(a, x);
  BraceMap lam(n, std::move(flat));
  for (Element a = 0; a < n; ++a) {
    grp::GroupMap row{std::vector<Element>(lam.row(a).begin(), lam.row(a).end())};
    if (!grp::is_automorphism(b.additive(), row)) internal_fault("lambda_a is not additive");
  }
  auto bad = kernels::first_failing_triple(n, [&](Element x, Element y, Element z) {
    return lam(b.mul(x, y), z) == lam(x, lam(y, z));
  });
  if (bad) internal_fault("lambda is not a homomorphism");
  return lam;
}

Verdict is_two_sided(const SkewBrace& b) {
  Verdict v{"two-sided"};
  auto bad = kernels::first_failing_triple(
      b.order(), [&b](Element x, Element y, Element z) { return two_sided_identity(b, x, y, z); });
  if (bad) v.fail("triple", triple_witness(*bad));
  return v;
}

BraceMap sigma_map(const SkewBrace& b) {
  if (!b.two_sided()) {
    auto v = is_two_sided(b);
    std::vector<std::size_t> w(v.witnesses[0].elements.begin(), v.witnesses[0].elements.end());
    throw Error(Errc::NotTwoSided, "sigma is only additive on two-sided braces", w);
  }
  const std::size_t n = b.order();
  std::vector<Element> flat(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element x = 0; x < n; ++x) flat[std::size_t(a) * n + x] = b.sub(b.mul(x, a), a);
  BraceMap sig(n, std::move(flat));
  for (Element a = 0; a < n; ++a) {
    grp::GroupMap row{std::vector<Element>(sig.row(a).begin(), sig.row(a).end())};
    if (!grp::is_automorphism(b.additive(), row)) internal_fault("sigma_a is not additive");
  }
  // sigma_{x o y} = sigma_y after sigma_x
  auto bad = kernels::first_failing_triple(n, [&](Element x, Element y, Element z) {
    return sig(b.mul(x, y), z) == sig(y, sig(x, z));
  });
  if (bad) internal_fault("sigma is not an anti-homomorphism");
  return sig;
}

std::vector<Verdict> check_brace_axioms(const SkewBrace& b) {
  std::vector<Verdict> out;
  const std::size_t n = b.order();
  auto scan = [&](const char* name, auto&& pred) {
    Verdict v{name};
    if (auto bad = kernels::first_failing_triple(n, pred)) v.fail("triple", triple_witness(*bad));
    out.push_back(std::move(v));
  };
  auto scan2 = [&](const char* name, auto&& pred) {
    Verdict v{name};
    if (auto bad = kernels::first_failing_pair(n, pred)) v.fail("pair", {(*bad)[0], (*bad)[1]});
    out.push_back(std::move(v));
  };

  out.push_back(grp::check_group_axioms(b.additive()));
  out.back().property = "additive group";
  out.push_back(grp::check_group_axioms(b.multiplicative()));
  out.back().property = "multiplicative group";
  {
    Verdict v{"shared identity"};
    if (b.additive().identity() != b.multiplicative().identity()) v.fail("identity", {});
    out.push_back(v);
  }
  scan("brace identity", [&](Element x, Element y, Element z) { return brace_identity(b, x, y, z); });
  // a o (b + c) = a o b + a o (a^- + c)
  scan("brace identity (second form)", [&](Element x, Element y, Element z) {
    return b.mul(x, b.add(y, z)) == b.add(b.mul(x, y), b.mul(x, b.add(b.minv(x), z)));
  });
  scan2("malcev term", [&](Element x, Element y) { return b.add(x, b.add(b.neg(x), y)) == y; });
  scan("lambda additive", [&](Element a, Element x, Element y) {
    return b.lambda(a, b.add(x, y)) == b.add(b.lambda(a, x), b.lambda(a, y));
  });
  scan("lambda homomorphism", [&](Element x, Element y, Element z) {
    return b.lambda(b.mul(x, y), z) == b.lambda(x, b.lambda(y, z));
  });
  {
    Verdict v{"a + b = a o lambda_a^-1(b)"};
    for (Element a = 0; a < n && v.holds; ++a) {
      std::vector<Element> inv(n);
      for (Element x = 0; x < n; ++x) inv[b.lambda(a, x)] = x;
      for (Element x = 0; x < n; ++x)
        if (b.add(a, x) != b.mul(a, inv[x])) {
          v.fail("pair", {a, x});
          break;
        }
    }
    out.push_back(std::move(v));
  }
  if (b.two_sided()) {
    auto sig = [&](Element a, Element x) { return b.sub(b.mul(x, a), a); };
    scan("sigma additive", [&](Element a, Element x, Element y) {
      return sig(a, b.add(x, y)) == b.add(sig(a, x), sig(a, y));
    });
    scan("sigma anti-homomorphism",
         [&](Element x, Element y, Element z) { return sig(b.mul(x, y), z) == sig(y, sig(x, z)); });
    Verdict v{"a + b = sigma_b^-1(a) o b"};
    for (Element c = 0; c < n && v.holds; ++c) {
      std::vector<Element> inv(n);
      for (Element x = 0; x < n; ++x) inv[sig(c, x)] = x;
      for (Element a = 0; a < n; ++a)
        if (b.add(a, c) != b.mul(inv[a], c)) {
          v.fail("pair", {a, c});
          break;
        }
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool is_additive_subgroup(const SkewBrace& b, const ElementSet& s) {
  return grp::is_subgroup(b.additive(), s);
}

bool is_sub_brace(const SkewBrace& b, const ElementSet& s) {
  return grp::is_subgroup(b.additive(), s) && grp::is_subgroup(b.multiplicative(), s);
}

namespace {

// Closure under + and o of `member` extended by gens. Returns false if the
// closure leaves `allowed` (when given).
bool close_brace(const SkewBrace& b, std::vector<char>& member, std::vector<Element>& items,
                 std::span<const Element> gens, const std::vector<char>* allowed) {
  auto push = [&](Element y) {
    if (member[y]) return true;
    if (allowed && !(*allowed)[y]) return false;
    member[y] = 1;
    items.push_back(y);
    return true;
  };
  if (!push(b.zero())) return false;
  for (Element g : gens)
    if (!push(g)) return false;
  // In a finite set closed under an associative operation the generated
  // monoid is a group, so + and o closure suffices.
  for (std::size_t head = 0; head < items.size(); ++head) {
    const Element x = items[head];
    for (std::size_t j = 0; j <= head; ++j) {
      const Element y = items[j];
      if (!push(b.add(x, y)) || !push(b.add(y, x)) || !push(b.mul(x, y)) || !push(b.mul(y, x)))
        return false;
    }
  }
  return true;
}

std::vector<ElementSet> sub_braces_impl(const SkewBrace& b, const std::vector<char>* allowed) {
  const std::size_t n = b.order();
  std::set<std::vector<Element>> seen;
  std::vector<ElementSet> found;
  auto attempt = [&](const std::vector<char>& base_mask, const std::vector<Element>& base, Element g) {
    std::vector<char> member = base_mask;
    std::vector<Element> items = base;
    const Element gens[1] = {g};
    if (!close_brace(b, member, items, gens, allowed)) return;
    std::sort(items.begin(), items.end());
    if (seen.insert(items).second) found.emplace_back(n, std::move(items));
  };
  const std::vector<char> empty_mask(n, 0);
  for (Element g = 0; g < n; ++g)
    if (!allowed || (*allowed)[g]) attempt(empty_mask, {}, g);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet base = found[i];
    const auto mask = base.mask();
    for (Element g = 0; g < n; ++g)
      if (!mask[g] && (!allowed || (*allowed)[g])) attempt(mask, base.items(), g);
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

ElementSet brace_closure(const SkewBrace& b, std::span<const Element> gens) {
  std::vector<char> member(b.order(), 0);
  std::vector<Element> items;
  close_brace(b, member, items, gens, nullptr);
  return ElementSet(b.order(), std::move(items));
}

std::vector<ElementSet> sub_skew_braces(const SkewBrace& b, std::size_t bound) {
  if (b.order() > bound)
    throw Error(Errc::BoundExceeded, "sub-brace enumeration bound " + std::to_string(bound) + " exceeded",
                {b.order()});
  return sub_braces_impl(b, nullptr);
}

std::vector<ElementSet> sub_skew_braces_within(const SkewBrace& b, const ElementSet& pool) {
  const auto allowed = pool.mask();
  if (!allowed[b.zero()]) return {};
  return sub_braces_impl(b, &allowed);
}

Verdict is_left_ideal(const SkewBrace& b, const ElementSet& s) {
  if (!is_additive_subgroup(b, s))
    throw Error(Errc::NotAdditiveSubgroup, "{" + s.to_string() + "} is not an additive subgroup");
  Verdict v{"left ideal"};
  const auto m = s.mask();
  for (Element a = 0; a < b.order(); ++a)
    for (Element x : s) {
      const Element y = b.lambda(a, x);
      if (!m[y]) {
        v.fail("lambda", {a, x, y});
        return v;
      }
    }
  return v;
}

Verdict is_ideal(const SkewBrace& b, const ElementSet& s) {
  Verdict v = is_left_ideal(b, s);
  v.property = "ideal";
  const bool lambda_invariant = v.holds;
  const auto m = s.mask();
  const std::size_t n = b.order();
  auto normal_in = [&](const FiniteGroup& g, const char* clause) {
    for (Element x = 0; x < n; ++x)
      for (Element y : s)
        if (!m[g.op(g.op(x, y), g.inverse(x))]) {
          v.fail(clause, {x, y});
          return false;
        }
    return true;
  };
  const bool add_normal = normal_in(b.additive(), "additive-normal");
  bool mul_normal = false;
  if (grp::is_subgroup(b.multiplicative(), s))
    mul_normal = normal_in(b.multiplicative(), "multiplicative-normal");
  else
    v.fail("multiplicative-subgroup", {});
  if (b.two_sided() && add_normal && mul_normal) {
    bool sigma_invariant = true;
    for (Element a = 0; a < n && sigma_invariant; ++a)
      for (Element x : s)
        if (!m[b.sub(b.mul(x, a), a)]) {
          sigma_invariant = false;
          break;
        }
    if (sigma_invariant != lambda_invariant) internal_fault("sigma-invariance disagrees with ideal test");
  }
  return v;
}

std::vector<ElementSet> enumerate_ideals(const SkewBrace& b) {
  std::vector<ElementSet> out;
  for (auto& s : sub_skew_braces(b))
    if (is_ideal(b, s)) out.push_back(std::move(s));
  return out;
}

ElementSet socle(const SkewBrace& b) {
  const std::size_t n = b.order();
  std::vector<char> m(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = b.lambda(a, x) == x && b.add(a, x) == b.add(x, a);
    m[a] = ok;
  }
  auto s = ElementSet::from_mask(m);
  if (!is_ideal(b, s)) internal_fault("socle is not an ideal");
  return s;
}

ElementSet additive_centraliser(const SkewBrace& b, const ElementSet& s) {
  std::vector<char> m(b.order(), 0);
  for (Element a = 0; a < b.order(); ++a)
    m[a] = std::all_of(s.begin(), s.end(), [&](Element x) { return b.add(a, x) == b.add(x, a); });
  return ElementSet::from_mask(m);
}

ElementSet multiplicative_centraliser(const SkewBrace& b, const ElementSet& s) {
  std::vector<char> m(b.order(), 0);
  for (Element a = 0; a < b.order(); ++a)
    m[a] = std::all_of(s.begin(), s.end(), [&](Element x) { return b.mul(a, x) == b.mul(x, a); });
  return ElementSet::from_mask(m);
}

namespace {
ElementSet kernel_on(const SkewBrace& b, const ElementSet& s) {
  std::vector<char> m(b.order(), 0);
  for (Element a = 0; a < b.order(); ++a)
    m[a] = std::all_of(s.begin(), s.end(), [&](Element x) { return b.mul(a, x) == b.add(a, x); });
  return ElementSet::from_mask(m);
}
}  // namespace

ElementSet annihilator(const SkewBrace& b) {
  const auto all = ElementSet::all(b.order());
  auto ann = additive_centraliser(b, all).intersect(multiplicative_centraliser(b, all)).intersect(kernel_on(b, all));
  if (!is_ideal(b, ann)) internal_fault("annihilator is not an ideal");
  return ann;
}

ElementSet ker_lambda_on(const SkewBrace& b, const ElementSet& ideal) {
  if (!is_additive_subgroup(b, ideal) || !is_left_ideal(b, ideal))
    throw Error(Errc::NotLeftIdeal, "{" + ideal.to_string() + "} is not a left ideal");
  auto k = kernel_on(b, ideal);
  if (!grp::is_subgroup(b.multiplicative(), k)) internal_fault("ker lambda^I is not a multiplicative subgroup");
  return k;
}

SkewBrace semidirect_product(const SkewBrace& h, const SkewBrace& q, const ActionTables& sigma) {
  const std::size_t nh = h.order(), nq = q.order(), n = nh * nq;
  if (sigma.size() != nq) throw Error(Errc::DimensionMismatch, "need one action table per element of Q");
  for (Element u = 0; u < nq; ++u) {
    const auto& s = sigma[u];
    if (s.size() != nh) throw Error(Errc::SigmaNotAutomorphism, "action table has wrong size", {u});
    grp::GroupMap f{s};
    if (!grp::is_automorphism(h.additive(), f) || !grp::is_automorphism(h.multiplicative(), f))
      throw Error(Errc::SigmaNotAutomorphism, "sigma_" + std::to_string(u) + " is not a brace automorphism", {u});
  }
  for (Element u = 0; u < nq; ++u)
    for (Element v = 0; v < nq; ++v) {
      const auto& suv = sigma[q.mul(u, v)];
      for (Element x = 0; x < nh; ++x)
        if (suv[x] != sigma[u][sigma[v][x]])
          throw Error(Errc::SigmaNotHomomorphism,
                      "sigma_(u o v) != sigma_u sigma_v at (" + std::to_string(u) + "," + std::to_string(v) + ")",
                      {u, v});
    }
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element a = Element(i / nq), u = Element(i % nq), c = Element(j / nq), v = Element(j % nq);
      add[i * n + j] = pair_index(h.add(a, c), q.add(u, v), nq);
      mul[i * n + j] = pair_index(h.mul(a, sigma[u][c]), q.mul(u, v), nq);
    }
  try {
    return make_skew_brace(grp::from_flat(n, std::move(add)), grp::from_flat(n, std::move(mul)));
  } catch (const Error& e) {
    internal_fault(std::string("semidirect product failed validation: ") + e.what());
  }
  return {};
}

std::vector<std::pair<Element, Element>> yb_map(const SkewBrace& b) {
  const std::size_t n = b.order();
  std::vector<std::pair<Element, Element>> r(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c) {
      const Element l = b.lambda(a, c);
      r[std::size_t(a) * n + c] = {l, b.mul(b.mul(b.minv(l), a), c)};
    }
  return r;
}

Verdict check_yb(const SkewBrace& b) {
  Verdict v{"Yang-Baxter"};
  const std::size_t n = b.order();
  const auto r = yb_map(b);
  std::vector<char> hit(n * n, 0);
  for (std::size_t i = 0; i < n * n; ++i) {
    const std::size_t k = std::size_t(r[i].first) * n + r[i].second;
    if (hit[k]) {
      v.fail("not-bijective", {Element(i / n), Element(i % n)});
      break;
    }
    hit[k] = 1;
  }
  auto apply = [&](Element x, Element y) { return r[std::size_t(x) * n + y]; };
  auto bad = kernels::first_failing_triple(n, [&](Element x, Element y, Element z) {
    // (r x id)(id x r)(r x id)
    auto [a1, b1] = apply(x, y);
    auto [b2, c2] = apply(b1, z);
    auto [a3, b3] = apply(a1, b2);
    // (id x r)(r x id)(id x r)
    auto [q1, r1] = apply(y, z);
    auto [p2, q2] = apply(x, q1);
    auto [q3, r3] = apply(q2, r1);
    return a3 == p2 && b3 == q3 && c2 == r3;
  });
  if (bad) v.fail("braid", triple_witness(*bad));
  return v;
}

}  // namespace skewalg::skb
