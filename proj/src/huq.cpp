#include "skewalg/huq.hpp"

#include <algorithm>

namespace skewalg::huq {

namespace {

void require_ideal(const SkewBrace& b, const ElementSet& ideal) {
  if (!skb::is_additive_subgroup(b, ideal) || !skb::is_ideal(b, ideal))
    throw Error(Errc::NotAnIdeal, "{" + ideal.to_string() + "} is not an ideal");
}

}  // namespace

ElementSet c_set(const SkewBrace& b, const ElementSet& ideal) {
  require_ideal(b, ideal);
  return skb::additive_centraliser(b, ideal)
      .intersect(skb::multiplicative_centraliser(b, ideal))
      .intersect(skb::ker_lambda_on(b, ideal));
}

Verdict cooperates(const SkewBrace& b, const ElementSet& i, const ElementSet& j) {
  if (!skb::is_sub_brace(b, i)) throw Error(Errc::NotASubBrace, "{" + i.to_string() + "} is not a sub-brace", {}, "I");
  if (!skb::is_sub_brace(b, j)) throw Error(Errc::NotASubBrace, "{" + j.to_string() + "} is not a sub-brace", {}, "J");
  Verdict v{"cooperates"};
  for (Element x : i)
    for (Element x2 : i)
      for (Element y : j)
        for (Element y2 : j) {
          const Element lhs_add = b.add(b.add(x, y), b.add(x2, y2));
          const Element rhs_add = b.add(b.add(x, x2), b.add(y, y2));
          if (lhs_add != rhs_add) {
            v.fail("additive", {x, x2, y, y2});
            return v;
          }
          const Element lhs_mul = b.mul(b.add(x, y), b.add(x2, y2));
          const Element rhs_mul = b.add(b.mul(x, x2), b.mul(y, y2));
          if (lhs_mul != rhs_mul) {
            v.fail("multiplicative", {x, x2, y, y2});
            return v;
          }
        }
  return v;
}

namespace {

std::vector<ElementSet> cooperating_within(const SkewBrace& b, const ElementSet& ideal, const ElementSet& pool) {
  std::vector<ElementSet> out;
  for (auto& s : skb::sub_skew_braces_within(b, pool))
    if (cooperates(b, ideal, s)) out.push_back(std::move(s));
  return out;
}

std::optional<ElementSet> maximum(const std::vector<ElementSet>& sets) {
  if (sets.empty()) return std::nullopt;
  // sets are sorted by size, so a maximum must be the last one
  const ElementSet& top = sets.back();
  for (const auto& s : sets)
    if (!s.is_subset_of(top)) return std::nullopt;
  return top;
}

}  // namespace

std::optional<ElementSet> huq_centraliser(const SkewBrace& b, const ElementSet& ideal) {
  const ElementSet pool = c_set(b, ideal);
  return maximum(cooperating_within(b, ideal, pool));
}

CentraliserReport centraliser_report(const SkewBrace& b, const ElementSet& ideal) {
  CentraliserReport r;
  r.ideal = ideal;
  r.c_set = c_set(b, ideal);
  const auto m = r.c_set.mask();
  for (Element x : r.c_set) {
    for (Element y : r.c_set) {
      if (!m[b.add(x, y)]) {
        r.c_set_closure_witness = Witness{"add", {x, y, b.add(x, y)}};
        break;
      }
      if (!m[b.mul(x, y)]) {
        r.c_set_closure_witness = Witness{"mul", {x, y, b.mul(x, y)}};
        break;
      }
    }
    if (r.c_set_closure_witness) break;
  }
  r.c_set_is_subbrace = !r.c_set_closure_witness;
  r.cooperating_subbraces = cooperating_within(b, ideal, r.c_set);
  r.centraliser = maximum(r.cooperating_subbraces);
  if (r.centraliser) r.centraliser_is_ideal = skb::is_ideal(b, *r.centraliser);
  return r;
}

}  // namespace skewalg::huq
