#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "skewalg/core.hpp"
#include "skewalg/group.hpp"

namespace skewalg::skb {

using grp::FiniteGroup;
using grp::Table;

inline constexpr std::size_t kDefaultSubBraceBound = 64;

/// A skew brace (B, +, o) on carrier 0..n-1. Built only through
/// make_skew_brace, so every instance satisfies the brace identity.
class SkewBrace {
 public:
  std::size_t order() const noexcept { return add_.order(); }
  const FiniteGroup& additive() const noexcept { return add_; }
  const FiniteGroup& multiplicative() const noexcept { return mul_; }
  Element zero() const noexcept { return add_.identity(); }

  Element add(Element a, Element b) const { return add_.op(a, b); }
  Element neg(Element a) const { return add_.inverse(a); }
  Element sub(Element a, Element b) const { return add_.op(a, add_.inverse(b)); }
  Element mul(Element a, Element b) const { return mul_.op(a, b); }
  Element minv(Element a) const { return mul_.inverse(a); }
  /// lambda_a(b) = -a + a o b
  Element lambda(Element a, Element b) const { return add_.op(add_.inverse(a), mul_.op(a, b)); }

  bool two_sided() const noexcept { return two_sided_; }

  friend bool operator==(const SkewBrace& a, const SkewBrace& b) {
    return a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  friend SkewBrace make_skew_brace(FiniteGroup add, FiniteGroup mul);
  FiniteGroup add_;
  FiniteGroup mul_;
  bool two_sided_ = false;
};

/// Validation order: additive group, multiplicative group, shared identity,
/// brace identity. Group errors carry side "add" or "mul".
SkewBrace make_skew_brace(const Table& add_table, const Table& mul_table);
SkewBrace make_skew_brace(FiniteGroup add, FiniteGroup mul);

/// Re-checks every brace law exhaustively: both forms of the brace identity,
/// the Mal'cev term x + (-x + y) = y, lambda_a additive, lambda a homomorphism,
/// a + b = a o lambda_a^{-1}(b). On two-sided braces also the sigma laws.
std::vector<Verdict> check_brace_axioms(const SkewBrace& b);

/// Row a of the table is the permutation x -> map_a(x).
class BraceMap {
 public:
  BraceMap(std::size_t n, std::vector<Element> flat) : n_(n), flat_(std::move(flat)) {}
  std::size_t order() const noexcept { return n_; }
  Element operator()(Element a, Element x) const { return flat_[std::size_t(a) * n_ + x]; }
  std::span<const Element> row(Element a) const { return {flat_.data() + std::size_t(a) * n_, n_}; }
  /// Inverse permutation of row a.
  std::vector<Element> inverse_row(Element a) const;

 private:
  std::size_t n_;
  std::vector<Element> flat_;
};

BraceMap lambda_map(const SkewBrace& b);

/// (a + b) o c = a o c - c + b o c for all triples; witness clause "triple".
Verdict is_two_sided(const SkewBrace& b);

/// sigma_a(x) = x o a - a. Throws Error(NotTwoSided).
BraceMap sigma_map(const SkewBrace& b);

bool is_additive_subgroup(const SkewBrace& b, const ElementSet& s);
bool is_sub_brace(const SkewBrace& b, const ElementSet& s);
ElementSet brace_closure(const SkewBrace& b, std::span<const Element> gens);

/// All sub-braces, sorted by (size, lexicographic). Throws BoundExceeded.
std::vector<ElementSet> sub_skew_braces(const SkewBrace& b, std::size_t bound = kDefaultSubBraceBound);
/// Sub-braces contained in `pool`.
std::vector<ElementSet> sub_skew_braces_within(const SkewBrace& b, const ElementSet& pool);

/// lambda_a(S) in S for all a. Throws Error(NotAdditiveSubgroup).
/// Witness clause "lambda" = (a, x, lambda_a(x)).
Verdict is_left_ideal(const SkewBrace& b, const ElementSet& s);

/// Left ideal plus normality in (B,+) and (B,o). All three clauses are checked
/// and witnessed independently: "lambda" (a, x, image), "additive-normal"
/// (g, x), "multiplicative-normal" (g, x). On two-sided braces the sigma
/// criterion for ideals is cross-checked whenever both normalities hold.
Verdict is_ideal(const SkewBrace& b, const ElementSet& s);

std::vector<ElementSet> enumerate_ideals(const SkewBrace& b);

/// ker lambda intersected with the centre of (B,+).
ElementSet socle(const SkewBrace& b);

/// C(B,B): additively and multiplicatively central elements with trivial lambda.
ElementSet annihilator(const SkewBrace& b);

ElementSet additive_centraliser(const SkewBrace& b, const ElementSet& s);
ElementSet multiplicative_centraliser(const SkewBrace& b, const ElementSet& s);

/// {x : x o y = x + y for all y in I}. Throws Error(NotLeftIdeal).
ElementSet ker_lambda_on(const SkewBrace& b, const ElementSet& ideal);

/// sigma[u][h] is the image of h under the automorphism attached to u.
using ActionTables = std::vector<std::vector<Element>>;

/// Pairs (h, q) are encoded as index(h) * |Q| + index(q).
/// (a,u) + (b,v) = (a+b, u+v), (a,u) o (b,v) = (a o sigma_u(b), u o v).
SkewBrace semidirect_product(const SkewBrace& h, const SkewBrace& q, const ActionTables& sigma);

inline Element pair_index(Element h, Element q, std::size_t q_order) {
  return Element(std::size_t(h) * q_order + q);
}

/// r(a,b) = (lambda_a(b), lambda_a(b)^- o a o b), stored row-major.
std::vector<std::pair<Element, Element>> yb_map(const SkewBrace& b);

/// Bijectivity of r ("not-bijective" witness (a,b)) and the braid relation on
/// all triples ("braid" witness (a,b,c)).
Verdict check_yb(const SkewBrace& b);

}  // namespace skewalg::skb
