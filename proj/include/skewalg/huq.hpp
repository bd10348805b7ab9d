#pragma once

#include <optional>
#include <vector>

#include "skewalg/brace.hpp"

namespace skewalg::huq {

using skb::SkewBrace;

/// C(B,I) = C^+_B(I) ∩ C^o_B(I) ∩ ker lambda^I. Throws Error(NotAnIdeal).
ElementSet c_set(const SkewBrace& b, const ElementSet& ideal);

/// Whether x + y defines a brace homomorphism I x J -> B. Throws
/// Error(NotASubBrace) naming the offending argument ("I" or "J" in side()).
/// Witness clauses "additive" / "multiplicative" carry (x, x', y, y').
Verdict cooperates(const SkewBrace& b, const ElementSet& i, const ElementSet& j);

/// Largest sub-brace cooperating with the ideal, or nullopt when the
/// cooperating sub-braces have no maximum.
std::optional<ElementSet> huq_centraliser(const SkewBrace& b, const ElementSet& ideal);

struct CentraliserReport {
  ElementSet ideal;
  ElementSet c_set;
  bool c_set_is_subbrace = false;
  /// First (x, y) in C(B,I) with x + y or x o y outside it, clause "add"/"mul".
  std::optional<Witness> c_set_closure_witness;
  std::vector<ElementSet> cooperating_subbraces;
  std::optional<ElementSet> centraliser;
  /// Meaningful only when the centraliser exists.
  std::optional<Verdict> centraliser_is_ideal;

  bool normal() const { return centraliser && centraliser_is_ideal && centraliser_is_ideal->holds; }
};

CentraliserReport centraliser_report(const SkewBrace& b, const ElementSet& ideal);

}  // namespace skewalg::huq
