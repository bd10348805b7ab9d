#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewalg/core.hpp"

namespace skewalg::grp {

using Table = std::vector<std::vector<Element>>;
using Permutation = std::vector<Element>;

inline constexpr std::size_t kDefaultAutBound = 16;

class FiniteGroup;
namespace detail {
FiniteGroup build_group(std::size_t n, std::vector<Element> flat, bool check_associativity);
}

/// A finite group given by its Cayley table. Immutable once built; the only
/// ways to obtain one are make_group (full validation), from_flat and
/// make_permutation_group (associativity is inherited from composition).
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t order() const noexcept { return n_; }
  Element op(Element a, Element b) const { return table_[std::size_t(a) * n_ + b]; }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element a) const { return inverses_[a]; }
  const std::vector<Element>& inverses() const noexcept { return inverses_; }
  std::span<const Element> row(Element a) const {
    return {table_.data() + std::size_t(a) * n_, n_};
  }
  Table table() const;

  Element power(Element a, std::uint64_t k) const;
  std::size_t element_order(Element a) const;
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  friend FiniteGroup detail::build_group(std::size_t, std::vector<Element>, bool);

  std::size_t n_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
};

/// Validates Latin square, identity, inverses and associativity, in that
/// order, throwing Error with the first witness found.
FiniteGroup make_group(const Table& table);
FiniteGroup from_flat(std::size_t n, std::vector<Element> flat);

/// Re-runs every group axiom; used to check that validation is idempotent.
Verdict check_group_axioms(const FiniteGroup& g);

/// A map between carriers, images[i] is the image of element i.
struct GroupMap {
  std::vector<Element> images;
  Element operator()(Element a) const { return images[a]; }
  friend auto operator<=>(const GroupMap&, const GroupMap&) = default;
};

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupMap& f);
bool is_automorphism(const FiniteGroup& g, const GroupMap& f);

// Standard constructions. Direct products encode (g, h) as g * |H| + h.
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup symmetric_group(std::size_t k);
FiniteGroup dihedral_group(std::size_t m);  // order 2m, r^i s^e -> i + m*e
FiniteGroup quaternion_group();
FiniteGroup opposite(const FiniteGroup& g);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};
/// All groups of the given order up to isomorphism, for orders 1..8.
std::vector<NamedGroup> small_groups(std::size_t order);

ElementSet generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);

/// All subgroups sorted by (size, lexicographic).
std::vector<ElementSet> subgroups(const FiniteGroup& g);

/// Throws Error(NotASubgroup). Witness clause "conjugate" = (g, s).
Verdict is_normal_subgroup(const FiniteGroup& g, const ElementSet& s);

/// Invariant factors d1 | d2 | ... of an abelian group; nullopt if nonabelian.
std::optional<std::vector<std::uint64_t>> abelian_invariants(const FiniteGroup& g);

bool is_dihedral(const FiniteGroup& g, std::size_t m);

/// All automorphisms in lexicographic order of image arrays.
std::vector<GroupMap> automorphisms(const FiniteGroup& g, std::size_t bound = kDefaultAutBound);

/// A group realised as permutations of `degree` points; element i of `group`
/// is perms[i], and the product a*b acts as perms[a] after perms[b].
struct PermutationGroup {
  std::size_t degree = 0;
  std::vector<Permutation> perms;
  FiniteGroup group;
};

/// Builds the composition table; perms must be closed under composition.
PermutationGroup make_permutation_group(std::vector<Permutation> perms);

struct HolLabel {
  Element translation;
  std::size_t automorphism;  // index into automorphisms(G)
};

/// Hol(G) acting on the carrier by x -> t * phi(x). Element index k*|G| + t
/// is labelled (t, k).
struct Holomorph {
  PermutationGroup perm;
  std::vector<GroupMap> auts;
  std::vector<HolLabel> labels;
};

Holomorph holomorph(const FiniteGroup& g, std::size_t bound = kDefaultAutBound);

/// Subgroups of H acting regularly on its points, as sets of element indices
/// of H.group, sorted lexicographically. Fans the first branching level out
/// over OpenMP threads.
std::vector<ElementSet> regular_subgroups(const PermutationGroup& h);
std::vector<ElementSet> regular_subgroups_serial(const PermutationGroup& h);

}  // namespace skewalg::grp
