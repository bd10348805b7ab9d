#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewalg/core.hpp"

namespace skewalg::nalg {

/// Exact rationals, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rational>;

std::string to_string(const Rational& q);
/// Accepts "p", "p/q", with optional sign. Throws Error(ParseError).
Rational parse_rational(const std::string& text);

struct Entry {
  std::size_t i, j, k;
  Rational coeff;  // e_i * e_j has coefficient coeff on e_k
};

/// A finite-dimensional algebra over Q given by structure constants, with an
/// optional second bilinear operation (the bracket of a post-Lie structure).
class StructureAlgebra {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Entry>& product_entries() const noexcept { return product_; }
  const std::optional<std::vector<Entry>>& bracket_entries() const noexcept { return bracket_; }
  bool has_bracket() const noexcept { return bracket_.has_value(); }

  /// e_i * e_j as a coefficient vector.
  const Vec& basis_product(std::size_t i, std::size_t j) const { return prod_[i * dim_ + j]; }
  const Vec& basis_bracket(std::size_t i, std::size_t j) const { return brk_[i * dim_ + j]; }

 private:
  friend StructureAlgebra make_algebra(std::size_t, std::vector<Entry>, std::optional<std::vector<Entry>>);
  std::size_t dim_ = 0;
  std::vector<Entry> product_;
  std::optional<std::vector<Entry>> bracket_;
  std::vector<Vec> prod_;
  std::vector<Vec> brk_;
};

/// Sorts entries, drops zero coefficients. Throws IndexOutOfRange, DuplicateEntry.
StructureAlgebra make_algebra(std::size_t dim, std::vector<Entry> product,
                              std::optional<std::vector<Entry>> bracket = std::nullopt);

Vec basis(std::size_t dim, std::size_t i);
/// Throws Error(DimensionMismatch).
Vec multiply(const StructureAlgebra& a, const Vec& u, const Vec& v);
Vec bracket(const StructureAlgebra& a, const Vec& u, const Vec& v);
/// x(yz) - (xy)z
Vec associator(const StructureAlgebra& a, const Vec& x, const Vec& y, const Vec& z);

/// x(yz) - (xy)z = y(xz) - (yx)z on basis triples; witness clause "triple".
Verdict is_pre_lie(const StructureAlgebra& a);
/// Pre-Lie and (xy)z = (xz)y; clauses "pre-lie" and "right-commutative".
Verdict is_novikov(const StructureAlgebra& a);
/// Itemised: "antisymmetry" (i,j), "jacobi", "post1", "post2" (i,j,k).
/// A missing bracket is treated as the zero bracket.
Verdict is_post_lie(const StructureAlgebra& a);

enum class Side { Left, Right };
const char* side_name(Side s);

/// Columns of the linear system, in this order, for (x,y,z) = (e_i,e_j,e_k):
/// (xy)z, (yx)z, z(xy), z(yx), (xz)y, (zx)y, y(xz), y(zx).
/// Left side x(yz), right side (yz)x.
struct IdentitySolution {
  Side side = Side::Left;
  bool consistent = false;
  std::optional<std::array<Rational, 8>> sample;
  std::size_t nullity = 0;
  std::optional<std::array<std::size_t, 3>> witness;
  /// Every triple whose own equations are contradictory, in lexicographic order.
  std::vector<std::array<std::size_t, 3>> certificates;
};

/// One scalar equation per (basis triple, coordinate): d^4 equations.
struct Equation {
  std::array<std::size_t, 3> triple;
  std::size_t coordinate;
  std::array<Rational, 8> coeffs;
  Rational rhs;
};
std::vector<Equation> identity_equations(const StructureAlgebra& a, Side side);

/// Exact Gaussian elimination with triples fed in lexicographic order. Free
/// variables are set to 0 in the sample. The witness is the first triple whose
/// own equations are contradictory; failing that, the first triple whose
/// equations make the accumulated system inconsistent. Consistent solutions
/// are spot-checked on pseudorandom vector triples.
IdentitySolution solve_identity(const StructureAlgebra& a, Side side);

/// Largest |lhs - rhs| == 0 check: true iff `coeffs` satisfies every equation.
bool zero_residual(const StructureAlgebra& a, Side side, const std::array<Rational, 8>& coeffs);

struct AccessibilityVerdict {
  IdentitySolution left;
  IdentitySolution right;
  bool obstructs() const { return !left.consistent || !right.consistent; }
};
AccessibilityVerdict accessibility_verdict(const StructureAlgebra& a);

/// The four-dimensional pre-Lie algebra I4 (0-based basis).
StructureAlgebra build_i4();

/// Lambda assignment (1, -1, 0, 0, 0, 0, 1, 0): the left identity of every pre-Lie algebra.
std::array<Rational, 8> pre_lie_left_assignment();

// Text format: "dim d", "product", entries "i j k p/q", optional "bracket" section.
std::string format_algebra(const StructureAlgebra& a);
StructureAlgebra parse_algebra(const std::string& text);
StructureAlgebra load_algebra(const std::filesystem::path& path);
void save_algebra(const StructureAlgebra& a, const std::filesystem::path& path);

}  // namespace skewalg::nalg
