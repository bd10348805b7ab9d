#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewalg {

/// Elements of a finite carrier are indices 0..n-1.
using Element = std::uint32_t;

enum class Errc {
  NotSquare,
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotASubgroup,
  BoundExceeded,
  IdentityMismatch,
  BraceIdentityFails,
  NotTwoSided,
  NotAdditiveSubgroup,
  NotLeftIdeal,
  NotAnIdeal,
  NotASubBrace,
  SigmaNotAutomorphism,
  SigmaNotHomomorphism,
  ParseError,
  IndexOutOfRange,
  DuplicateEntry,
  DimensionMismatch,
};

const char* errc_name(Errc code);

/// The single exception type of the library. `witness` holds the first
/// offending elements (or the line number for parse errors); `side` tags
/// which table of a brace failed ("add" / "mul") when relevant.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::vector<std::size_t> witness = {},
        std::string side = {});

  Errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }
  const std::string& side() const noexcept { return side_; }

 private:
  Errc code_;
  std::vector<std::size_t> witness_;
  std::string side_;
};

/// Sorted, duplicate-free subset of a carrier 0..n-1.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t universe, std::vector<Element> items);
  ElementSet(std::size_t universe, std::initializer_list<Element> items);
  static ElementSet from_mask(const std::vector<char>& mask);
  static ElementSet all(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(Element x) const;
  bool is_subset_of(const ElementSet& other) const;
  std::vector<char> mask() const;

  const std::vector<Element>& items() const noexcept { return items_; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  Element operator[](std::size_t i) const { return items_[i]; }

  ElementSet intersect(const ElementSet& other) const;
  std::string to_string() const;  // "0,8,16"

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Ordering used everywhere for deterministic lists: by size, then lexicographic.
  friend bool operator<(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<Element> items_;
};

/// Parses "0,8,16" (whitespace tolerated). Throws Error(ParseError).
std::vector<Element> parse_csv_elements(const std::string& text);

struct Witness {
  std::string clause;
  std::vector<Element> elements;
};

/// Outcome of a property check. A failing verdict carries at least one witness.
struct Verdict {
  Verdict() = default;
  explicit Verdict(std::string prop) : property(std::move(prop)) {}

  std::string property;
  bool holds = true;
  std::vector<Witness> witnesses;

  explicit operator bool() const noexcept { return holds; }
  void fail(std::string clause, std::vector<Element> elements);
  const Witness* first(const std::string& clause) const;
  std::string to_string() const;
};

}  // namespace skewalg
