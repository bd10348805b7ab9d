#include "skewalg/core.hpp"

#include <algorithm>
#include <sstream>

namespace skewalg {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::IdentityMismatch: return "IdentityMismatch";
    case Errc::BraceIdentityFails: return "BraceIdentityFails";
    case Errc::NotTwoSided: return "NotTwoSided";
    case Errc::NotAdditiveSubgroup: return "NotAdditiveSubgroup";
    case Errc::NotLeftIdeal: return "NotLeftIdeal";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotASubBrace: return "NotASubBrace";
    case Errc::SigmaNotAutomorphism: return "SigmaNotAutomorphism";
    case Errc::SigmaNotHomomorphism: return "SigmaNotHomomorphism";
    case Errc::ParseError: return "ParseError";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateEntry: return "DuplicateEntry";
    case Errc::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

Error::Error(Errc code, std::string message, std::vector<std::size_t> witness, std::string side)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)),
      side_(std::move(side)) {}

ElementSet::ElementSet(std::size_t universe, std::vector<Element> items)
    : universe_(universe), items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  if (!items_.empty() && items_.back() >= universe_)
    throw Error(Errc::IndexOutOfRange, "element " + std::to_string(items_.back()) +
                                           " outside carrier of size " + std::to_string(universe_),
                {items_.back()});
}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> items)
    : ElementSet(universe, std::vector<Element>(items)) {}

ElementSet ElementSet::from_mask(const std::vector<char>& mask) {
  std::vector<Element> items;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) items.push_back(Element(i));
  return ElementSet(mask.size(), std::move(items));
}

ElementSet ElementSet::all(std::size_t universe) {
  std::vector<Element> items(universe);
  for (std::size_t i = 0; i < universe; ++i) items[i] = Element(i);
  return ElementSet(universe, std::move(items));
}

bool ElementSet::contains(Element x) const {
  return std::binary_search(items_.begin(), items_.end(), x);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

std::vector<char> ElementSet::mask() const {
  std::vector<char> m(universe_, 0);
  for (Element x : items_) m[x] = 1;
  return m;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  std::vector<Element> out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out));
  return ElementSet(universe_, std::move(out));
}

std::string ElementSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(items_[i]);
  }
  return s;
}

bool operator<(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.items_ < b.items_;
}

std::vector<Element> parse_csv_elements(const std::string& text) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(Errc::ParseError, "empty element in list '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::ParseError, "not an element index: '" + tok + "'");
    out.push_back(static_cast<Element>(std::stoul(tok)));
  }
  return out;
}

void Verdict::fail(std::string clause, std::vector<Element> elements) {
  holds = false;
  witnesses.push_back({std::move(clause), std::move(elements)});
}

const Witness* Verdict::first(const std::string& clause) const {
  for (const auto& w : witnesses)
    if (w.clause == clause) return &w;
  return nullptr;
}

std::string Verdict::to_string() const {
  std::ostringstream os;
  os << property << ": " << (holds ? "true" : "false");
  for (const auto& w : witnesses) {
    os << " [" << w.clause;
    for (Element e : w.elements) os << ' ' << e;
    os << ']';
  }
  return os.str();
}

}  // namespace skewalg
