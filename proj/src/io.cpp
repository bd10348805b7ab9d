#include <fstream>
#include <sstream>

#include "skewalg/atlas.hpp"

namespace skewalg::atlas {

namespace {

void write_rows(std::ostringstream& os, const grp::FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (b) os << ' ';
      os << g.op(a, b);
    }
    os << '\n';
  }
}

// Line reader that skips comments and blank lines and remembers the physical
// line number for error messages.
class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  bool next(std::string& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++lineno_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto b = raw.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      const auto e = raw.find_last_not_of(" \t\r");
      line = raw.substr(b, e - b + 1);
      return true;
    }
    ++lineno_;
    return false;
  }

  std::string expect_line(const char* what) {
    std::string line;
    if (!next(line)) fail(std::string("unexpected end of file, expected ") + what);
    return line;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, "line " + std::to_string(lineno_) + ": " + msg, {lineno_});
  }

  std::size_t lineno() const { return lineno_; }

 private:
  std::istringstream in_;
  std::size_t lineno_ = 0;
};

std::size_t parse_order(LineReader& r) {
  std::istringstream ls(r.expect_line("'order <n>'"));
  std::string key, extra;
  long long n = 0;
  if (!(ls >> key >> n) || key != "order" || n <= 0 || (ls >> extra)) r.fail("expected 'order <n>'");
  return std::size_t(n);
}

void expect_keyword(LineReader& r, const char* keyword) {
  if (r.expect_line(keyword) != keyword) r.fail(std::string("expected '") + keyword + "'");
}

std::vector<Element> parse_rows(LineReader& r, std::size_t n) {
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::istringstream ls(r.expect_line("a table row"));
    std::string tok;
    std::size_t count = 0;
    while (ls >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) r.fail("not an element index: '" + tok + "'");
      const unsigned long v = std::stoul(tok);
      if (v >= n) r.fail("entry " + tok + " out of range");
      flat.push_back(Element(v));
      ++count;
    }
    if (count != n) r.fail("row has " + std::to_string(count) + " entries, expected " + std::to_string(n));
  }
  return flat;
}

void expect_end(LineReader& r) {
  std::string line;
  if (r.next(line)) r.fail("unexpected trailing content '" + line + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string(), {0});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string(), {0});
  out << text;
}

}  // namespace

std::string format_brace(const SkewBrace& b) {
  std::ostringstream os;
  os << "order " << b.order() << '\n' << "add\n";
  write_rows(os, b.additive());
  os << "mul\n";
  write_rows(os, b.multiplicative());
  return os.str();
}

std::string format_group(const grp::FiniteGroup& g) {
  std::ostringstream os;
  os << "order " << g.order() << '\n' << "table\n";
  write_rows(os, g);
  return os.str();
}

SkewBrace parse_brace(const std::string& text) {
  LineReader r(text);
  const std::size_t n = parse_order(r);
  expect_keyword(r, "add");
  auto add = parse_rows(r, n);
  expect_keyword(r, "mul");
  auto mul = parse_rows(r, n);
  expect_end(r);
  grp::FiniteGroup ga, gm;
  try {
    ga = grp::from_flat(n, std::move(add));
  } catch (const Error& e) {
    throw Error(e.code(), std::string("additive table: ") + e.what(), e.witness(), "add");
  }
  try {
    gm = grp::from_flat(n, std::move(mul));
  } catch (const Error& e) {
    throw Error(e.code(), std::string("multiplicative table: ") + e.what(), e.witness(), "mul");
  }
  return skb::make_skew_brace(std::move(ga), std::move(gm));
}

grp::FiniteGroup parse_group(const std::string& text) {
  LineReader r(text);
  const std::size_t n = parse_order(r);
  expect_keyword(r, "table");
  auto flat = parse_rows(r, n);
  expect_end(r);
  return grp::from_flat(n, std::move(flat));
}

void save_brace(const CatalogEntry& entry, const std::filesystem::path& path) {
  write_file(path, format_brace(entry.brace));
}

CatalogEntry load_brace(const std::filesystem::path& path) {
  return {path.stem().string(), parse_brace(read_file(path)), {}, ""};
}

void save_group(const grp::FiniteGroup& g, const std::filesystem::path& path) { write_file(path, format_group(g)); }

grp::FiniteGroup load_group(const std::filesystem::path& path) { return parse_group(read_file(path)); }

}  // namespace skewalg::atlas
