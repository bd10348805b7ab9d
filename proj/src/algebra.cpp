#include "skewalg/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace skewalg::nalg {

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw Error(Errc::ParseError, "not a rational: '" + text + "'");
    return boost::multiprecision::cpp_int(s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text, true));
  const auto num = parse_int(text.substr(0, slash), true);
  const auto den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

StructureAlgebra make_algebra(std::size_t dim, std::vector<Entry> product, std::optional<std::vector<Entry>> bracket) {
  auto normalise = [dim](std::vector<Entry>& entries, const char* what) {
    for (const auto& e : entries)
      if (e.i >= dim || e.j >= dim || e.k >= dim)
        throw Error(Errc::IndexOutOfRange,
                    std::string(what) + " entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                        std::to_string(e.k) + ") outside dimension " + std::to_string(dim),
                    {e.i, e.j, e.k});
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (std::size_t t = 1; t < entries.size(); ++t)
      if (std::tie(entries[t].i, entries[t].j, entries[t].k) ==
          std::tie(entries[t - 1].i, entries[t - 1].j, entries[t - 1].k))
        throw Error(Errc::DuplicateEntry,
                    std::string(what) + " entry (" + std::to_string(entries[t].i) + "," +
                        std::to_string(entries[t].j) + "," + std::to_string(entries[t].k) + ") given twice",
                    {entries[t].i, entries[t].j, entries[t].k});
    std::erase_if(entries, [](const Entry& e) { return e.coeff == 0; });
  };
  auto densify = [dim](const std::vector<Entry>& entries) {
    std::vector<Vec> table(dim * dim, Vec(dim));
    for (const auto& e : entries) table[e.i * dim + e.j][e.k] = e.coeff;
    return table;
  };

  normalise(product, "product");
  if (bracket) normalise(*bracket, "bracket");
  StructureAlgebra a;
  a.dim_ = dim;
  a.prod_ = densify(product);
  a.brk_ = densify(bracket ? *bracket : std::vector<Entry>{});
  a.product_ = std::move(product);
  a.bracket_ = std::move(bracket);
  return a;
}

Vec basis(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

namespace {

Vec bilinear(std::size_t dim, const Vec& u, const Vec& v, auto&& table) {
  if (u.size() != dim || v.size() != dim)
    throw Error(Errc::DimensionMismatch, "vectors must have length " + std::to_string(dim), {u.size(), v.size()});
  Vec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j] == 0) continue;
      const Rational c = u[i] * v[j];
      const Vec& t = table(i, j);
      for (std::size_t k = 0; k < dim; ++k)
        if (t[k] != 0) out[k] += c * t[k];
    }
  }
  return out;
}

Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::vector<Element> triple(std::size_t i, std::size_t j, std::size_t k) {
  return {Element(i), Element(j), Element(k)};
}

}  // namespace

Vec multiply(const StructureAlgebra& a, const Vec& u, const Vec& v) {
  return bilinear(a.dim(), u, v, [&a](std::size_t i, std::size_t j) -> const Vec& { return a.basis_product(i, j); });
}

Vec bracket(const StructureAlgebra& a, const Vec& u, const Vec& v) {
  return bilinear(a.dim(), u, v, [&a](std::size_t i, std::size_t j) -> const Vec& { return a.basis_bracket(i, j); });
}

Vec associator(const StructureAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
  return multiply(a, x, multiply(a, y, z)) - multiply(a, multiply(a, x, y), z);
}

Verdict is_pre_lie(const StructureAlgebra& a) {
  Verdict v{"pre-Lie"};
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto x = basis(d, i), y = basis(d, j), z = basis(d, k);
        if (associator(a, x, y, z) != associator(a, y, x, z)) {
          v.fail("triple", triple(i, j, k));
          return v;
        }
      }
  return v;
}

Verdict is_novikov(const StructureAlgebra& a) {
  Verdict v{"Novikov"};
  if (auto pre = is_pre_lie(a); !pre) v.fail("pre-lie", pre.witnesses[0].elements);
  const std::size_t d = a.dim();
  // every failing triple of right-commutativity is listed
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto x = basis(d, i), y = basis(d, j), z = basis(d, k);
        if (multiply(a, multiply(a, x, y), z) != multiply(a, multiply(a, x, z), y))
          v.fail("right-commutative", triple(i, j, k));
      }
  return v;
}

Verdict is_post_lie(const StructureAlgebra& a) {
  Verdict v{"post-Lie"};
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!is_zero(bracket(a, basis(d, i), basis(d, j)) + bracket(a, basis(d, j), basis(d, i)))) {
        v.fail("antisymmetry", {Element(i), Element(j)});
        i = d;
        break;
      }
  bool jacobi = true, post1 = true, post2 = true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto x = basis(d, i), y = basis(d, j), z = basis(d, k);
        if (jacobi && !is_zero(bracket(a, x, bracket(a, y, z)) + bracket(a, y, bracket(a, z, x)) +
                               bracket(a, z, bracket(a, x, y)))) {
          v.fail("jacobi", triple(i, j, k));
          jacobi = false;
        }
        if (post1 && multiply(a, x, bracket(a, y, z)) !=
                         bracket(a, multiply(a, x, y), z) + bracket(a, y, multiply(a, x, z))) {
          v.fail("post1", triple(i, j, k));
          post1 = false;
        }
        if (post2 && multiply(a, bracket(a, x, y), z) != associator(a, x, y, z) - associator(a, y, x, z)) {
          v.fail("post2", triple(i, j, k));
          post2 = false;
        }
      }
  return v;
}

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

struct Terms {
  Vec lhs;
  std::array<Vec, 8> cols;
};

Terms identity_terms(const StructureAlgebra& a, Side side, const Vec& x, const Vec& y, const Vec& z) {
  auto m = [&a](const Vec& p, const Vec& q) { return multiply(a, p, q); };
  Terms t;
  t.lhs = side == Side::Left ? m(x, m(y, z)) : m(m(y, z), x);
  const Vec xy = m(x, y), yx = m(y, x), xz = m(x, z), zx = m(z, x);
  t.cols = {m(xy, z), m(yx, z), m(z, xy), m(z, yx), m(xz, y), m(zx, y), m(y, xz), m(y, zx)};
  return t;
}

Vec combine(const std::array<Vec, 8>& cols, const std::array<Rational, 8>& coeffs) {
  Vec out(cols[0].size());
  for (std::size_t t = 0; t < 8; ++t)
    if (coeffs[t] != 0)
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += coeffs[t] * cols[t][k];
  return out;
}

}  // namespace

std::vector<Equation> identity_equations(const StructureAlgebra& a, Side side) {
  const std::size_t d = a.dim();
  std::vector<Equation> eqs;
  eqs.reserve(d * d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Terms t = identity_terms(a, side, basis(d, i), basis(d, j), basis(d, k));
        for (std::size_t c = 0; c < d; ++c) {
          Equation e{{i, j, k}, c, {}, t.lhs[c]};
          for (std::size_t col = 0; col < 8; ++col) e.coeffs[col] = t.cols[col][c];
          eqs.push_back(std::move(e));
        }
      }
  return eqs;
}

namespace {

// Reduced row echelon form over 8 unknowns, built one equation at a time.
class Echelon {
 public:
  // Returns false if the equation contradicts the rows accumulated so far.
  bool add(std::array<Rational, 8> coeffs, Rational rhs) {
    for (const auto& r : rows_) {
      const Rational f = coeffs[r.pivot];
      if (f == 0) continue;
      for (std::size_t c = 0; c < 8; ++c) coeffs[c] -= f * r.coeffs[c];
      rhs -= f * r.rhs;
    }
    std::size_t pivot = 8;
    for (std::size_t c = 0; c < 8 && pivot == 8; ++c)
      if (coeffs[c] != 0) pivot = c;
    if (pivot == 8) return rhs == 0;
    const Rational inv = 1 / coeffs[pivot];
    for (auto& q : coeffs) q *= inv;
    rhs *= inv;
    for (auto& r : rows_) {
      const Rational f = r.coeffs[pivot];
      if (f == 0) continue;
      for (std::size_t c = 0; c < 8; ++c) r.coeffs[c] -= f * coeffs[c];
      r.rhs -= f * rhs;
    }
    rows_.push_back({pivot, coeffs, rhs});
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  std::array<Rational, 8> sample() const {
    std::array<Rational, 8> s{};
    for (const auto& r : rows_) s[r.pivot] = r.rhs;
    return s;
  }

 private:
  struct Row {
    std::size_t pivot;
    std::array<Rational, 8> coeffs;
    Rational rhs;
  };
  std::vector<Row> rows_;
};

// Multilinearity cross-check: the solved identity must also hold on random
// rational vectors, not only on basis triples.
void spot_check(const StructureAlgebra& a, Side side, const std::array<Rational, 8>& coeffs) {
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> dist(-3, 3);
  const std::size_t d = a.dim();
  auto random_vec = [&] {
    Vec v(d);
    for (auto& q : v) q = Rational(dist(rng), 1 + (dist(rng) + 3) % 3);
    return v;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Vec x = random_vec(), y = random_vec(), z = random_vec();
    const Terms t = identity_terms(a, side, x, y, z);
    if (t.lhs != combine(t.cols, coeffs))
      throw std::logic_error("internal fault: identity holds on basis triples but not on a random triple");
  }
}

}  // namespace

IdentitySolution solve_identity(const StructureAlgebra& a, Side side) {
  IdentitySolution sol;
  sol.side = side;
  const auto eqs = identity_equations(a, side);
  Echelon ech;
  std::optional<std::array<std::size_t, 3>> incremental;
  for (const auto& eq : eqs)
    if (!ech.add(eq.coeffs, eq.rhs) && !incremental) incremental = eq.triple;
  sol.consistent = !incremental;
  if (incremental) {
    // Prefer a block that is contradictory on its own: it certifies
    // infeasibility without reference to any other triple.
    const std::size_t d = a.dim();
    for (std::size_t start = 0; start < eqs.size(); start += d) {
      Echelon block;
      for (std::size_t c = 0; c < d; ++c)
        if (!block.add(eqs[start + c].coeffs, eqs[start + c].rhs)) {
          sol.certificates.push_back(eqs[start].triple);
          break;
        }
    }
    sol.witness = sol.certificates.empty() ? *incremental : sol.certificates.front();
  }
  sol.nullity = 8 - ech.rank();
  if (sol.consistent) {
    sol.sample = ech.sample();
    if (!zero_residual(a, side, *sol.sample))
      throw std::logic_error("internal fault: sample solution leaves a residual");
    spot_check(a, side, *sol.sample);
  }
  return sol;
}

bool zero_residual(const StructureAlgebra& a, Side side, const std::array<Rational, 8>& coeffs) {
  for (const auto& eq : identity_equations(a, side)) {
    Rational lhs = 0;
    for (std::size_t t = 0; t < 8; ++t) lhs += coeffs[t] * eq.coeffs[t];
    if (lhs != eq.rhs) return false;
  }
  return true;
}

AccessibilityVerdict accessibility_verdict(const StructureAlgebra& a) {
  return {solve_identity(a, Side::Left), solve_identity(a, Side::Right)};
}

StructureAlgebra build_i4() {
  return make_algebra(4, {{0, 1, 1, 1},
                          {0, 2, 2, 1},
                          {0, 3, 3, 1},
                          {0, 0, 0, 2},
                          {1, 1, 0, 1},
                          {2, 2, 0, 1},
                          {3, 3, 0, 1}});
}

std::array<Rational, 8> pre_lie_left_assignment() { return {1, -1, 0, 0, 0, 0, 1, 0}; }

std::string format_algebra(const StructureAlgebra& a) {
  std::ostringstream os;
  auto section = [&os](const char* name, const std::vector<Entry>& entries) {
    os << name << '\n';
    for (const auto& e : entries) os << e.i << ' ' << e.j << ' ' << e.k << ' ' << to_string(e.coeff) << '\n';
  };
  os << "dim " << a.dim() << '\n';
  section("product", a.product_entries());
  if (a.bracket_entries()) section("bracket", *a.bracket_entries());
  return os.str();
}

StructureAlgebra parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&lineno](const std::string& msg) {
    throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + msg, {lineno});
  };
  std::optional<std::size_t> dim;
  std::vector<Entry> product;
  std::optional<std::vector<Entry>> brk;
  std::vector<Entry>* current = nullptr;
  bool seen_product = false;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!dim) {
      if (tok.size() != 2 || tok[0] != "dim" || tok[1].find_first_not_of("0123456789") != std::string::npos ||
          std::stoul(tok[1]) == 0)
        fail("expected 'dim <d>'");
      dim = std::stoul(tok[1]);
      continue;
    }
    if (tok.size() == 1 && tok[0] == "product") {
      if (seen_product) fail("duplicate 'product' section");
      seen_product = true;
      current = &product;
      continue;
    }
    if (tok.size() == 1 && tok[0] == "bracket") {
      if (brk) fail("duplicate 'bracket' section");
      brk.emplace();
      current = &*brk;
      continue;
    }
    if (!current) fail("entry outside a section");
    if (tok.size() != 4) fail("expected '<i> <j> <k> <p>/<q>'");
    std::array<std::size_t, 3> idx{};
    for (std::size_t t = 0; t < 3; ++t) {
      if (tok[t].find_first_not_of("0123456789") != std::string::npos) fail("bad index '" + tok[t] + "'");
      idx[t] = std::stoul(tok[t]);
    }
    try {
      current->push_back({idx[0], idx[1], idx[2], parse_rational(tok[3])});
    } catch (const Error&) {
      fail("bad coefficient '" + tok[3] + "'");
    }
  }
  ++lineno;
  if (!dim) fail("unexpected end of file, expected 'dim <d>'");
  if (!seen_product) fail("unexpected end of file, expected 'product'");
  return make_algebra(*dim, std::move(product), std::move(brk));
}

StructureAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string(), {0});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

void save_algebra(const StructureAlgebra& a, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string(), {0});
  out << format_algebra(a);
}

}  // namespace skewalg::nalg
