#include "saito/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>

#include "saito/errors.hpp"

namespace saito {

namespace {

struct ParsedMonomial {
  Rational coefficient = 1;
  std::map<int, std::int64_t> factors;  // variable (1-based) -> exponent
};

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::Syntax, what + " at position " + std::to_string(pos));
}

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        positions_.push_back(i);
      }
    }
  }

  std::vector<ParsedMonomial> parse() {
    std::vector<ParsedMonomial> out;
    if (chars_.empty()) syntax_error(0, "empty polynomial");
    out.push_back(monomial());
    while (!at_end()) {
      expect('+');
      out.push_back(monomial());
    }
    return out;
  }

 private:
  bool at_end() const { return i_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[i_]; }
  std::size_t pos() const { return at_end() ? (positions_.empty() ? 0 : positions_.back() + 1) : positions_[i_]; }

  void expect(char c) {
    if (peek() != c) syntax_error(pos(), std::string("expected '") + c + "'");
    ++i_;
  }

  std::int64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) syntax_error(pos(), "expected digits");
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > (std::int64_t{1} << 40)) syntax_error(pos(), "number too large");
      ++i_;
    }
    return value;
  }

  ParsedMonomial monomial() {
    ParsedMonomial m;
    const char c = peek();
    bool need_factor = true;
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos();
      std::int64_t sign = 1;
      if (c == '-') {
        sign = -1;
        ++i_;
      }
      BigInt num = number();
      BigInt den = 1;
      if (peek() == '/') {
        ++i_;
        den = number();
        if (den == 0) syntax_error(start, "zero denominator");
      }
      m.coefficient = Rational(num * sign, den);
      if (m.coefficient == 0) syntax_error(start, "zero coefficient");
      if (peek() != '*') return m;
      ++i_;
    }
    while (need_factor) {
      const std::size_t start = pos();
      expect('x');
      const std::int64_t var = number();
      if (var < 1) syntax_error(start, "variable index must be positive");
      std::int64_t exponent = 1;
      if (peek() == '^') {
        ++i_;
        exponent = number();
        if (exponent < 1) syntax_error(start, "exponent must be positive");
      }
      if (!m.factors.emplace(static_cast<int>(var), exponent).second)
        syntax_error(start, "repeated variable in monomial");
      need_factor = peek() == '*';
      if (need_factor) ++i_;
    }
    return m;
  }

  std::vector<char> chars_;
  std::vector<std::size_t> positions_;
  std::size_t i_ = 0;
};

struct Decomposition {
  std::vector<AtomicBlock> blocks;
  std::vector<std::size_t> lead_row;  // row whose leading variable is v
};

Decomposition decompose(const ExponentMatrix& e) {
  const std::size_t n = e.variables();
  if (e.monomials() != n)
    throw Error(ErrorCode::NotInvertible,
                std::to_string(e.monomials()) + " monomials in " + std::to_string(n) + " variables");
  struct Option {
    int lead;
    int tail;
  };
  std::vector<std::vector<Option>> options(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<int> support;
    for (std::size_t j = 0; j < n; ++j)
      if (e.exponents(r, j) != 0) support.push_back(static_cast<int>(j));
    if (support.size() == 1) {
      options[r].push_back({support[0], -1});
    } else if (support.size() == 2) {
      const int a = support[0], b = support[1];
      if (e.exponents(r, static_cast<std::size_t>(b)) == 1) options[r].push_back({a, b});
      if (e.exponents(r, static_cast<std::size_t>(a)) == 1) options[r].push_back({b, a});
    }
    // Keep an aligned input aligned.
    std::stable_sort(options[r].begin(), options[r].end(), [r](const Option& x, const Option& y) {
      return (x.lead == static_cast<int>(r)) > (y.lead == static_cast<int>(r));
    });
    if (options[r].empty())
      throw Error(ErrorCode::NotInvertible, "monomial " + std::to_string(r + 1) +
                                                " is neither a power nor of the form x^p*y");
  }

  std::vector<int> lead_used(n, -1), tail_used(n, -1);
  std::vector<Option> chosen(n);
  auto search = [&](auto&& self, std::size_t r) -> bool {
    if (r == n) return true;
    for (const Option& o : options[r]) {
      if (lead_used[static_cast<std::size_t>(o.lead)] >= 0) continue;
      if (o.tail >= 0 && tail_used[static_cast<std::size_t>(o.tail)] >= 0) continue;
      lead_used[static_cast<std::size_t>(o.lead)] = static_cast<int>(r);
      if (o.tail >= 0) tail_used[static_cast<std::size_t>(o.tail)] = static_cast<int>(r);
      chosen[r] = o;
      if (self(self, r + 1)) return true;
      lead_used[static_cast<std::size_t>(o.lead)] = -1;
      if (o.tail >= 0) tail_used[static_cast<std::size_t>(o.tail)] = -1;
    }
    return false;
  };
  if (!search(search, 0))
    throw Error(ErrorCode::NotInvertible, "no chain/loop decomposition");

  Decomposition d;
  std::vector<int> tail_of(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    d.lead_row.push_back(static_cast<std::size_t>(lead_used[v]));
    tail_of[v] = chosen[static_cast<std::size_t>(lead_used[v])].tail;
  }
  std::vector<bool> seen(n, false);
  auto walk = [&](int start, BlockKind kind) {
    AtomicBlock block;
    block.kind = kind;
    int v = start;
    while (v >= 0 && !seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      block.variables.push_back(v);
      block.exponents.push_back(
          e.exponents(d.lead_row[static_cast<std::size_t>(v)], static_cast<std::size_t>(v)));
      v = tail_of[static_cast<std::size_t>(v)];
    }
    d.blocks.push_back(std::move(block));
  };
  for (std::size_t v = 0; v < n; ++v)
    if (tail_used[v] < 0) walk(static_cast<int>(v), BlockKind::Chain);
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) walk(static_cast<int>(v), BlockKind::Loop);
  std::sort(d.blocks.begin(), d.blocks.end(), [](const AtomicBlock& a, const AtomicBlock& b) {
    return *std::min_element(a.variables.begin(), a.variables.end()) <
           *std::min_element(b.variables.begin(), b.variables.end());
  });
  return d;
}

void check_degenerate(const std::vector<AtomicBlock>& blocks) {
  for (const auto& b : blocks) {
    if (b.kind != BlockKind::Loop) continue;
    if (std::all_of(b.exponents.begin(), b.exponents.end(), [](std::int64_t p) { return p == 1; }))
      throw Error(ErrorCode::DegenerateLoop, "loop through x" + std::to_string(b.variables[0] + 1) +
                                                 " has all exponents equal to 1");
  }
}

std::string monomial_to_string(const Rational& c, const std::vector<std::int64_t>& exps,
                               const std::vector<int>& names) {
  std::string out;
  if (c != 1) out = to_string(c);
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(names[j]);
    if (exps[j] != 1) out += "^" + std::to_string(exps[j]);
  }
  return out.empty() ? "1" : out;
}

void sort_monomials(std::vector<std::vector<std::int64_t>>& monomials,
                    std::vector<Rational>& coefficients) {
  std::vector<std::size_t> order(monomials.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return monomials[a] > monomials[b]; });
  std::vector<std::vector<std::int64_t>> m;
  std::vector<Rational> c;
  for (std::size_t i : order) {
    m.push_back(std::move(monomials[i]));
    c.push_back(std::move(coefficients[i]));
  }
  monomials = std::move(m);
  coefficients = std::move(c);
}

}  // namespace

std::string ExponentMatrix::to_string() const {
  std::vector<int> names(variables());
  std::iota(names.begin(), names.end(), 1);
  std::string out;
  for (std::size_t r = 0; r < monomials(); ++r) {
    if (r) out += "+";
    out += monomial_to_string(coefficients[r], exponents.row(r), names);
  }
  return out;
}

ExponentMatrix parse_polynomial(std::string_view text) {
  const auto monomials = PolynomialParser(text).parse();
  int n = 0;
  for (const auto& m : monomials)
    for (const auto& [var, exp] : m.factors) n = std::max(n, var);
  ExponentMatrix e;
  e.exponents = IntMatrix(monomials.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < monomials.size(); ++r) {
    for (const auto& [var, exp] : monomials[r].factors)
      e.exponents(r, static_cast<std::size_t>(var - 1)) = exp;
    e.coefficients.push_back(monomials[r].coefficient);
    for (std::size_t q = 0; q < r; ++q)
      if (e.exponents.row(q) == e.exponents.row(r))
        throw Error(ErrorCode::RepeatedMonomial, "monomial " + std::to_string(r + 1) +
                                                     " repeats monomial " + std::to_string(q + 1));
  }
  return e;
}

ExponentMatrix from_exponents(const std::vector<std::vector<std::int64_t>>& rows) {
  ExponentMatrix e;
  e.exponents = IntMatrix::from_rows(rows);
  e.coefficients.assign(rows.size(), Rational(1));
  return e;
}

std::vector<AtomicBlock> decompose_blocks(const ExponentMatrix& e) { return decompose(e).blocks; }

std::vector<AtomicBlock> validate_invertible(const ExponentMatrix& e) {
  auto blocks = decompose_blocks(e);
  check_degenerate(blocks);
  return blocks;
}

ExponentMatrix transpose(const ExponentMatrix& e) {
  ExponentMatrix t;
  t.exponents = e.exponents.transposed();
  t.coefficients.assign(t.exponents.rows(), Rational(1));
  return t;
}

std::vector<Rational> weights(const ExponentMatrix& e) {
  if (!e.exponents.is_square()) throw Error(ErrorCode::SingularMatrix, "matrix is not square");
  return solve(e.exponents, std::vector<Rational>(e.monomials(), Rational(1)));
}

InvertiblePolynomial::InvertiblePolynomial(const ExponentMatrix& e) {
  const Decomposition d = decompose(e);
  check_degenerate(d.blocks);
  const std::size_t n = e.variables();
  matrix_.exponents = IntMatrix(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < n; ++j) matrix_.exponents(v, j) = e.exponents(d.lead_row[v], j);
    matrix_.coefficients.push_back(e.coefficients[d.lead_row[v]]);
  }
  blocks_ = d.blocks;
}

InvertiblePolynomial InvertiblePolynomial::parse(std::string_view text) {
  return InvertiblePolynomial(parse_polynomial(text));
}

InvertiblePolynomial InvertiblePolynomial::transposed() const {
  return InvertiblePolynomial(transpose(matrix_));
}

IntMatrix RestrictedPolynomial::matrix() const {
  IntMatrix m(monomials.size(), classes.size());
  for (std::size_t r = 0; r < monomials.size(); ++r)
    for (std::size_t j = 0; j < classes.size(); ++j) m(r, j) = monomials[r][j];
  return m;
}

std::string RestrictedPolynomial::to_string() const {
  if (monomials.empty()) return "0";
  std::vector<int> names;
  for (const auto& c : classes) names.push_back(c.front() + 1);
  std::string out;
  for (std::size_t r = 0; r < monomials.size(); ++r) {
    if (r) out += "+";
    out += monomial_to_string(coefficients[r], monomials[r], names);
  }
  return out;
}

RestrictedPolynomial restrict_to(const ExponentMatrix& e, const IndexSet& set) {
  RestrictedPolynomial out;
  out.support = set;
  for (int i : set) out.classes.push_back({i});
  std::vector<bool> inside(e.variables(), false);
  for (int i : set) inside[static_cast<std::size_t>(i)] = true;
  for (std::size_t r = 0; r < e.monomials(); ++r) {
    bool supported = true;
    for (std::size_t j = 0; j < e.variables(); ++j)
      if (e.exponents(r, j) != 0 && !inside[j]) supported = false;
    if (!supported) continue;
    std::vector<std::int64_t> exps;
    for (int i : set) exps.push_back(e.exponents(r, static_cast<std::size_t>(i)));
    out.monomials.push_back(std::move(exps));
    out.coefficients.push_back(e.coefficients[r]);
  }
  sort_monomials(out.monomials, out.coefficients);
  out.full = out.monomials.size() == set.size();
  return out;
}

bool preserves_polynomial(const ExponentMatrix& e, const Permutation& p) {
  std::map<std::vector<std::int64_t>, Rational> terms;
  for (std::size_t r = 0; r < e.monomials(); ++r) terms.emplace(e.exponents.row(r), e.coefficients[r]);
  for (const auto& [exps, c] : terms) {
    std::vector<std::int64_t> image(exps.size());
    for (std::size_t j = 0; j < exps.size(); ++j)
      image[static_cast<std::size_t>(p(static_cast<int>(j)))] = exps[j];
    auto it = terms.find(image);
    if (it == terms.end() || it->second != c) return false;
  }
  return true;
}

RestrictedPolynomial diagonal_restrict(const ExponentMatrix& e, const IndexSet& set,
                                       const PermGroup& t) {
  if (!t.preserves(set))
    throw Error(ErrorCode::NotPreserved, "group does not preserve " + index_set_to_string(set));
  const RestrictedPolynomial base = restrict_to(e, set);
  // Check invariance of f^I on the full coordinate vectors.
  ExponentMatrix fi;
  fi.exponents = IntMatrix(base.monomials.size(), e.variables());
  for (std::size_t r = 0; r < base.monomials.size(); ++r)
    for (std::size_t k = 0; k < set.size(); ++k)
      fi.exponents(r, static_cast<std::size_t>(set[k])) = base.monomials[r][k];
  fi.coefficients = base.coefficients;
  for (const auto& g : t.generators())
    if (!preserves_polynomial(fi, g))
      throw Error(ErrorCode::NotPreserved, "group does not preserve the restriction to " +
                                               index_set_to_string(set));

  RestrictedPolynomial out;
  out.support = set;
  out.classes = orbits(t, set);
  std::vector<std::size_t> class_of(e.variables(), 0);
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    for (int i : out.classes[c]) class_of[static_cast<std::size_t>(i)] = c;
  std::map<std::vector<std::int64_t>, Rational> merged;
  for (std::size_t r = 0; r < base.monomials.size(); ++r) {
    std::vector<std::int64_t> exps(out.classes.size(), 0);
    for (std::size_t k = 0; k < set.size(); ++k)
      exps[class_of[static_cast<std::size_t>(set[k])]] += base.monomials[r][k];
    merged[exps] += base.coefficients[r];
  }
  for (auto& [exps, c] : merged) {
    if (c == 0) continue;
    out.monomials.push_back(exps);
    out.coefficients.push_back(c);
  }
  sort_monomials(out.monomials, out.coefficients);
  out.full = out.monomials.size() == out.classes.size();
  return out;
}

BlockActionReport check_S_invariance(const ExponentMatrix& e,
                                     const std::vector<AtomicBlock>& blocks,
                                     const PermGroup& s) {
  for (const auto& g : s.generators())
    if (!preserves_polynomial(e, g))
      throw Error(ErrorCode::NotInvariant, g.to_cycles() + " does not preserve the polynomial");

  const std::size_t n = e.variables();
  std::vector<std::size_t> block_of(n), position(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t j = 0; j < blocks[b].size(); ++j) {
      block_of[static_cast<std::size_t>(blocks[b].variables[j])] = b;
      position[static_cast<std::size_t>(blocks[b].variables[j])] = j;
    }
  auto image_block = [&](const Permutation& p, std::size_t b) {
    const std::size_t target = block_of[static_cast<std::size_t>(p(blocks[b].variables[0]))];
    for (int v : blocks[b].variables)
      if (block_of[static_cast<std::size_t>(p(v))] != target)
        throw Error(ErrorCode::NotInvariant, p.to_cycles() + " does not map blocks to blocks");
    return target;
  };

  BlockActionReport report;
  std::vector<bool> done(blocks.size(), false);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (done[b]) continue;
    BlockOrbit orbit;
    orbit.blocks.push_back(b);
    done[b] = true;
    for (std::size_t k = 0; k < orbit.blocks.size(); ++k)
      for (const auto& g : s.generators()) {
        const std::size_t c = image_block(g, orbit.blocks[k]);
        if (!done[c]) {
          done[c] = true;
          orbit.blocks.push_back(c);
        }
      }
    std::sort(orbit.blocks.begin(), orbit.blocks.end());

    const AtomicBlock& block = blocks[b];
    const std::size_t m = block.size();
    std::size_t period = m;
    for (const auto& p : s.elements()) {
      if (image_block(p, b) != b) continue;
      const std::size_t shift = (position[static_cast<std::size_t>(p(block.variables[0]))]) % m;
      bool rotation = true, flip = true;
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t to = position[static_cast<std::size_t>(p(block.variables[j]))];
        if (to != (j + shift) % m) rotation = false;
        if (to != (shift + m - j) % m) flip = false;
      }
      if (rotation && shift == 0) continue;
      if (block.kind == BlockKind::Chain)
        throw Error(ErrorCode::NotInvariant, p.to_cycles() + " moves variables inside a chain");
      if (!rotation) {
        if (flip)
          throw Error(ErrorCode::FlipSymmetry,
                      p.to_cycles() + " reflects the loop through x" +
                          std::to_string(block.variables[0] + 1));
        throw Error(ErrorCode::NotInvariant, p.to_cycles() + " does not act on a loop by rotation");
      }
      period = std::gcd(period, shift);
    }
    if (period != m) {
      for (std::size_t j = 0; j < m; ++j)
        if (block.exponents[j] != block.exponents[(j + period) % m])
          throw Error(ErrorCode::NotInvariant, "rotation does not preserve loop exponents");
      orbit.type = BlockActionType::Second;
      orbit.period = period;
      orbit.rotation_order = m / period;
    }
    report.orbits.push_back(std::move(orbit));
  }
  return report;
}

BlockActionReport check_S_invariance(const InvertiblePolynomial& f, const PermGroup& s) {
  return check_S_invariance(f.matrix(), f.blocks(), s);
}

}  // namespace saito
