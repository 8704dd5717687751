#include "saito/diag_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "saito/errors.hpp"

namespace saito {

DiagonalElement::DiagonalElement(std::int64_t denominator, Storage numerators)
    : den_(denominator), num_(std::move(numerators)) {
  for (auto& a : num_) a = mod(a, den_);
}

DiagonalElement DiagonalElement::zero(std::size_t n, std::int64_t denominator) {
  return DiagonalElement(denominator, Storage(n, 0));
}

bool DiagonalElement::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](std::int64_t a) { return a == 0; });
}

DiagonalElement DiagonalElement::operator+(const DiagonalElement& o) const {
  Storage out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) {
    out[i] = num_[i] + o.num_[i];
    if (out[i] >= den_) out[i] -= den_;
  }
  DiagonalElement e;
  e.den_ = den_;
  e.num_ = std::move(out);
  return e;
}

DiagonalElement DiagonalElement::operator-() const {
  Storage out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out[i] = num_[i] == 0 ? 0 : den_ - num_[i];
  DiagonalElement e;
  e.den_ = den_;
  e.num_ = std::move(out);
  return e;
}

DiagonalElement DiagonalElement::operator-(const DiagonalElement& o) const { return *this + (-o); }

DiagonalElement DiagonalElement::times(std::int64_t k) const {
  Storage out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out[i] = num_[i] * k;
  return DiagonalElement(den_, std::move(out));
}

std::string DiagonalElement::to_string() const {
  if (is_zero()) return "0";
  std::int64_t g = den_;
  for (auto a : num_) g = std::gcd(g, a);
  const std::int64_t d = den_ / g;
  std::string out = "1/" + std::to_string(d) + "(";
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(num_[i] / g);
  }
  return out + ")";
}

DiagonalElement perm_act(const Permutation& s, const DiagonalElement& v) {
  DiagonalElement::Storage out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    out[static_cast<std::size_t>(s(static_cast<int>(j)))] = v.numerator(j);
  return DiagonalElement(v.denominator(), std::move(out));
}

// ---------------------------------------------------------------------------

std::shared_ptr<const DiagonalGroup> DiagonalGroup::create(const IntMatrix& e) {
  if (!e.is_square() || determinant(e) == 0)
    throw Error(ErrorCode::SingularMatrix, "exponent matrix is singular");
  std::shared_ptr<DiagonalGroup> g(new DiagonalGroup());
  g->matrix_ = e;
  const SmithForm snf = smith_normal_form(e);
  const auto invariants = snf.invariants();
  for (auto d : invariants) g->exponent_ = std::max(g->exponent_, d);
  const std::int64_t n_exp = g->exponent_;
  const std::size_t n = e.rows();
  std::vector<std::int64_t> orders;
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t d = invariants[k];
    if (d <= 1) continue;
    DiagonalElement::Storage num(n);
    for (std::size_t i = 0; i < n; ++i) num[i] = (n_exp / d) * snf.right(i, k);
    g->generators_.emplace_back(n_exp, std::move(num));
    g->invariants_.push_back(d);
  }
  std::vector<DiagonalElement> elements{DiagonalElement::zero(n, n_exp)};
  for (std::size_t k = 0; k < g->generators_.size(); ++k) {
    std::vector<DiagonalElement> next;
    next.reserve(elements.size() * static_cast<std::size_t>(g->invariants_[k]));
    for (const auto& x : elements) {
      DiagonalElement y = x;
      for (std::int64_t m = 0; m < g->invariants_[k]; ++m) {
        next.push_back(y);
        y = y + g->generators_[k];
      }
    }
    elements = std::move(next);
  }
  std::sort(elements.begin(), elements.end());
  g->elements_ = std::move(elements);
  if (BigInt(g->elements_.size()) != abs(determinant(e)))
    throw Error(ErrorCode::StructuralAssumptionViolated, "group order differs from |det E|");
  return g;
}

bool DiagonalGroup::contains(const DiagonalElement& v) const {
  if (v.denominator() != exponent_ || v.size() != n()) return false;
  for (std::size_t i = 0; i < n(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n(); ++j) s += matrix_(i, j) * v.numerator(j);
    if (mod(s, exponent_) != 0) return false;
  }
  return true;
}

std::optional<std::size_t> DiagonalGroup::index_of(const DiagonalElement& v) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
  if (it == elements_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t DiagonalGroup::require_index(const DiagonalElement& v) const {
  const auto idx = index_of(v);
  if (!idx) throw Error(ErrorCode::NotMember, v.to_string() + " is not in the group");
  return *idx;
}

DiagonalElement DiagonalGroup::from_rationals(const std::vector<Rational>& values) const {
  if (values.size() != n())
    throw Error(ErrorCode::NotMember, "element has " + std::to_string(values.size()) +
                                          " coordinates, expected " + std::to_string(n()));
  DiagonalElement::Storage num(n());
  for (std::size_t i = 0; i < n(); ++i) {
    const Rational scaled = values[i] * exponent_;
    if (denominator(scaled) != 1)
      throw Error(ErrorCode::NotMember,
                  "coordinate " + to_string(values[i]) + " has order not dividing the exponent");
    num[i] = to_int64(BigInt(numerator(scaled)) % exponent_);
  }
  DiagonalElement v(exponent_, std::move(num));
  if (!contains(v)) throw Error(ErrorCode::NotMember, v.to_string() + " is not a symmetry");
  return v;
}

DiagonalElement DiagonalGroup::grading_element() const {
  return from_rationals(solve(matrix_, std::vector<Rational>(n(), Rational(1))));
}

DiagonalElement DiagonalGroup::parse_element(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "J") return grading_element();
  if (s == "0") return zero();
  auto fail = [&]() -> DiagonalElement {
    throw Error(ErrorCode::Syntax, "expected 1/m(a1,...,an) or J, got '" + s + "'");
  };
  if (s.rfind("1/", 0) != 0) return fail();
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return fail();
  const std::string den_text = s.substr(2, open - 2);
  if (den_text.empty() || !std::all_of(den_text.begin(), den_text.end(), ::isdigit)) return fail();
  const std::int64_t den = std::stoll(den_text);
  if (den == 0) return fail();
  std::vector<Rational> values;
  std::size_t pos = open + 1;
  while (pos < s.size() - 1) {
    auto comma = s.find(',', pos);
    if (comma == std::string::npos || comma > s.size() - 1) comma = s.size() - 1;
    const std::string item = s.substr(pos, comma - pos);
    const bool ok = !item.empty() &&
                    std::all_of(item.begin() + (item[0] == '-' ? 1 : 0), item.end(), ::isdigit) &&
                    item != "-";
    if (!ok) return fail();
    values.emplace_back(std::stoll(item), den);
    pos = comma + 1;
  }
  return from_rationals(values);
}

// ---------------------------------------------------------------------------

DiagonalSubgroup::DiagonalSubgroup(DiagonalGroupPtr parent, std::vector<std::uint32_t> indices)
    : parent_(std::move(parent)), indices_(std::move(indices)) {}

DiagonalSubgroup DiagonalSubgroup::whole(DiagonalGroupPtr parent) {
  std::vector<std::uint32_t> all(parent->order());
  std::iota(all.begin(), all.end(), 0u);
  return DiagonalSubgroup(std::move(parent), std::move(all));
}

DiagonalSubgroup DiagonalSubgroup::trivial(DiagonalGroupPtr parent) {
  const auto zero = static_cast<std::uint32_t>(parent->require_index(parent->zero()));
  return DiagonalSubgroup(std::move(parent), {zero});
}

std::vector<DiagonalElement> DiagonalSubgroup::elements() const {
  std::vector<DiagonalElement> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(parent_->element(i));
  return out;
}

bool DiagonalSubgroup::contains_index(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), static_cast<std::uint32_t>(i));
}

bool DiagonalSubgroup::contains(const DiagonalElement& v) const {
  const auto idx = parent_->index_of(v);
  return idx && contains_index(*idx);
}

bool DiagonalSubgroup::is_subgroup_of(const DiagonalSubgroup& other) const {
  if (!(parent_->matrix() == other.parent_->matrix())) return false;
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

std::vector<bool> DiagonalSubgroup::mask() const {
  std::vector<bool> m(parent_->order(), false);
  for (auto i : indices_) m[i] = true;
  return m;
}

std::vector<DiagonalElement> DiagonalSubgroup::generators() const {
  std::vector<DiagonalElement> gens;
  std::vector<bool> span(parent_->order(), false);
  std::vector<std::uint32_t> span_list{static_cast<std::uint32_t>(parent_->require_index(parent_->zero()))};
  span[span_list[0]] = true;
  for (auto i : indices_) {
    if (span[i]) continue;
    const DiagonalElement& g = parent_->element(i);
    gens.push_back(g);
    // span + <g>
    std::vector<std::uint32_t> grown;
    for (auto s : span_list) {
      DiagonalElement x = parent_->element(s) + g;
      while (true) {
        const auto idx = static_cast<std::uint32_t>(parent_->require_index(x));
        if (span[idx]) break;
        span[idx] = true;
        grown.push_back(idx);
        x = x + g;
      }
    }
    span_list.insert(span_list.end(), grown.begin(), grown.end());
    if (span_list.size() == indices_.size()) break;
  }
  return gens;
}

std::string DiagonalSubgroup::to_string() const {
  const auto gens = generators();
  if (gens.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += gens[i].to_string();
  }
  return out;
}

DiagonalSubgroup DiagonalSubgroup::perm_act(const Permutation& s) const {
  std::vector<std::uint32_t> out;
  out.reserve(indices_.size());
  for (auto i : indices_)
    out.push_back(static_cast<std::uint32_t>(
        parent_->require_index(saito::perm_act(s, parent_->element(i)))));
  std::sort(out.begin(), out.end());
  return DiagonalSubgroup(parent_, std::move(out));
}

bool DiagonalSubgroup::is_invariant(const Permutation& s) const {
  for (const auto& g : generators())
    if (!contains(saito::perm_act(s, g))) return false;
  return true;
}

bool DiagonalSubgroup::is_invariant(const PermGroup& s) const {
  return std::all_of(s.generators().begin(), s.generators().end(),
                     [&](const Permutation& p) { return is_invariant(p); });
}

bool DiagonalSubgroup::operator==(const DiagonalSubgroup& o) const {
  if (parent_ == o.parent_) return indices_ == o.indices_;
  if (!parent_ || !o.parent_ || !(parent_->matrix() == o.parent_->matrix())) return false;
  return indices_ == o.indices_;
}

DiagonalSubgroup subgroup_generated(const DiagonalGroupPtr& g,
                                    const std::vector<DiagonalElement>& gens) {
  for (const auto& x : gens)
    if (!g->contains(x)) throw Error(ErrorCode::NotMember, x.to_string() + " is not in the group");
  std::vector<bool> seen(g->order(), false);
  std::vector<std::uint32_t> list{static_cast<std::uint32_t>(g->require_index(g->zero()))};
  seen[list[0]] = true;
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (const auto& x : gens) {
      const auto idx = static_cast<std::uint32_t>(g->require_index(g->element(list[k]) + x));
      if (!seen[idx]) {
        seen[idx] = true;
        list.push_back(idx);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return DiagonalSubgroup(g, std::move(list));
}

DiagonalSubgroup isotropy_on_stratum(const DiagonalSubgroup& h, const IndexSet& set) {
  std::vector<std::uint32_t> out;
  for (auto i : h.indices()) {
    const auto& v = h.parent()->element(i);
    if (std::all_of(set.begin(), set.end(),
                    [&](int j) { return v.numerator(static_cast<std::size_t>(j)) == 0; }))
      out.push_back(i);
  }
  return DiagonalSubgroup(h.parent(), std::move(out));
}

DiagonalSubgroup fixed_subgroup(const DiagonalSubgroup& h, const PermGroup& t) {
  std::vector<std::uint32_t> out;
  for (auto i : h.indices()) {
    const auto& v = h.parent()->element(i);
    if (std::all_of(t.generators().begin(), t.generators().end(),
                    [&](const Permutation& p) { return saito::perm_act(p, v) == v; }))
      out.push_back(i);
  }
  return DiagonalSubgroup(h.parent(), std::move(out));
}

Rational pairing(const DiagonalGroup& g, const DiagonalElement& v, const DiagonalElement& w) {
  if (!g.contains(v)) throw Error(ErrorCode::NotMember, v.to_string() + " is not in G_E");
  const std::size_t n = g.n();
  const std::int64_t den = g.exponent();
  if (w.size() != n || w.denominator() != den)
    throw Error(ErrorCode::NotMember, w.to_string() + " is not in the dual group");
  BigInt total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t c = 0;  // (E^T w)_i * den
    for (std::size_t j = 0; j < n; ++j) c += g.matrix()(j, i) * w.numerator(j);
    if (mod(c, den) != 0) throw Error(ErrorCode::NotMember, w.to_string() + " is not in the dual group");
    total += BigInt(v.numerator(i)) * (c / den);
  }
  BigInt r = total % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

DiagonalSubgroup annihilator(const DiagonalSubgroup& h, const DiagonalGroupPtr& dual) {
  if (!(dual->matrix() == h.parent()->matrix().transposed()))
    throw Error(ErrorCode::AmbientMismatch, "dual group is not built from the transpose");
  const auto gens = h.generators();
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < dual->order(); ++i) {
    const auto& w = dual->element(i);
    if (std::all_of(gens.begin(), gens.end(),
                    [&](const DiagonalElement& v) { return pairing(*h.parent(), v, w) == 0; }))
      out.push_back(static_cast<std::uint32_t>(i));
  }
  return DiagonalSubgroup(dual, std::move(out));
}

DiagonalSubgroup annihilator(const DiagonalSubgroup& h) {
  return annihilator(h, DiagonalGroup::create(h.parent()->matrix().transposed()));
}

}  // namespace saito
