#include "saito/burnside.hpp"

#include <algorithm>

#include "saito/report.hpp"

#include "saito/errors.hpp"

namespace saito {

std::shared_ptr<const SemidirectProduct> SemidirectProduct::create(DiagonalSubgroup g, PermGroup s,
                                                                   std::size_t bound) {
  if (g.parent()->n() != static_cast<std::size_t>(s.degree()))
    throw Error(ErrorCode::AmbientMismatch, "permutation degree differs from the torus dimension");
  if (g.order() * s.order() > bound)
    throw Error(ErrorCode::BoundExceeded, "|G x| S| = " + std::to_string(g.order() * s.order()) +
                                              " exceeds " + std::to_string(bound));
  std::shared_ptr<SemidirectProduct> out(new SemidirectProduct());
  const auto& parent = g.parent();
  for (const auto& sigma : s.generators())
    for (const auto& v : g.generators())
      if (!parent->contains(perm_act(sigma, v)) || !g.contains(perm_act(sigma, v)))
        throw Error(ErrorCode::NotPreserved, sigma.to_cycles() + " does not preserve G");
  out->stride_ = parent->order();
  out->table_.resize(s.order() * out->stride_);
  for (std::size_t k = 0; k < s.order(); ++k) {
    const Permutation& sigma = s.elements()[k];
    for (std::size_t x = 0; x < parent->order(); ++x) {
      const auto idx = parent->index_of(perm_act(sigma, parent->element(x)));
      if (!idx) throw Error(ErrorCode::NotPreserved, sigma.to_cycles() + " does not preserve G_E");
      out->table_[k * out->stride_ + x] = static_cast<std::uint32_t>(*idx);
    }
  }
  out->g_ = std::move(g);
  out->s_ = std::move(s);
  return out;
}

DiagonalSubgroup SemidirectProduct::act(std::size_t sigma, const DiagonalSubgroup& h) const {
  std::vector<std::uint32_t> out;
  out.reserve(h.order());
  for (auto x : h.indices()) out.push_back(act(sigma, x));
  std::sort(out.begin(), out.end());
  return DiagonalSubgroup(h.parent(), std::move(out));
}

DiagonalSubgroup SemidirectProduct::act(const Permutation& sigma, const DiagonalSubgroup& h) const {
  const auto idx = s_.index_of(sigma);
  if (!idx) throw Error(ErrorCode::NotMember, sigma.to_cycles() + " is not in S");
  return act(*idx, h);
}

SemidirectProduct::Element SemidirectProduct::multiply(const Element& a, const Element& b) const {
  return {a.v + perm_act(a.sigma, b.v), a.sigma * b.sigma};
}

SemidirectProduct::Element SemidirectProduct::inverse(const Element& a) const {
  const Permutation inv = a.sigma.inverse();
  return {-perm_act(inv, a.v), inv};
}

SemidirectProduct::Element SemidirectProduct::identity() const {
  return {diagonal()->zero(), Permutation::identity(s_.degree())};
}

bool SemidirectProduct::same_as(const SemidirectProduct& o) const {
  return this == &o || (g_ == o.g_ && s_ == o.s_);
}

// ---------------------------------------------------------------------------

std::string HTClass::orbit_type() const {
  const std::string hs = h.is_trivial() ? "{0}" : "<" + h.to_string() + ">";
  return "[G⋊S/" + hs + "⋊" + t.to_string() + "]";
}

void check_well_formed(const SemidirectProduct& g, const DiagonalSubgroup& h, const PermGroup& t) {
  if (!h.is_subgroup_of(g.g())) throw Error(ErrorCode::NotSubgroup, "H is not contained in G");
  if (!t.is_subgroup_of(g.s())) throw Error(ErrorCode::NotSubgroup, "T is not contained in S");
  if (!h.is_invariant(t)) throw Error(ErrorCode::NotSubgroup, "T does not preserve H");
}

HTClass canonicalize(const SemidirectProduct& g, const DiagonalSubgroup& h, const PermGroup& t) {
  const auto& s = g.s().elements();
  std::vector<Permutation> best_t;
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Permutation inv = s[k].inverse();
    std::vector<Permutation> conj;
    conj.reserve(t.order());
    for (const auto& p : t.elements()) conj.push_back(s[k] * p * inv);
    std::sort(conj.begin(), conj.end());
    if (candidates.empty() || conj < best_t) {
      best_t = std::move(conj);
      candidates = {k};
    } else if (conj == best_t) {
      candidates.push_back(k);
    }
  }
  DiagonalSubgroup best_h;
  bool first = true;
  for (std::size_t k : candidates) {
    DiagonalSubgroup image = g.act(k, h);
    if (first || image < best_h) best_h = std::move(image);
    first = false;
  }
  return {std::move(best_h), PermGroup::from_closed_elements(t.degree(), std::move(best_t))};
}

std::optional<Permutation> ht_conjugate_test(const SemidirectProduct& g, const HTClass& a,
                                             const HTClass& b) {
  if (a.h.order() != b.h.order() || a.t.order() != b.t.order()) return std::nullopt;
  const auto& s = g.s().elements();
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!(a.t.conjugated_by(s[k]) == b.t)) continue;
    if (g.act(k, a.h) == b.h) return s[k];
  }
  return std::nullopt;
}

std::int64_t mark(const SemidirectProduct& g, const HTClass& k_prime, const HTClass& k) {
  const auto& parent = g.diagonal();
  const auto& s = g.s();
  const std::size_t n_s = s.order();
  const auto h_gens = k.h.generators();
  std::vector<std::uint32_t> h_gen_idx;
  for (const auto& x : h_gens) h_gen_idx.push_back(static_cast<std::uint32_t>(parent->require_index(x)));
  const auto& t_gens = k.t.generators();
  std::vector<std::size_t> t_gen_idx;
  for (const auto& p : t_gens) t_gen_idx.push_back(*s.index_of(p));

  const std::vector<bool> h_prime = k_prime.h.mask();
  const auto& g_indices = g.g().indices();
  // diff[j][v] = t_j(v) - v
  std::vector<std::vector<std::uint32_t>> diff(t_gen_idx.size());
  for (std::size_t j = 0; j < t_gen_idx.size(); ++j) {
    diff[j].reserve(g_indices.size());
    for (auto v : g_indices) {
      const auto image = g.act(t_gen_idx[j], v);
      diff[j].push_back(static_cast<std::uint32_t>(
          parent->require_index(parent->element(image) - parent->element(v))));
    }
  }

  std::int64_t total = 0;
  std::vector<bool> moved(parent->order(), false);
  for (std::size_t si = 0; si < n_s; ++si) {
    const Permutation& sigma = s.elements()[si];
    const Permutation inv = sigma.inverse();
    const std::size_t inv_idx = *s.index_of(inv);
    bool ok = true;
    for (const auto& t : t_gens)
      if (!k_prime.t.contains(inv * t * sigma)) {
        ok = false;
        break;
      }
    for (std::size_t j = 0; ok && j < h_gen_idx.size(); ++j)
      if (!h_prime[g.act(inv_idx, h_gen_idx[j])]) ok = false;
    if (!ok) continue;
    if (diff.empty()) {
      total += static_cast<std::int64_t>(g_indices.size());
      continue;
    }
    std::fill(moved.begin(), moved.end(), false);
    for (auto x : k_prime.h.indices()) moved[g.act(si, x)] = true;
    for (std::size_t v = 0; v < g_indices.size(); ++v) {
      bool fixed = true;
      for (const auto& d : diff)
        if (!moved[d[v]]) {
          fixed = false;
          break;
        }
      if (fixed) ++total;
    }
  }
  const auto size = static_cast<std::int64_t>(k_prime.order());
  if (total % size != 0)
    throw Error(ErrorCode::StructuralAssumptionViolated, "fixed point count is not a multiple of |K'|");
  return total / size;
}

// ---------------------------------------------------------------------------

void BurnsideElement::check_ambient(const BurnsideElement& o) const {
  if (!ambient_->same_as(*o.ambient_))
    throw Error(ErrorCode::AmbientMismatch, "Burnside elements over different groups");
}

void BurnsideElement::add(const DiagonalSubgroup& h, const PermGroup& t, const BigInt& c) {
  if (c == 0) return;
  check_well_formed(*ambient_, h, t);
  HTClass key = canonicalize(*ambient_, h, t);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BurnsideElement::coefficient(const HTClass& k) const {
  const HTClass key = canonicalize(*ambient_, k.h, k.t);
  auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
  check_ambient(o);
  BurnsideElement out = *this;
  for (const auto& [k, c] : o.terms_) {
    auto it = out.terms_.find(k);
    if (it == out.terms_.end()) {
      out.terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement& o) const {
  return *this + o.scaled(-1);
}

BurnsideElement BurnsideElement::scaled(const BigInt& c) const {
  BurnsideElement out(ambient_);
  if (c == 0) return out;
  for (const auto& [k, a] : terms_) out.terms_.emplace(k, a * c);
  return out;
}

HTClass whole_class(const SemidirectProduct& g) { return canonicalize(g, g.g(), g.s()); }

BurnsideElement BurnsideElement::reduced() const {
  BurnsideElement out = *this;
  out.add(whole_class(*ambient_), -1);
  return out;
}

std::string BurnsideElement::to_jsonl() const {
  std::string out;
  for (const auto& item : to_json(*this)) out += item.dump() + "\n";
  return out;
}

std::string BurnsideElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    const BigInt a = c < 0 ? BigInt(-c) : c;
    if (a != 1) out += a.str() + "*";
    out += k.orbit_type();
  }
  return out;
}

bool BurnsideElement::operator==(const BurnsideElement& o) const {
  return ambient_->same_as(*o.ambient_) && terms_ == o.terms_;
}

BurnsideElement induce(const BurnsideElement& x, const SemidirectPtr& larger) {
  if (!(x.ambient()->g() == larger->g()))
    throw Error(ErrorCode::AmbientMismatch, "induction needs the same diagonal group");
  if (!x.ambient()->s().is_subgroup_of(larger->s()))
    throw Error(ErrorCode::NotSubgroup, "S' is not a subgroup of S");
  BurnsideElement out(larger);
  for (const auto& [k, c] : x.terms()) out.add(k.h, k.t, c);
  return out;
}

BurnsideElement saito_dual(const BurnsideElement& x, const SemidirectPtr& dual) {
  const auto& amb = *x.ambient();
  if (amb.g().order() != amb.diagonal()->order() || dual->g().order() != dual->diagonal()->order())
    throw Error(ErrorCode::AmbientMismatch, "duality is defined on the full diagonal groups");
  if (!(dual->diagonal()->matrix() == amb.diagonal()->matrix().transposed()))
    throw Error(ErrorCode::AmbientMismatch, "dual ambient is not built from the transpose");
  if (!(dual->s() == amb.s())) throw Error(ErrorCode::AmbientMismatch, "permutation groups differ");
  BurnsideElement out(dual);
  for (const auto& [k, c] : x.terms()) out.add(annihilator(k.h, dual->diagonal()), k.t, c);
  return out;
}

}  // namespace saito
