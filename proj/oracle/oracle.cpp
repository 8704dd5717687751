#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace saito::oracle {

namespace {

using Element = SemidirectProduct::Element;

std::vector<Element> elements_of(const SemidirectProduct& g, const DiagonalSubgroup& h,
                                 const PermGroup& t) {
  std::vector<Element> out;
  for (const auto& p : t.elements())
    for (const auto& v : h.elements()) out.push_back({v, p});
  return out;
}

std::pair<Permutation, DiagonalElement> key(const Element& x) { return {x.sigma, x.v}; }

}  // namespace

std::int64_t naive_mark(const SemidirectProduct& g, const HTClass& k_prime, const HTClass& k) {
  const auto all = elements_of(g, g.g(), g.s());
  const auto kp = elements_of(g, k_prime.h, k_prime.t);
  auto coset_rep = [&](const Element& x) {
    auto best = key(g.multiply(x, kp[0]));
    for (const auto& y : kp) best = std::min(best, key(g.multiply(x, y)));
    return best;
  };
  std::set<std::pair<Permutation, DiagonalElement>> reps;
  for (const auto& x : all) reps.insert(coset_rep(x));
  std::vector<Element> gens;
  for (const auto& v : k.h.generators()) gens.push_back({v, Permutation::identity(g.s().degree())});
  for (const auto& p : k.t.generators()) gens.push_back({g.diagonal()->zero(), p});
  std::int64_t fixed = 0;
  for (const auto& [sigma, v] : reps) {
    const Element x{v, sigma};
    bool ok = true;
    for (const auto& y : gens)
      if (coset_rep(g.multiply(y, x)) != key(x)) ok = false;
    if (ok) ++fixed;
  }
  return fixed;
}

bool naive_conjugate(const SemidirectProduct& g, const HTClass& a, const HTClass& b) {
  if (a.order() != b.order()) return false;
  std::set<std::pair<Permutation, DiagonalElement>> target;
  for (const auto& x : elements_of(g, b.h, b.t)) target.insert(key(x));
  const auto source = elements_of(g, a.h, a.t);
  for (const auto& x : elements_of(g, g.g(), g.s())) {
    const Element xi = g.inverse(x);
    bool ok = true;
    for (const auto& y : source)
      if (!target.count(key(g.multiply(g.multiply(x, y), xi)))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<DiagonalSubgroup> all_subgroups(const DiagonalSubgroup& g) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<DiagonalSubgroup> out{DiagonalSubgroup::trivial(g.parent())};
  seen.insert(out[0].indices());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto gens = out[i].generators();
    for (const auto& x : g.elements()) {
      if (out[i].contains(x)) continue;
      auto next = gens;
      next.push_back(x);
      DiagonalSubgroup h = subgroup_generated(g.parent(), next);
      if (seen.insert(h.indices()).second) out.push_back(std::move(h));
    }
  }
  return out;
}

std::vector<HTClass> all_ht_subgroups(const SemidirectProduct& g) {
  const SubgroupLattice lattice(g.s());
  const auto hs = all_subgroups(g.g());
  std::vector<HTClass> out;
  for (const auto& t : lattice.subgroups())
    for (const auto& h : hs)
      if (h.is_invariant(t)) out.push_back({h, t});
  return out;
}

namespace {

std::set<std::vector<Permutation>> closures(const PermGroup& s) {
  const auto& el = s.elements();
  const std::size_t n = el.size();
  std::set<std::vector<Permutation>> out;
  auto add = [&](const std::vector<Permutation>& gens) {
    out.insert(PermGroup::from_generators(s.degree(), gens).elements());
  };
  if (n <= 12) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Permutation> gens;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) gens.push_back(el[i]);
      add(gens);
    }
    return out;
  }
  add({});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) add({el[i], el[j], el[k]});
  return out;
}

}  // namespace

std::size_t subset_closure_subgroup_count(const PermGroup& s) { return closures(s).size(); }

std::size_t subset_closure_class_count(const PermGroup& s) {
  const auto subs = closures(s);
  std::set<std::vector<Permutation>> classes;
  for (const auto& sub : subs) {
    std::vector<Permutation> least = sub;
    for (const auto& x : s.elements()) {
      std::vector<Permutation> conj;
      for (const auto& p : sub) conj.push_back(x * p * x.inverse());
      std::sort(conj.begin(), conj.end());
      least = std::min(least, conj);
    }
    classes.insert(least);
  }
  return classes.size();
}

std::int64_t fermat_curve_torus_chi(std::int64_t m) {
  const std::int64_t genus = (m - 1) * (m - 2) / 2;
  return 2 - 2 * genus - m - 2 * m;
}

HTClass random_ht_class(const SemidirectProduct& g, const SubgroupLattice& s, std::mt19937_64& rng) {
  const auto& subs = s.subgroups();
  const PermGroup& t = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
  const auto& els = g.g().indices();
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  std::vector<DiagonalElement> gens;
  const std::size_t count = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  for (std::size_t i = 0; i < count; ++i) {
    const DiagonalElement& v = g.diagonal()->element(els[pick(rng)]);
    for (const auto& p : t.elements()) gens.push_back(perm_act(p, v));
  }
  return canonicalize(g, subgroup_generated(g.diagonal(), gens), t);
}

BurnsideElement random_element(const SemidirectPtr& g, const SubgroupLattice& s, std::mt19937_64& rng,
                               std::size_t terms) {
  BurnsideElement out(g);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, terms)(rng);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (std::size_t i = 0; i < count; ++i) out.add(random_ht_class(*g, s, rng), coeff(rng));
  return out;
}

}  // namespace saito::oracle
