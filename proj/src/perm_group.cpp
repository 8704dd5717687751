#include "saito/perm_group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "saito/errors.hpp"

namespace saito {

namespace {

std::vector<Permutation> close_under(int n, const std::vector<Permutation>& generators,
                                     std::size_t bound) {
  const Permutation id = Permutation::identity(n);
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    const Permutation p = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : generators) {
      Permutation q = p * g;
      if (seen.insert(q).second) {
        if (seen.size() > bound)
          throw Error(ErrorCode::BoundExceeded,
                      "group order exceeds bound " + std::to_string(bound));
        frontier.push_back(std::move(q));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

PermGroup PermGroup::from_generators(int n, std::vector<Permutation> generators,
                                     std::size_t bound) {
  for (const auto& g : generators)
    if (g.degree() != n) throw Error(ErrorCode::InvalidArgument, "generator degree mismatch");
  PermGroup group;
  group.degree_ = n;
  group.elements_ = close_under(n, generators, bound);
  group.generators_ = std::move(generators);
  return group;
}

PermGroup PermGroup::from_closed_elements(int n, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup group;
  group.degree_ = n;
  group.elements_ = std::move(elements);
  group.generators_ = group.canonical_generators();
  return group;
}

PermGroup PermGroup::trivial(int n) { return from_generators(n, {}); }

std::vector<Permutation> PermGroup::canonical_generators() const {
  std::vector<Permutation> gens;
  std::set<Permutation> span{Permutation::identity(degree_)};
  for (const auto& el : elements_) {
    if (span.count(el)) continue;
    gens.push_back(el);
    const auto closed = close_under(degree_, gens, elements_.size());
    span = std::set<Permutation>(closed.begin(), closed.end());
    if (span.size() == elements_.size()) break;
  }
  return gens;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Permutation& p) { return other.contains(p); });
}

PermGroup PermGroup::conjugated_by(const Permutation& s) const {
  std::vector<Permutation> out;
  out.reserve(elements_.size());
  const Permutation s_inv = s.inverse();
  for (const auto& p : elements_) out.push_back(s * p * s_inv);
  return from_closed_elements(degree_, std::move(out));
}

PermGroup PermGroup::setwise_stabilizer(const IndexSet& set) const {
  std::vector<Permutation> out;
  for (const auto& p : elements_)
    if (p.apply(set) == set) out.push_back(p);
  return from_closed_elements(degree_, std::move(out));
}

bool PermGroup::preserves(const IndexSet& set) const {
  const auto& gens = generators_;
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Permutation& g) { return g.apply(set) == set; });
}

std::string PermGroup::to_string() const {
  if (is_trivial()) return "{e}";
  std::string out = "<";
  const auto gens = canonical_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += gens[i].to_cycles();
  }
  return out + ">";
}

std::vector<IndexSet> orbits(const PermGroup& group, const IndexSet& set) {
  if (!group.preserves(set))
    throw Error(ErrorCode::NotPreserved, "group does not preserve " + index_set_to_string(set));
  std::vector<bool> done(static_cast<std::size_t>(group.degree()), false);
  std::vector<IndexSet> out;
  for (int start : set) {
    if (done[static_cast<std::size_t>(start)]) continue;
    IndexSet orbit{start};
    done[static_cast<std::size_t>(start)] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : group.generators()) {
        const int next = g(orbit[k]);
        if (!done[static_cast<std::size_t>(next)]) {
          done[static_cast<std::size_t>(next)] = true;
          orbit.push_back(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::size_t orbit_count(const PermGroup& group, const IndexSet& set) {
  return orbits(group, set).size();
}

bool is_alternating_subgroup(const PermGroup& group) {
  return std::all_of(group.generators().begin(), group.generators().end(),
                     [](const Permutation& p) { return p.is_even(); });
}

// ---------------------------------------------------------------------------
// Subgroup lattice

namespace {

using Index = std::uint32_t;
using IndexList = std::vector<Index>;

class ElementTable {
 public:
  explicit ElementTable(const PermGroup& group) : group_(group) {
    const std::size_t n = group.order();
    inverse_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      inverse_[i] = static_cast<Index>(*group.index_of(group.elements()[i].inverse()));
    if (n <= kTableLimit) {
      table_.resize(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          table_[i * n + j] = lookup(group.elements()[i] * group.elements()[j]);
    }
    identity_ = lookup(Permutation::identity(group.degree()));
  }

  Index mul(Index a, Index b) const {
    if (!table_.empty()) return table_[a * group_.order() + b];
    return lookup(group_.elements()[a] * group_.elements()[b]);
  }
  Index inv(Index a) const { return inverse_[a]; }
  Index identity() const { return identity_; }
  Index conj(Index s, Index x) const { return mul(mul(s, x), inv(s)); }

 private:
  static constexpr std::size_t kTableLimit = 1500;

  Index lookup(const Permutation& p) const { return static_cast<Index>(*group_.index_of(p)); }

  const PermGroup& group_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  Index identity_ = 0;
};

IndexList close_indices(const ElementTable& table, const IndexList& gens, std::size_t order) {
  std::vector<bool> seen(order, false);
  IndexList out{table.identity()};
  seen[table.identity()] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (Index g : gens) {
      const Index q = table.mul(out[k], g);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SubgroupLattice::SubgroupLattice(PermGroup group, std::size_t bound) : group_(std::move(group)) {
  if (group_.order() > bound)
    throw Error(ErrorCode::BoundExceeded,
                "group order " + std::to_string(group_.order()) + " exceeds lattice bound");
  const std::size_t order = group_.order();
  const ElementTable table(group_);

  struct Found {
    IndexList gens;
  };
  std::map<IndexList, Found> found;
  std::vector<IndexList> queue;
  IndexList trivial{table.identity()};
  found.emplace(trivial, Found{});
  queue.push_back(trivial);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const IndexList current = queue[q];
    const IndexList gens = found[current].gens;
    std::vector<bool> in_current(order, false);
    for (Index x : current) in_current[x] = true;
    for (Index g = 0; g < order; ++g) {
      if (in_current[g]) continue;
      IndexList next_gens = gens;
      next_gens.push_back(g);
      IndexList joined = close_indices(table, next_gens, order);
      if (found.count(joined)) continue;
      found.emplace(joined, Found{next_gens});
      queue.push_back(std::move(joined));
    }
  }

  std::vector<IndexList> lists;
  lists.reserve(found.size());
  for (const auto& [list, info] : found) lists.push_back(list);
  std::sort(lists.begin(), lists.end(), [](const IndexList& a, const IndexList& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::map<IndexList, std::size_t> position;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    position[lists[i]] = i;
    std::vector<Permutation> elements;
    elements.reserve(lists[i].size());
    std::vector<bool> mask(order, false);
    for (Index x : lists[i]) {
      elements.push_back(group_.elements()[x]);
      mask[x] = true;
    }
    subgroups_.push_back(PermGroup::from_closed_elements(group_.degree(), std::move(elements)));
    member_masks_.push_back(std::move(mask));
  }

  // Normalizers.
  for (std::size_t i = 0; i < lists.size(); ++i) {
    std::vector<Permutation> normal;
    for (Index s = 0; s < order; ++s) {
      bool ok = true;
      for (Index x : lists[i]) {
        if (!member_masks_[i][table.conj(s, x)]) {
          ok = false;
          break;
        }
      }
      if (ok) normal.push_back(group_.elements()[s]);
    }
    normalizers_.push_back(PermGroup::from_closed_elements(group_.degree(), std::move(normal)));
  }

  // Conjugacy classes; the first member met in sorted order is the least.
  class_of_.assign(lists.size(), lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i) {
    if (class_of_[i] != lists.size()) continue;
    SubgroupClass cls;
    cls.representative = i;
    std::set<std::size_t> members;
    for (Index s = 0; s < order; ++s) {
      IndexList image;
      image.reserve(lists[i].size());
      for (Index x : lists[i]) image.push_back(table.conj(s, x));
      std::sort(image.begin(), image.end());
      members.insert(position.at(image));
    }
    cls.members.assign(members.begin(), members.end());
    cls.normalizer = normalizers_[i];
    for (std::size_t m : cls.members) class_of_[m] = classes_.size();
    classes_.push_back(std::move(cls));
  }
}

std::optional<std::size_t> SubgroupLattice::index_of(const PermGroup& subgroup) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), subgroup,
                             [](const PermGroup& a, const PermGroup& b) {
                               if (a.order() != b.order()) return a.order() < b.order();
                               return a < b;
                             });
  if (it == subgroups_.end() || !(*it == subgroup)) return std::nullopt;
  return static_cast<std::size_t>(it - subgroups_.begin());
}

std::size_t SubgroupLattice::class_of(const PermGroup& subgroup) const {
  const auto idx = index_of(subgroup);
  if (!idx) throw Error(ErrorCode::NotSubgroup, subgroup.to_string() + " is not in the lattice");
  return class_of_[*idx];
}

bool SubgroupLattice::contains(std::size_t outer, std::size_t inner) const {
  const auto& mask = member_masks_[outer];
  for (const auto& p : subgroups_[inner].elements())
    if (!mask[*group_.index_of(p)]) return false;
  return true;
}

bool SubgroupLattice::subconjugate(std::size_t lower, std::size_t upper) const {
  const std::size_t rep = classes_[upper].representative;
  for (std::size_t m : classes_[lower].members)
    if (contains(rep, m)) return true;
  return false;
}

PcResult pc_check(const SubgroupLattice& lattice) {
  const auto n = lattice.group().degree();
  const IndexSet all = full_set(n);
  PcResult result;
  const auto& subs = lattice.subgroups();
  // Largest order first; within an order the lexicographically least.
  std::optional<std::size_t> witness;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const std::size_t dim = orbit_count(subs[i], all);
    if (static_cast<int>(dim % 2) == n % 2) continue;
    if (!witness || subs[i].order() > subs[*witness].order()) witness = i;
  }
  if (witness) {
    result.satisfies = false;
    result.witness = subs[*witness];
  }
  return result;
}

PcResult pc_check(const PermGroup& group) { return pc_check(SubgroupLattice(group)); }

std::vector<SubsetOrbit> orbits_on_subsets(const PermGroup& group) {
  const int n = group.degree();
  if (n > 20) throw Error(ErrorCode::BoundExceeded, "subset enumeration limited to 20 points");
  const std::uint32_t total = 1u << n;
  std::vector<bool> seen(total, false);
  auto to_set = [n](std::uint32_t mask) {
    IndexSet s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    return s;
  };
  auto image = [n](const Permutation& p, std::uint32_t mask) {
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) out |= 1u << p(i);
    return out;
  };
  std::vector<SubsetOrbit> out;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (seen[mask]) continue;
    std::set<std::uint32_t> orbit;
    for (const auto& p : group.elements()) orbit.insert(image(p, mask));
    IndexSet rep;
    bool first = true;
    for (std::uint32_t m : orbit) {
      seen[m] = true;
      IndexSet s = to_set(m);
      if (first || s < rep) rep = std::move(s);
      first = false;
    }
    SubsetOrbit o;
    o.stabilizer = group.setwise_stabilizer(rep);
    o.representative = std::move(rep);
    o.size = orbit.size();
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](const SubsetOrbit& a, const SubsetOrbit& b) {
    return a.representative < b.representative;
  });
  return out;
}

ColouredHasse coloured_hasse(const PermGroup& group, const IndexSet& set) {
  const SubgroupLattice lattice(group);
  ColouredHasse out;
  const std::size_t k = lattice.classes().size();
  for (std::size_t c = 0; c < k; ++c) {
    const PermGroup& rep = lattice.class_representative(c);
    out.nodes.push_back(rep);
    const std::size_t dim = orbit_count(rep, set);
    out.colours.push_back(static_cast<int>((set.size() - dim) % 2));
  }
  std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      below[a][b] = a != b && lattice.subconjugate(a, b);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!below[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < k && covered; ++c)
        if (below[a][c] && below[c][b]) covered = false;
      if (covered) out.edges.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace saito
