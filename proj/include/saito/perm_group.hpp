#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "saito/permutation.hpp"

namespace saito {

// Finite permutation group on {0, ..., n-1} with its full element list.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultBound = 10000;

  PermGroup() = default;

  // Closure of the generators; throws BoundExceeded when the order exceeds
  // the bound.
  static PermGroup from_generators(int n, std::vector<Permutation> generators,
                                   std::size_t bound = kDefaultBound);
  // Wraps a set that is already known to be closed under multiplication.
  static PermGroup from_closed_elements(int n, std::vector<Permutation> elements);
  static PermGroup trivial(int n);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }

  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  // Greedy generating set drawn from the sorted element list; depends only
  // on the element set.
  std::vector<Permutation> canonical_generators() const;

  bool contains(const Permutation& p) const;
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;

  PermGroup conjugated_by(const Permutation& s) const;  // s G s^-1
  PermGroup setwise_stabilizer(const IndexSet& set) const;

  bool preserves(const IndexSet& set) const;

  // "<(12)(34),(13)(24)>" from canonical generators, "{e}" when trivial.
  std::string to_string() const;

  bool operator==(const PermGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }
  // Lexicographic on sorted element lists.
  bool operator<(const PermGroup& other) const { return elements_ < other.elements_; }

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

// Number of orbits of the group on the given set; throws NotPreserved when
// the set is not invariant.
std::size_t orbit_count(const PermGroup& group, const IndexSet& set);
std::vector<IndexSet> orbits(const PermGroup& group, const IndexSet& set);

bool is_alternating_subgroup(const PermGroup& group);

struct SubgroupClass {
  std::size_t representative = 0;  // index into SubgroupLattice::subgroups()
  std::vector<std::size_t> members;
  PermGroup normalizer;            // normalizer of the representative
};

// All subgroups of a permutation group, their inclusions, conjugacy classes
// and normalizers.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(PermGroup group, std::size_t bound = PermGroup::kDefaultBound);

  const PermGroup& group() const { return group_; }
  // Sorted by order, then by element list.
  const std::vector<PermGroup>& subgroups() const { return subgroups_; }
  // Sorted by representative, so by increasing order. The representative is
  // the lexicographically least member.
  const std::vector<SubgroupClass>& classes() const { return classes_; }

  std::size_t class_of(std::size_t subgroup) const { return class_of_[subgroup]; }
  std::optional<std::size_t> index_of(const PermGroup& subgroup) const;
  std::size_t class_of(const PermGroup& subgroup) const;

  const PermGroup& class_representative(std::size_t cls) const {
    return subgroups_[classes_[cls].representative];
  }

  bool contains(std::size_t outer, std::size_t inner) const;  // inner <= outer
  const PermGroup& normalizer(std::size_t subgroup) const { return normalizers_[subgroup]; }

  // True when some member of class `lower` lies in the representative of
  // class `upper`.
  bool subconjugate(std::size_t lower, std::size_t upper) const;

 private:
  PermGroup group_;
  std::vector<PermGroup> subgroups_;
  std::vector<std::vector<bool>> member_masks_;  // element membership per subgroup
  std::vector<PermGroup> normalizers_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::size_t> class_of_;
};

struct PcResult {
  bool satisfies = true;
  std::optional<PermGroup> witness;  // violating subgroup of largest order
};

// Parity condition: every subgroup T has orbit_count(T, {0..n-1}) = n mod 2.
PcResult pc_check(const PermGroup& group);
PcResult pc_check(const SubgroupLattice& lattice);

struct SubsetOrbit {
  IndexSet representative;  // lexicographically least member
  PermGroup stabilizer;
  std::size_t size = 0;
};

// Orbits of the group on all subsets of {0..n-1}, sorted by representative.
std::vector<SubsetOrbit> orbits_on_subsets(const PermGroup& group);

struct ColouredHasse {
  std::vector<PermGroup> nodes;  // class representatives in lattice order
  std::vector<int> colours;      // (|I| - orbit count) mod 2
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, upper) covers

  bool operator==(const ColouredHasse&) const = default;
};

ColouredHasse coloured_hasse(const PermGroup& group, const IndexSet& set);

}  // namespace saito
