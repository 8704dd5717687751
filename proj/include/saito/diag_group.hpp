#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "saito/int_matrix.hpp"
#include "saito/numeric.hpp"
#include "saito/perm_group.hpp"

namespace saito {

// Vector of rationals modulo 1, stored as numerators over a common
// denominator (the exponent of the ambient group).
class DiagonalElement {
 public:
  using Storage = boost::container::small_vector<std::int64_t, 6>;

  DiagonalElement() = default;
  DiagonalElement(std::int64_t denominator, Storage numerators);
  static DiagonalElement zero(std::size_t n, std::int64_t denominator);

  std::size_t size() const { return num_.size(); }
  std::int64_t denominator() const { return den_; }
  std::int64_t numerator(std::size_t i) const { return num_[i]; }
  const Storage& numerators() const { return num_; }
  Rational value(std::size_t i) const { return Rational(num_[i], den_); }

  bool is_zero() const;

  DiagonalElement operator+(const DiagonalElement& o) const;
  DiagonalElement operator-(const DiagonalElement& o) const;
  DiagonalElement operator-() const;
  DiagonalElement times(std::int64_t k) const;

  // "1/5(1,4,0,0,0)" over the least common denominator; "0" for zero.
  std::string to_string() const;

  bool operator==(const DiagonalElement& o) const { return den_ == o.den_ && num_ == o.num_; }
  bool operator<(const DiagonalElement& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return std::lexicographical_compare(num_.begin(), num_.end(), o.num_.begin(), o.num_.end());
  }

 private:
  std::int64_t den_ = 1;
  Storage num_;
};

// (perm_act(s, v))_i = v_{s^-1(i)}.
DiagonalElement perm_act(const Permutation& s, const DiagonalElement& v);

// G_E = { v : E v in Z^n }, of order |det E|.
class DiagonalGroup {
 public:
  // Throws SingularMatrix when det E = 0.
  static std::shared_ptr<const DiagonalGroup> create(const IntMatrix& e);

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t n() const { return matrix_.rows(); }
  std::int64_t exponent() const { return exponent_; }
  std::size_t order() const { return elements_.size(); }
  // Independent generators from the Smith form, orders d_k > 1.
  const std::vector<DiagonalElement>& generators() const { return generators_; }
  const std::vector<std::int64_t>& invariants() const { return invariants_; }
  // Sorted by numerators.
  const std::vector<DiagonalElement>& elements() const { return elements_; }
  const DiagonalElement& element(std::size_t i) const { return elements_[i]; }

  bool contains(const DiagonalElement& v) const;
  std::optional<std::size_t> index_of(const DiagonalElement& v) const;
  // Throws NotMember.
  std::size_t require_index(const DiagonalElement& v) const;

  DiagonalElement zero() const { return DiagonalElement::zero(n(), exponent_); }
  // Converts rationals to the group denominator; throws NotMember when a
  // denominator does not divide the exponent or the vector is outside G_E.
  DiagonalElement from_rationals(const std::vector<Rational>& values) const;
  // The grading element J = (q_1, ..., q_n).
  DiagonalElement grading_element() const;
  // "1/m(a1,...,an)" or "J".
  DiagonalElement parse_element(std::string_view text) const;

 private:
  DiagonalGroup() = default;

  IntMatrix matrix_;
  std::int64_t exponent_ = 1;
  std::vector<std::int64_t> invariants_;
  std::vector<DiagonalElement> generators_;
  std::vector<DiagonalElement> elements_;
};

using DiagonalGroupPtr = std::shared_ptr<const DiagonalGroup>;

// Subgroup of a DiagonalGroup as a sorted list of element indices.
class DiagonalSubgroup {
 public:
  DiagonalSubgroup() = default;
  // `indices` must be closed under addition.
  DiagonalSubgroup(DiagonalGroupPtr parent, std::vector<std::uint32_t> indices);
  static DiagonalSubgroup whole(DiagonalGroupPtr parent);
  static DiagonalSubgroup trivial(DiagonalGroupPtr parent);

  const DiagonalGroupPtr& parent() const { return parent_; }
  std::size_t order() const { return indices_.size(); }
  bool is_trivial() const { return indices_.size() == 1; }
  const std::vector<std::uint32_t>& indices() const { return indices_; }
  std::vector<DiagonalElement> elements() const;

  bool contains_index(std::size_t i) const;
  bool contains(const DiagonalElement& v) const;
  bool is_subgroup_of(const DiagonalSubgroup& other) const;
  std::vector<bool> mask() const;

  // Greedy generating set drawn from the sorted element list.
  std::vector<DiagonalElement> generators() const;
  // "1/5(1,1,1,1,1),1/5(0,1,2,3,4)" or "0" when trivial.
  std::string to_string() const;

  DiagonalSubgroup perm_act(const Permutation& s) const;
  bool is_invariant(const Permutation& s) const;
  bool is_invariant(const PermGroup& s) const;

  // Same matrix and same elements.
  bool operator==(const DiagonalSubgroup& o) const;
  bool operator<(const DiagonalSubgroup& o) const { return indices_ < o.indices_; }

 private:
  DiagonalGroupPtr parent_;
  std::vector<std::uint32_t> indices_;
};

// Throws NotMember when a generator is outside G.
DiagonalSubgroup subgroup_generated(const DiagonalGroupPtr& g,
                                    const std::vector<DiagonalElement>& gens);

// { v in H : v_i = 0 for i in I }.
DiagonalSubgroup isotropy_on_stratum(const DiagonalSubgroup& h, const IndexSet& set);
// Elements constant on the T-orbits.
DiagonalSubgroup fixed_subgroup(const DiagonalSubgroup& h, const PermGroup& t);

// v . (E^T w) mod 1 for v in G_E and w in G_{E^T}; a rational in [0, 1).
Rational pairing(const DiagonalGroup& g, const DiagonalElement& v, const DiagonalElement& w);

// Subgroup of `dual` (built from the transpose) pairing trivially with H.
DiagonalSubgroup annihilator(const DiagonalSubgroup& h, const DiagonalGroupPtr& dual);
DiagonalSubgroup annihilator(const DiagonalSubgroup& h);

}  // namespace saito
