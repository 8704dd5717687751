#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "saito/diag_group.hpp"
#include "saito/numeric.hpp"
#include "saito/perm_group.hpp"

namespace saito {

// The group G x| S with (v, s)(w, t) = (v + s(w), st).
class SemidirectProduct {
 public:
  static constexpr std::size_t kDefaultBound = std::size_t{1} << 24;

  struct Element {
    DiagonalElement v;
    Permutation sigma;
    bool operator==(const Element&) const = default;
  };

  // G must be S-invariant. Throws BoundExceeded when |G||S| > bound.
  static std::shared_ptr<const SemidirectProduct> create(DiagonalSubgroup g, PermGroup s,
                                                         std::size_t bound = kDefaultBound);

  const DiagonalSubgroup& g() const { return g_; }
  const PermGroup& s() const { return s_; }
  const DiagonalGroupPtr& diagonal() const { return g_.parent(); }
  std::size_t order() const { return g_.order() * s_.order(); }

  // Index of s(x) for the i-th element s of S and an element index x of
  // the ambient diagonal group.
  std::uint32_t act(std::size_t sigma, std::uint32_t x) const {
    return table_[sigma * stride_ + x];
  }
  DiagonalSubgroup act(std::size_t sigma, const DiagonalSubgroup& h) const;
  DiagonalSubgroup act(const Permutation& sigma, const DiagonalSubgroup& h) const;

  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element identity() const;

  bool same_as(const SemidirectProduct& o) const;

 private:
  SemidirectProduct() = default;

  DiagonalSubgroup g_;
  PermGroup s_;
  std::size_t stride_ = 0;
  std::vector<std::uint32_t> table_;
};

using SemidirectPtr = std::shared_ptr<const SemidirectProduct>;

// The subgroup H x| T, kept in canonical form inside a given ambient.
struct HTClass {
  DiagonalSubgroup h;
  PermGroup t;

  std::size_t order() const { return h.order() * t.order(); }
  // "[G⋊S/H⋊T]" with the generators of H and T written out.
  std::string orbit_type() const;

  bool operator==(const HTClass& o) const { return t == o.t && h == o.h; }
  bool operator<(const HTClass& o) const {
    if (!(t == o.t)) return t < o.t;
    return h < o.h;
  }
};

// Throws NotSubgroup when H is not in G, T not in S or T does not preserve H.
void check_well_formed(const SemidirectProduct& g, const DiagonalSubgroup& h, const PermGroup& t);

// Least (sorted T elements, sorted H elements) over all S-conjugates
// s(H) x| sTs^-1.
HTClass canonicalize(const SemidirectProduct& g, const DiagonalSubgroup& h, const PermGroup& t);

// Some s in S with s(H1) = H2 and s T1 s^-1 = T2.
std::optional<Permutation> ht_conjugate_test(const SemidirectProduct& g, const HTClass& a,
                                             const HTClass& b);

// |(G^/K')^K|: the number of cosets x K' with K x K' = x K'.
std::int64_t mark(const SemidirectProduct& g, const HTClass& k_prime, const HTClass& k);

// Integer combination of classes [G^/H x| T].
class BurnsideElement {
 public:
  explicit BurnsideElement(SemidirectPtr ambient) : ambient_(std::move(ambient)) {}

  const SemidirectPtr& ambient() const { return ambient_; }
  const std::map<HTClass, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Canonicalizes before adding.
  void add(const DiagonalSubgroup& h, const PermGroup& t, const BigInt& c);
  void add(const HTClass& k, const BigInt& c) { add(k.h, k.t, c); }
  BigInt coefficient(const HTClass& k) const;

  BurnsideElement operator+(const BurnsideElement& o) const;
  BurnsideElement operator-(const BurnsideElement& o) const;
  BurnsideElement scaled(const BigInt& c) const;
  // Subtracts [G^/G^].
  BurnsideElement reduced() const;

  // One JSON object per line in class order.
  std::string to_jsonl() const;
  std::string to_string() const;  // "c*[G⋊S/H⋊T] + ..."

  bool operator==(const BurnsideElement& o) const;

 private:
  void check_ambient(const BurnsideElement& o) const;

  SemidirectPtr ambient_;
  std::map<HTClass, BigInt> terms_;
};

HTClass whole_class(const SemidirectProduct& g);

// Re-reads every class in a larger ambient with the same G and S' <= S.
BurnsideElement induce(const BurnsideElement& x, const SemidirectPtr& larger);

// Replaces each H by its annihilator in the dual ambient, which must be
// built on the whole group of the transpose with the same S.
BurnsideElement saito_dual(const BurnsideElement& x, const SemidirectPtr& dual);

}  // namespace saito
