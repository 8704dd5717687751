#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "saito/burnside.hpp"
#include "saito/diag_group.hpp"
#include "saito/perm_group.hpp"
#include "saito/polynomial.hpp"

namespace saito {

// chi of the T-fixed part of V_f in the torus (C*)^I: zero when I is empty
// or f^I / f^{I,T} has too few monomials, else (-1)^(o-1) |det E^{I,T}| with
// o the number of T-orbits on I.
BigInt stratum_chi_fixed(const ExponentMatrix& e, const IndexSet& set, const PermGroup& t);

struct StratumContribution {
  IndexSet set;
  PermGroup stabilizer;          // S^I
  DiagonalSubgroup isotropy;     // G_f^I
  std::vector<PermGroup> classes;  // representatives of Conjsub(S^I), solve order
  std::vector<BigInt> fixed;       // r(T)
  std::vector<BigInt> coefficients;  // a_[T]
  BurnsideElement element;         // over G_f x| S^I
  std::vector<std::string> notes;

  explicit StratumContribution(SemidirectPtr ambient) : element(std::move(ambient)) {}
};

// Caches the per-stabilizer ambients and lattices of one (f, S).
class EulerContext {
 public:
  EulerContext(const InvertiblePolynomial& f, const PermGroup& s,
               std::size_t bound = SemidirectProduct::kDefaultBound);

  const InvertiblePolynomial& polynomial() const { return f_; }
  const PermGroup& s() const { return s_; }
  const DiagonalGroupPtr& diagonal() const { return g_; }
  const SemidirectPtr& ambient() const { return ambient_; }

  SemidirectPtr ambient_for(const PermGroup& stabilizer);
  const SubgroupLattice& lattice_for(const PermGroup& stabilizer);

 private:
  InvertiblePolynomial f_;
  PermGroup s_;
  std::size_t bound_;
  DiagonalGroupPtr g_;
  SemidirectPtr ambient_;
  std::map<PermGroup, SemidirectPtr> ambients_;
  std::map<PermGroup, SubgroupLattice> lattices_;
};

// Solves sum_T' a_T' mark(K_T', K_T) = r(T) with K_T = G_f^I x| T; throws
// StructuralAssumptionViolated on a non-integral solution or a residual.
StratumContribution stratum_contribution(EulerContext& ctx, const IndexSet& set);

struct EulerResult {
  BurnsideElement total;  // over G_f x| S
  std::vector<StratumContribution> strata;  // by orbit representative
};

EulerResult equivariant_euler_detailed(EulerContext& ctx);
BurnsideElement equivariant_euler(const InvertiblePolynomial& f, const PermGroup& s);
BurnsideElement reduced_equivariant_euler(const InvertiblePolynomial& f, const PermGroup& s);

struct DualityReport {
  BurnsideElement lhs;
  BurnsideElement rhs;
  BurnsideElement diff;  // lhs - rhs
  bool equal = false;
  PcResult pc;
};

DualityReport verify_duality(const InvertiblePolynomial& f, const PermGroup& s);

struct LemmaCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool passed() const;
};

LemmaReport lemma_level_checks(const InvertiblePolynomial& f, const PermGroup& s);

// a_[T] = |T| / |N(T)| * chi(X^(T)) / |G_{f^{I,T}}| from the recursion over
// overgroups; nullopt when some f^{I,T} has too few monomials.
std::optional<std::vector<Rational>> isotropy_recursion_coefficients(EulerContext& ctx,
                                                                     const IndexSet& set);

}  // namespace saito
