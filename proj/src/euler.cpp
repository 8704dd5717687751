#include "saito/euler.hpp"

#include <algorithm>
#include <numeric>

#include "saito/errors.hpp"

namespace saito {

namespace {

BigInt sign_power(std::size_t k) { return k % 2 == 0 ? BigInt(1) : BigInt(-1); }

// Classes of the lattice by decreasing order, ties by representative.
std::vector<std::size_t> solve_order(const SubgroupLattice& lattice) {
  std::vector<std::size_t> order(lattice.classes().size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lattice.class_representative(a).order() > lattice.class_representative(b).order();
  });
  return order;
}

}  // namespace

BigInt stratum_chi_fixed(const ExponentMatrix& e, const IndexSet& set, const PermGroup& t) {
  if (set.empty()) return 0;
  if (!restrict_to(e, set).full) return 0;
  const RestrictedPolynomial fit = diagonal_restrict(e, set, t);
  if (!fit.full) return 0;
  const BigInt det = determinant(fit.matrix());
  return sign_power(fit.variables() - 1) * abs(det);
}

EulerContext::EulerContext(const InvertiblePolynomial& f, const PermGroup& s, std::size_t bound)
    : f_(f), s_(s), bound_(bound) {
  if (s.degree() != f.n())
    throw Error(ErrorCode::InvalidArgument, "S acts on " + std::to_string(s.degree()) +
                                                " points but f has " + std::to_string(f.n()) +
                                                " variables");
  check_S_invariance(f_, s_);
  g_ = DiagonalGroup::create(f_.exponents());
  ambient_ = SemidirectProduct::create(DiagonalSubgroup::whole(g_), s_, bound_);
  ambients_.emplace(s_, ambient_);
}

SemidirectPtr EulerContext::ambient_for(const PermGroup& stabilizer) {
  auto it = ambients_.find(stabilizer);
  if (it != ambients_.end()) return it->second;
  auto amb = SemidirectProduct::create(DiagonalSubgroup::whole(g_), stabilizer, bound_);
  ambients_.emplace(stabilizer, amb);
  return amb;
}

const SubgroupLattice& EulerContext::lattice_for(const PermGroup& stabilizer) {
  auto it = lattices_.find(stabilizer);
  if (it == lattices_.end()) it = lattices_.emplace(stabilizer, SubgroupLattice(stabilizer)).first;
  return it->second;
}

StratumContribution stratum_contribution(EulerContext& ctx, const IndexSet& set) {
  const ExponentMatrix& e = ctx.polynomial().matrix();
  PermGroup stabilizer = ctx.s().setwise_stabilizer(set);
  const SemidirectPtr amb = ctx.ambient_for(stabilizer);
  StratumContribution out(amb);
  out.set = set;
  out.stabilizer = stabilizer;
  out.isotropy = isotropy_on_stratum(amb->g(), set);
  if (set.empty() || !restrict_to(e, set).full) return out;

  const SubgroupLattice& lattice = ctx.lattice_for(stabilizer);
  const auto order = solve_order(lattice);
  const std::size_t k = order.size();
  std::vector<HTClass> kt;
  for (std::size_t c : order) {
    const PermGroup& t = lattice.class_representative(c);
    out.classes.push_back(t);
    kt.push_back(HTClass{out.isotropy, t});
    out.fixed.push_back(stratum_chi_fixed(e, set, t));
    const RestrictedPolynomial fit = diagonal_restrict(e, set, t);
    if (fit.full) {
      ExponentMatrix m;
      m.exponents = fit.matrix();
      m.coefficients = fit.coefficients;
      try {
        validate_invertible(m);
      } catch (const Error& err) {
        out.notes.push_back("f^{I,T} for I=" + index_set_to_string(set) + ", T=" + t.to_string() +
                            " is not a chain/loop sum: " + err.what());
      }
    }
  }

  std::vector<std::vector<std::int64_t>> marks(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) marks[i][j] = mark(*amb, kt[i], kt[j]);

  out.coefficients.assign(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    BigInt rest = out.fixed[j];
    for (std::size_t i = 0; i < j; ++i) rest -= out.coefficients[i] * marks[i][j];
    const std::int64_t diag = marks[j][j];
    if (diag <= 0 || rest % diag != 0)
      throw Error(ErrorCode::StructuralAssumptionViolated,
                  "non-integral coefficient for T=" + out.classes[j].to_string() + " on stratum " +
                      index_set_to_string(set));
    out.coefficients[j] = rest / diag;
  }
  for (std::size_t j = 0; j < k; ++j) {
    BigInt total = 0;
    for (std::size_t i = 0; i < k; ++i) total += out.coefficients[i] * marks[i][j];
    if (total != out.fixed[j])
      throw Error(ErrorCode::StructuralAssumptionViolated,
                  "nonzero marks residual for T=" + out.classes[j].to_string() + " on stratum " +
                      index_set_to_string(set));
  }
  for (std::size_t i = 0; i < k; ++i) out.element.add(out.isotropy, out.classes[i], out.coefficients[i]);
  return out;
}

EulerResult equivariant_euler_detailed(EulerContext& ctx) {
  EulerResult result{BurnsideElement(ctx.ambient()), {}};
  for (const auto& orbit : orbits_on_subsets(ctx.s())) {
    StratumContribution c = stratum_contribution(ctx, orbit.representative);
    result.total = result.total + induce(c.element, ctx.ambient());
    result.strata.push_back(std::move(c));
  }
  return result;
}

BurnsideElement equivariant_euler(const InvertiblePolynomial& f, const PermGroup& s) {
  EulerContext ctx(f, s);
  return equivariant_euler_detailed(ctx).total;
}

BurnsideElement reduced_equivariant_euler(const InvertiblePolynomial& f, const PermGroup& s) {
  return equivariant_euler(f, s).reduced();
}

DualityReport verify_duality(const InvertiblePolynomial& f, const PermGroup& s) {
  EulerContext ctx(f, s);
  const InvertiblePolynomial ft = f.transposed();
  if (!(ft.exponents() == f.exponents().transposed()))
    throw Error(ErrorCode::StructuralAssumptionViolated, "transpose changed the row alignment");
  EulerContext dual_ctx(ft, s);
  const BurnsideElement lhs = equivariant_euler_detailed(ctx).total.reduced();
  const BurnsideElement dual_side = equivariant_euler_detailed(dual_ctx).total.reduced();
  const BurnsideElement rhs = saito_dual(dual_side, ctx.ambient()).scaled(sign_power(static_cast<std::size_t>(f.n())));
  DualityReport report{lhs, rhs, lhs - rhs, false, pc_check(s)};
  report.equal = report.diff.is_zero();
  return report;
}

bool LemmaReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

LemmaReport lemma_level_checks(const InvertiblePolynomial& f, const PermGroup& s) {
  LemmaReport report;
  EulerContext ctx(f, s);
  EulerContext dual_ctx(f.transposed(), s);
  const int n = f.n();
  const IndexSet all = full_set(n);
  const PcResult pc = pc_check(s);
  report.checks.push_back({"parity condition", pc.satisfies,
                           pc.satisfies ? "" : "violated by " + pc.witness->to_string()});

  const StratumContribution top = stratum_contribution(ctx, all);
  {
    BurnsideElement expected(top.element.ambient());
    expected.add(DiagonalSubgroup::trivial(ctx.diagonal()), s, sign_power(static_cast<std::size_t>(n - 1)));
    LemmaCheck check{"full torus is (-1)^(n-1)[G^/{e}xS]", expected == top.element, ""};
    if (!check.passed) check.detail = "got " + top.element.to_string();
    report.checks.push_back(check);
  }
  {
    LemmaCheck check{"full torus has no proper T", true, ""};
    for (std::size_t i = 0; i < top.classes.size(); ++i)
      if (!(top.classes[i] == top.stabilizer) && top.coefficients[i] != 0) {
        check.passed = false;
        check.detail += "a=" + top.coefficients[i].str() + " at T=" + top.classes[i].to_string() + "; ";
      }
    report.checks.push_back(check);
  }

  LemmaCheck isotropy_check{"isotropy of complement is the annihilator", true, ""};
  LemmaCheck dual_check{"strata I and complement are dual", true, ""};
  LemmaCheck hasse_check{"coefficients depend on the coloured Hasse diagram", true, ""};
  std::map<std::pair<PermGroup, std::vector<int>>, std::pair<IndexSet, std::vector<BigInt>>> seen;
  const BigInt sign_n = sign_power(static_cast<std::size_t>(n));
  for (const auto& orbit : orbits_on_subsets(s)) {
    const IndexSet& set = orbit.representative;
    if (set.empty() || set.size() == all.size()) continue;
    const IndexSet co = complement(set, n);
    const StratumContribution c = stratum_contribution(ctx, set);
    const StratumContribution d = stratum_contribution(dual_ctx, co);
    if (!c.coefficients.empty() && !(annihilator(c.isotropy, dual_ctx.diagonal()) == d.isotropy)) {
      isotropy_check.passed = false;
      isotropy_check.detail += index_set_to_string(set) + "; ";
    }
    const BurnsideElement lhs = induce(c.element, ctx.ambient());
    const BurnsideElement rhs = saito_dual(induce(d.element, dual_ctx.ambient()), ctx.ambient()).scaled(sign_n);
    if (!(lhs == rhs)) {
      dual_check.passed = false;
      dual_check.detail += index_set_to_string(set) + ": " + (lhs - rhs).to_string() + "; ";
    }
    if (c.coefficients.empty()) continue;
    std::vector<int> colours;
    for (const auto& t : c.classes) colours.push_back(static_cast<int>((set.size() - orbit_count(t, set)) % 2));
    const BigInt eps = sign_power(orbit_count(c.stabilizer, set) - 1);
    std::vector<BigInt> normalized;
    for (const auto& a : c.coefficients) normalized.push_back(eps * a);
    auto key = std::make_pair(c.stabilizer, colours);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, std::make_pair(set, normalized));
    } else if (it->second.second != normalized) {
      hasse_check.passed = false;
      hasse_check.detail += index_set_to_string(set) + " vs " + index_set_to_string(it->second.first) + "; ";
    }
  }
  report.checks.push_back(isotropy_check);
  report.checks.push_back(dual_check);
  report.checks.push_back(hasse_check);
  return report;
}

std::optional<std::vector<Rational>> isotropy_recursion_coefficients(EulerContext& ctx,
                                                                     const IndexSet& set) {
  const ExponentMatrix& e = ctx.polynomial().matrix();
  if (set.empty() || !restrict_to(e, set).full) return std::nullopt;
  const PermGroup stabilizer = ctx.s().setwise_stabilizer(set);
  const SubgroupLattice& lattice = ctx.lattice_for(stabilizer);
  const auto& subs = lattice.subgroups();
  const std::size_t m = subs.size();
  std::vector<BigInt> group_order(m), chi(m);
  for (std::size_t u = 0; u < m; ++u) {
    const RestrictedPolynomial fit = diagonal_restrict(e, set, subs[u]);
    if (!fit.full) return std::nullopt;
    group_order[u] = abs(determinant(fit.matrix()));
    chi[u] = stratum_chi_fixed(e, set, subs[u]);
  }
  std::vector<Rational> exact(m);
  for (std::size_t u = m; u-- > 0;) {
    Rational value = Rational(chi[u]);
    for (std::size_t w = u + 1; w < m; ++w)
      if (subs[w].order() > subs[u].order() && lattice.contains(w, u))
        value -= Rational(group_order[u], group_order[w]) * exact[w];
    exact[u] = value;
  }
  std::vector<Rational> out;
  for (std::size_t c : solve_order(lattice)) {
    const std::size_t rep = lattice.classes()[c].representative;
    const Rational factor(BigInt(subs[rep].order()), BigInt(lattice.normalizer(rep).order()));
    out.push_back(factor * exact[rep] / Rational(group_order[rep]));
  }
  return out;
}

}  // namespace saito
