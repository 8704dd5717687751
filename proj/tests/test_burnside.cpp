#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "saito/burnside.hpp"
#include "saito/errors.hpp"
#include "saito/report.hpp"
#include "support.hpp"

using namespace saito;
using namespace saito::test;

namespace {

struct Setup {
  InvertiblePolynomial f;
  DiagonalGroupPtr g;
  DiagonalGroupPtr dual;
  SemidirectPtr amb;
  SemidirectPtr dual_amb;
};

Setup setup(const char* text, const PermGroup& s) {
  Setup out;
  out.f = InvertiblePolynomial::parse(text);
  out.g = DiagonalGroup::create(out.f.exponents());
  out.dual = DiagonalGroup::create(out.f.transposed().exponents());
  out.amb = SemidirectProduct::create(DiagonalSubgroup::whole(out.g), s);
  out.dual_amb = SemidirectProduct::create(DiagonalSubgroup::whole(out.dual), s);
  return out;
}

std::vector<HTClass> classes_of(const SemidirectProduct& amb) {
  std::set<HTClass> seen;
  for (const auto& k : oracle::all_ht_subgroups(amb)) seen.insert(canonicalize(amb, k.h, k.t));
  return {seen.begin(), seen.end()};
}

}  // namespace

TEST_CASE("semidirect product arithmetic") {
  const auto x = setup("x1^3+x2^3+x3^3", group(3, {"(123)", "(12)"}));
  const auto& amb = *x.amb;
  CHECK(amb.order() == 27 * 6);
  const auto& g = *x.g;
  const SemidirectProduct::Element a{g.parse_element("1/3(1,0,0)"), Permutation::from_cycles(3, "(12)")};
  const SemidirectProduct::Element b{g.parse_element("1/3(0,0,2)"), Permutation::from_cycles(3, "(123)")};
  const auto ab = amb.multiply(a, b);
  CHECK(ab.v == g.parse_element("1/3(1,0,2)"));
  CHECK(ab.sigma == Permutation::from_cycles(3, "(12)") * Permutation::from_cycles(3, "(123)"));
  CHECK(amb.multiply(a, amb.inverse(a)) == amb.identity());
  const auto c = SemidirectProduct::Element{g.parse_element("1/3(2,1,0)"), Permutation::from_cycles(3, "(23)")};
  CHECK(amb.multiply(amb.multiply(a, b), c) == amb.multiply(a, amb.multiply(b, c)));
  for (std::size_t s = 0; s < amb.s().order(); ++s)
    for (std::uint32_t v = 0; v < g.order(); ++v)
      CHECK(g.element(amb.act(s, v)) == perm_act(amb.s().elements()[s], g.element(v)));
}

TEST_CASE("semidirect product requirements") {
  const auto f = InvertiblePolynomial::parse(kX1);
  const auto g = DiagonalGroup::create(f.exponents());
  const auto h = subgroup_generated(g, {g->parse_element("1/5(1,4,0,0,0)")});
  CHECK_THROWS_AS(SemidirectProduct::create(h, group(5, {"(13)"})), Error);
  CHECK_THROWS_AS(SemidirectProduct::create(DiagonalSubgroup::whole(g), group(5, {"(12345)", "(12)"}), 1000), Error);
  CHECK_NOTHROW(SemidirectProduct::create(h, group(5, {"(12)"})));
}

TEST_CASE("conjugacy of split subgroups") {
  const auto x = setup(kX1, group(5, {"(123)", "(12)"}));
  const auto& amb = *x.amb;
  const auto& g = x.g;
  const auto h1 = subgroup_generated(g, {g->parse_element("1/5(0,1,0,0,0)"), g->parse_element("1/5(1,0,1,0,0)")});
  const auto t1 = group(5, {"(13)"});
  const auto p = Permutation::from_cycles(5, "(12)");
  const HTClass a{h1, t1};
  const HTClass b{h1.perm_act(p), group(5, {"(23)"})};
  const auto sigma = ht_conjugate_test(amb, a, b);
  REQUIRE(sigma);
  CHECK(*sigma == p);
  CHECK(ht_conjugate_test(amb, a, a)->is_identity());
  CHECK(!ht_conjugate_test(amb, a, HTClass{h1, PermGroup::trivial(5)}));
  CHECK(canonicalize(amb, a.h, a.t) == canonicalize(amb, b.h, b.t));
}

TEST_CASE("conjugacy test agrees with brute force") {
  for (const auto& [text, s] : std::vector<std::pair<const char*, PermGroup>>{
           {"x1^2+x2^2+x3^2", group(3, {"(12)", "(123)"})},
           {"x1^3+x2^3", group(2, {"(12)"})},
           {"x1^3+x2^3+x3^3", group(3, {"(123)"})},
           {"x1^2+x2^2+x3^2+x4^2", group(4, {"(12)(34)", "(13)(24)"})}}) {
    CAPTURE(text);
    const auto x = setup(text, s);
    REQUIRE(x.amb->order() <= 2000);
    const auto all = oracle::all_ht_subgroups(*x.amb);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); j += 3) {
        const bool fast = ht_conjugate_test(*x.amb, all[i], all[j]).has_value();
        CHECK(fast == oracle::naive_conjugate(*x.amb, all[i], all[j]));
        CHECK(fast == (canonicalize(*x.amb, all[i].h, all[i].t) == canonicalize(*x.amb, all[j].h, all[j].t)));
      }
  }
}

TEST_CASE("conjugacy is preserved by duality") {
  const auto x = setup("x1^2*x2+x2^2*x3+x3^2*x1", group(3, {"(123)"}));
  const auto all = oracle::all_ht_subgroups(*x.amb);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      const HTClass da{annihilator(all[i].h, x.dual), all[i].t};
      const HTClass db{annihilator(all[j].h, x.dual), all[j].t};
      CHECK(ht_conjugate_test(*x.amb, all[i], all[j]).has_value() ==
            ht_conjugate_test(*x.dual_amb, da, db).has_value());
    }
}

TEST_CASE("marks") {
  const auto x = setup("x1^2+x2^2+x3^2", group(3, {"(12)", "(123)"}));
  const auto& amb = *x.amb;
  REQUIRE(amb.order() == 48);
  const auto classes = classes_of(amb);
  const HTClass trivial = canonicalize(amb, DiagonalSubgroup::trivial(x.g), PermGroup::trivial(3));
  const HTClass whole = whole_class(amb);
  for (const auto& k : classes) {
    CHECK(mark(amb, k, trivial) == static_cast<std::int64_t>(amb.order() / k.order()));
    CHECK(mark(amb, whole, k) == 1);
  }
  for (const auto& a : classes)
    for (const auto& b : classes) {
      const auto m = mark(amb, a, b);
      CHECK(m == oracle::naive_mark(amb, a, b));
      if (m > 0) CHECK(b.order() <= a.order());
      if (m > 0 && b.order() == a.order()) CHECK(a == b);
    }
  for (const auto& k : classes) CHECK(mark(amb, k, k) > 0);
  // no two classes have the same column of marks
  std::set<std::vector<std::int64_t>> columns;
  for (const auto& b : classes) {
    std::vector<std::int64_t> col;
    for (const auto& a : classes) col.push_back(mark(amb, a, b));
    columns.insert(col);
  }
  CHECK(columns.size() == classes.size());
}

TEST_CASE("marks on a cubic") {
  for (const auto& s : {group(3, {"(12)", "(123)"}), group(3, {"(12)"})}) {
    const auto x = setup("x1^3+x2^3+x3^3", s);
    const auto classes = classes_of(*x.amb);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = 0; j < classes.size(); j += 2)
        CHECK(mark(*x.amb, classes[i], classes[j]) == oracle::naive_mark(*x.amb, classes[i], classes[j]));
  }
}

TEST_CASE("element arithmetic") {
  const auto x = setup(kX1, group(5, {"(12)(34)"}));
  BurnsideElement zero(x.amb);
  std::mt19937_64 rng(7);
  const SubgroupLattice lat(x.amb->s());
  const auto a = oracle::random_element(x.amb, lat, rng);
  CHECK(a + zero == a);
  CHECK(a - a == zero);
  CHECK((a + a) == a.scaled(2));
  BurnsideElement whole(x.amb);
  whole.add(whole_class(*x.amb), 1);
  CHECK(whole.reduced().is_zero());
  CHECK(a.reduced().reduced() == a - whole.scaled(2));
  CHECK(whole.coefficient(whole_class(*x.amb)) == 1);

  const auto y = setup(kX1, group(5, {"(13)(24)"}));
  CHECK_THROWS_AS(a + BurnsideElement(y.amb), Error);
}

TEST_CASE("duality on generators") {
  const auto x = setup(kX1, group(5, {"(12)(34)"}));
  const auto s = x.amb->s();
  BurnsideElement full(x.amb);
  full.add(DiagonalSubgroup::whole(x.g), s, 1);
  BurnsideElement expect(x.dual_amb);
  expect.add(DiagonalSubgroup::trivial(x.dual), s, 1);
  CHECK(saito_dual(full, x.dual_amb) == expect);

  BurnsideElement free(x.amb);
  free.add(DiagonalSubgroup::trivial(x.g), s, 1);
  BurnsideElement expect2(x.dual_amb);
  expect2.add(DiagonalSubgroup::whole(x.dual), s, 1);
  CHECK(saito_dual(free, x.dual_amb) == expect2);
  CHECK(saito_dual(expect2, x.amb) == free);
}

TEST_CASE("duality is an involution") {
  std::mt19937_64 rng(20240601);
  for (const char* name : {"table1_02_83", "table1_03_84", "table1_11_43", "table1_42_73", "table1_80", "table1_82",
                           "table1_07_86", "table1_25_90", "table1_62_91", "table1_26_63"}) {
    CAPTURE(name);
    const auto fx = fixture(name);
    const auto x = setup(fx.spec.polynomial.c_str(), fx.s);
    const auto back = SemidirectProduct::create(DiagonalSubgroup::whole(DiagonalGroup::create(x.f.exponents())), fx.s);
    const SubgroupLattice lat(fx.s);
    for (int i = 0; i < 20; ++i) {
      const auto a = oracle::random_element(x.amb, lat, rng);
      const auto d = saito_dual(a, x.dual_amb);
      const auto dd = saito_dual(d, back);
      CHECK(dd.terms() == a.terms());
      CHECK(saito_dual(d, x.amb) == a);
    }
  }
}

TEST_CASE("duality commutes with induction") {
  std::mt19937_64 rng(11);
  for (const auto& [text, s] : std::vector<std::pair<const char*, PermGroup>>{
           {kX1, group(5, {"(12345)", "(14)(23)"})}, {kX14, group(5, {"(12)(34)", "(13)(24)"})},
           {"x1^3+x2^3+x3^3", group(3, {"(12)", "(123)"})}}) {
    const auto x = setup(text, s);
    const SubgroupLattice lat(s);
    for (const auto& sub : lat.subgroups()) {
      const auto small = setup(text, sub);
      const SubgroupLattice small_lat(sub);
      for (int i = 0; i < 4; ++i) {
        const auto a = oracle::random_element(small.amb, small_lat, rng);
        const auto lhs = saito_dual(induce(a, x.amb), x.dual_amb);
        const auto rhs = induce(saito_dual(a, small.dual_amb), x.dual_amb);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("induction") {
  const auto s3 = group(3, {"(12)", "(123)"});
  const auto big = setup("x1^2+x2^2+x3^2", s3);
  const auto small = setup("x1^2+x2^2+x3^2", PermGroup::trivial(3));
  const auto same = SemidirectProduct::create(DiagonalSubgroup::whole(big.g), s3);
  std::mt19937_64 rng(3);
  const SubgroupLattice lat(s3);
  const auto a = oracle::random_element(same, lat, rng);
  CHECK(induce(a, same).terms() == a.terms());

  // coordinate subgroups that become conjugate under S3 are summed
  const auto amb = SemidirectProduct::create(DiagonalSubgroup::whole(big.g), PermGroup::trivial(3));
  BurnsideElement x(amb);
  x.add(subgroup_generated(big.g, {big.g->parse_element("1/2(1,0,0)")}), PermGroup::trivial(3), 2);
  x.add(subgroup_generated(big.g, {big.g->parse_element("1/2(0,1,0)")}), PermGroup::trivial(3), 3);
  CHECK(x.terms().size() == 2);
  const auto up = induce(x, same);
  REQUIRE(up.terms().size() == 1);
  CHECK(up.terms().begin()->second == 5);
  CHECK_THROWS_AS(induce(up, amb), Error);
}

TEST_CASE("serialization") {
  const auto x = setup(kX1, group(5, {"(12)(34)"}));
  BurnsideElement a(x.amb);
  a.add(subgroup_generated(x.g, {x.g->grading_element()}), x.amb->s(), -3);
  a.add(DiagonalSubgroup::trivial(x.g), PermGroup::trivial(5), 1);
  CHECK(a.to_string() == "[G⋊S/{0}⋊{e}] - 3*[G⋊S/<1/5(1,1,1,1,1)>⋊<(12)(34)>]");
  CHECK(a.to_jsonl() ==
        "{\"orbitType\":\"[G⋊S/{0}⋊{e}]\",\"T\":[],\"H\":[],\"coefficient\":1}\n"
        "{\"orbitType\":\"[G⋊S/<1/5(1,1,1,1,1)>⋊<(12)(34)>]\",\"T\":[\"(12)(34)\"],\"H\":[\"1/5(1,1,1,1,1)\"],"
        "\"coefficient\":-3}\n");
  CHECK(a.to_jsonl() == a.to_jsonl());
}
