#include <doctest.h>

#include "oracle.hpp"
#include "saito/errors.hpp"
#include "saito/fixture.hpp"
#include "saito/perm_group.hpp"
#include "support.hpp"

using namespace saito;
using namespace saito::test;

namespace {

PermGroup named(int n, const char* name) { return parse_perm_group(n, *named_group(name)); }

PermGroup s5() { return group(5, {"(12345)", "(12)"}); }

}  // namespace

TEST_CASE("permutations") {
  const auto a = Permutation::from_cycles(5, "(123)");
  const auto b = Permutation::from_cycles(5, "(12)");
  CHECK((a * b)(0) == a(b(0)));
  CHECK((a * b).to_cycles() == "(13)");
  CHECK(a.inverse().to_cycles() == "(132)");
  CHECK(b.conjugated_by(a).to_cycles() == "(23)");
  CHECK(a.is_even());
  CHECK(!b.is_even());
  CHECK(Permutation::from_cycles(12, "(1,2,10)").to_cycles() == "(1,2,10)");
  CHECK(Permutation::from_cycles(5, "()").is_identity());
  CHECK_THROWS_AS(Permutation::from_cycles(5, "(16)"), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(5, "(121)"), Error);
}

TEST_CASE("group closure") {
  CHECK(group(5, {"(12345)", "(14)(23)"}).order() == 10);
  CHECK(group(5, {"(12345)", "(12)(34)"}).order() == 60);
  CHECK(PermGroup::from_generators(5, {}).order() == 1);
  CHECK(s5().order() == 120);
  CHECK(named(5, "A5").order() == 60);
  CHECK(named(4, "A4").order() == 12);
  CHECK(named(3, "A3").order() == 3);
  CHECK(named(5, "D10").order() == 10);
  CHECK(named(4, "Z2x2").order() == 4);
  CHECK_THROWS_AS(PermGroup::from_generators(5, s5().generators(), 100), Error);
}

TEST_CASE("subgroup lattices") {
  const SubgroupLattice klein(named(4, "Z2x2"));
  CHECK(klein.subgroups().size() == 5);
  CHECK(klein.classes().size() == 5);

  const SubgroupLattice prime(group(5, {"(12345)"}));
  CHECK(prime.subgroups().size() == 2);

  const SubgroupLattice a5(named(5, "A5"));
  CHECK(a5.subgroups().size() == 59);
  CHECK(a5.classes().size() == 9);

  const SubgroupLattice sym(s5());
  CHECK(sym.subgroups().size() == 156);
  CHECK(sym.classes().size() == 19);
}

TEST_CASE("lattice counts agree with subset closures") {
  const std::vector<PermGroup> groups = {
      named(4, "Z2x2"), named(4, "A4"),          named(5, "D10"),           group(3, {"(123)", "(12)"}),
      group(4, {"(1234)", "(13)"}), group(5, {"(123)(45)"}), group(4, {"(1234)", "(12)"}),
      group(5, {"(12)(34)", "(13)(24)", "(5)"}), group(6, {"(12)", "(34)", "(56)"}),
      group(6, {"(123)", "(456)"})};
  for (const auto& g : groups) {
    CAPTURE(g.to_string());
    REQUIRE(g.order() <= 24);
    const SubgroupLattice lat(g);
    CHECK(lat.subgroups().size() == oracle::subset_closure_subgroup_count(g));
    CHECK(lat.classes().size() == oracle::subset_closure_class_count(g));
  }
  const auto a5 = named(5, "A5");
  CHECK(oracle::subset_closure_class_count(a5) == 9);
}

TEST_CASE("lattice structure") {
  const SubgroupLattice lat(group(4, {"(1234)", "(12)"}));
  for (std::size_t i = 0; i < lat.subgroups().size(); ++i) {
    const auto& h = lat.subgroups()[i];
    CHECK(lat.normalizer(i).is_subgroup_of(lat.group()));
    CHECK(h.is_subgroup_of(lat.normalizer(i)));
    for (const auto& g : lat.group().elements()) {
      const bool normalizes = h.conjugated_by(g) == h;
      CHECK(normalizes == lat.normalizer(i).contains(g));
      CHECK(lat.class_of(*lat.index_of(h.conjugated_by(g))) == lat.class_of(i));
    }
  }
  for (const auto& cls : lat.classes()) {
    for (auto m : cls.members) CHECK(!(lat.subgroups()[m] < lat.subgroups()[cls.representative]));
    CHECK(lat.group().order() == cls.members.size() * cls.normalizer.order());
  }
  // class of the Klein four-group in S4 that is normal
  const auto v4 = named(4, "Z2x2");
  CHECK(lat.classes()[lat.class_of(v4)].members.size() == 1);
}

TEST_CASE("orbit counts") {
  const auto t = group(5, {"(12)(34)"});
  CHECK(orbit_count(t, full_set(5)) == 3);
  CHECK(orbit_count(PermGroup::trivial(5), {0, 2, 4}) == 3);
  CHECK(orbit_count(named(5, "D10"), full_set(5)) == 1);
  CHECK_THROWS_AS(orbit_count(t, {0, 2}), Error);
}

TEST_CASE("orbit counts are conjugation invariant") {
  const auto g = s5();
  const SubgroupLattice lat(group(5, {"(123)", "(45)"}));
  for (const auto& t : lat.subgroups())
    for (unsigned mask = 0; mask < 32; ++mask) {
      IndexSet set;
      for (int i = 0; i < 5; ++i)
        if (mask >> i & 1) set.push_back(i);
      if (!t.preserves(set)) continue;
      for (std::size_t k = 0; k < g.order(); k += 13) {
        const auto& s = g.elements()[k];
        CHECK(orbit_count(t.conjugated_by(s), s.apply(set)) == orbit_count(t, set));
      }
    }
}

TEST_CASE("parity condition examples") {
  CHECK(pc_check(named(3, "A3")).satisfies);
  const auto klein = pc_check(named(4, "Z2x2"));
  CHECK(!klein.satisfies);
  REQUIRE(klein.witness);
  CHECK(*klein.witness == named(4, "Z2x2"));
  CHECK(!pc_check(named(4, "A4")).satisfies);
  CHECK(pc_check(named(5, "D10")).satisfies);
  CHECK(!pc_check(named(5, "A5")).satisfies);
  for (int n = 1; n <= 6; ++n) CHECK(pc_check(PermGroup::trivial(n)).satisfies);
  CHECK(!pc_check(group(5, {"(12)(34)", "(13)(24)"})).satisfies);
}

TEST_CASE("parity condition implies even") {
  const SubgroupLattice lat(s5());
  std::size_t pc = 0;
  for (const auto& t : lat.subgroups()) {
    const bool holds = pc_check(t).satisfies;
    pc += holds;
    if (holds) CHECK(is_alternating_subgroup(t));
  }
  CHECK(pc > 1);
  CHECK(!is_alternating_subgroup(group(5, {"(12)"})));
  CHECK(is_alternating_subgroup(named(5, "D10")));
}

TEST_CASE("cyclic groups satisfy the parity condition iff the generator is even") {
  const auto s6 = group(6, {"(123456)", "(12)"});
  REQUIRE(s6.order() == 720);
  for (const auto& g : s6.elements()) {
    const auto c = PermGroup::from_generators(6, {g});
    CHECK(pc_check(c).satisfies == g.is_even());
  }
}

TEST_CASE("orbits on subsets") {
  CHECK(orbits_on_subsets(PermGroup::trivial(3)).size() == 8);
  const auto two = orbits_on_subsets(group(5, {"(12)(34)"}));
  std::size_t total = 0;
  for (const auto& o : two) total += o.size;
  CHECK(total == 32);
  bool merged = false;
  for (const auto& o : two)
    if (o.representative == IndexSet{0}) merged = o.size == 2;
  CHECK(merged);
  CHECK(orbits_on_subsets(s5()).size() == 6);

  const auto g = named(5, "D10");
  for (const auto& o : orbits_on_subsets(g)) {
    CHECK(o.stabilizer == g.setwise_stabilizer(o.representative));
    CHECK(o.stabilizer == g.setwise_stabilizer(complement(o.representative, 5)));
    CHECK(o.size * o.stabilizer.order() == g.order());
  }
}

TEST_CASE("coloured hasse diagrams") {
  const auto one = coloured_hasse(PermGroup::trivial(3), {0, 1, 2});
  CHECK(one.nodes.size() == 1);
  CHECK(one.colours == std::vector<int>{0});

  const auto two = coloured_hasse(group(2, {"(12)"}), {0, 1});
  CHECK(two.nodes.size() == 2);
  CHECK(two.colours == std::vector<int>{0, 1});
  CHECK(two.edges.size() == 1);

  const auto klein = coloured_hasse(named(4, "Z2x2"), full_set(4));
  CHECK(klein.nodes.size() == 5);
  CHECK(klein.edges.size() == 6);
}

TEST_CASE("coloured hasse diagrams of complementary strata agree under the parity condition") {
  for (const auto& s : {named(5, "D10"), group(5, {"(12345)"}), group(4, {"(12)(34)"}), named(3, "A3"),
                        group(6, {"(123)", "(456)"})}) {
    REQUIRE(pc_check(s).satisfies);
    const int n = s.degree();
    for (const auto& o : orbits_on_subsets(s)) {
      const auto bar = complement(o.representative, n);
      CHECK(coloured_hasse(o.stabilizer, o.representative) == coloured_hasse(o.stabilizer, bar));
      // relative parities over every subgroup of the stabilizer
      const SubgroupLattice lat(o.stabilizer);
      const auto base_i = orbit_count(o.stabilizer, o.representative);
      const auto base_bar = orbit_count(o.stabilizer, bar);
      for (const auto& t : lat.subgroups())
        CHECK((orbit_count(t, o.representative) - base_i) % 2 == (orbit_count(t, bar) - base_bar) % 2);
    }
  }
  // fails without it
  const auto klein = named(4, "Z2x2");
  CHECK(!(coloured_hasse(klein, {0, 1, 2, 3}) == coloured_hasse(klein, {})));
}

TEST_CASE("subgroup queries") {
  const auto g = named(5, "D10");
  CHECK(g.to_string() == "<(25)(34),(12)(35)>");
  CHECK(PermGroup::trivial(3).to_string() == "{e}");
  CHECK(g.setwise_stabilizer({0}).order() == 2);
  CHECK(g.preserves(full_set(5)));
  CHECK(!g.preserves({0, 1}));
  const SubgroupLattice lat(g);
  const auto r = group(5, {"(25)(34)"});
  const auto idx = *lat.index_of(r);
  CHECK(lat.subconjugate(lat.class_of(std::size_t{0}), lat.class_of(idx)));
  CHECK(lat.contains(lat.subgroups().size() - 1, idx));
}
