#include <doctest.h>

#include "saito/errors.hpp"
#include "saito/polynomial.hpp"
#include "support.hpp"

using namespace saito;
using namespace saito::test;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

std::vector<Rational> times(const IntMatrix& m, const std::vector<Rational>& q) {
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * q[j];
  return out;
}

}  // namespace

TEST_CASE("parse fermat quintic") {
  const auto e = parse_polynomial(kX1);
  CHECK(e.exponents == IntMatrix::from_rows({{5, 0, 0, 0, 0}, {0, 5, 0, 0, 0}, {0, 0, 5, 0, 0},
                                             {0, 0, 0, 5, 0}, {0, 0, 0, 0, 5}}));
  CHECK(e.to_string() == kX1);
  CHECK(parse_polynomial("x1^2").exponents == IntMatrix::from_rows({{2}}));
}

TEST_CASE("parse loop gives circulant") {
  const auto e = parse_polynomial(kX15);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(e.exponents(i, j) == (i == j ? 4 : j == (i + 1) % 5 ? 1 : 0));
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_polynomial("x1^5+"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_polynomial("x1^^2"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_polynomial("x1^2+x1^2"); }) == ErrorCode::RepeatedMonomial);
  CHECK(code_of([] { parse_polynomial("x1*x2+x2*x1"); }) == ErrorCode::RepeatedMonomial);
  // count mismatch is left to validation
  CHECK(parse_polynomial("x1^2+x2^3+x1*x2").monomials() == 3);
  CHECK(code_of([] { validate_invertible(parse_polynomial("x1^2+x2^3+x1*x2")); }) == ErrorCode::NotInvertible);
}

TEST_CASE("coefficients are carried") {
  const auto e = parse_polynomial("2*x1^3+1/2*x2^3");
  CHECK(e.coefficients == std::vector<Rational>{2, Rational(1, 2)});
  CHECK(parse_polynomial(e.to_string()) == e);
}

TEST_CASE("block decomposition") {
  const auto fermat = validate_invertible(parse_polynomial(kX1));
  CHECK(fermat.size() == 5);
  for (const auto& b : fermat) {
    CHECK(b.kind == BlockKind::Chain);
    CHECK(b.size() == 1);
  }

  const auto x14 = validate_invertible(parse_polynomial(kX14));
  REQUIRE(x14.size() == 3);
  CHECK(x14[0] == AtomicBlock{BlockKind::Loop, {0, 1}, {4, 4}});
  CHECK(x14[1] == AtomicBlock{BlockKind::Loop, {2, 3}, {4, 4}});
  CHECK(x14[2] == AtomicBlock{BlockKind::Chain, {4}, {5}});

  const auto chain = validate_invertible(parse_polynomial("x1^2*x2+x2^3"));
  CHECK(chain == std::vector{AtomicBlock{BlockKind::Chain, {0, 1}, {2, 3}}});
}

TEST_CASE("degenerate and singular inputs") {
  CHECK(code_of([] { validate_invertible(parse_polynomial("x1*x2+x2*x3+x3*x1")); }) == ErrorCode::DegenerateLoop);
  CHECK(decompose_blocks(parse_polynomial("x1*x2+x2*x3+x3*x1")).size() == 1);
  CHECK(code_of([] { validate_invertible(parse_polynomial("x1^2*x2+x1*x2^2+x3^2*x1")); }) ==
        ErrorCode::NotInvertible);
}

TEST_CASE("transpose") {
  const auto fermat = parse_polynomial(kX1);
  CHECK(transpose(fermat) == fermat);

  const auto chain = parse_polynomial("x1^2*x2+x2^3");
  CHECK(transpose(chain).exponents == IntMatrix::from_rows({{2, 0}, {1, 3}}));
  CHECK(transpose(chain).to_string() == "x1^2+x1*x2^3");

  // reversing the cycle carries the transposed loop back onto the loop
  const auto loop = InvertiblePolynomial::parse(kX15);
  const auto t = loop.transposed();
  const Permutation rev = Permutation::from_cycles(5, "(15)(24)");
  ExponentMatrix moved = t.matrix();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) moved.exponents(i, rev(j)) = t.exponents()(i, j);
  CHECK(InvertiblePolynomial(moved) == loop);
  CHECK(!(t.exponents() == loop.exponents()));
}

TEST_CASE("transpose is an involution and preserves block types") {
  for (const char* text : {kX1, kX14, kX15, "x1^2*x2+x2^3", "x1^2*x2+x1*x2^3", "x1^3*x2+x2^2*x3+x3^4+x4^2*x5+x5^3*x4",
                           "x1^2*x2+x2^2*x3+x3^2"}) {
    CAPTURE(text);
    const auto e = parse_polynomial(text);
    const auto t = transpose(e);
    CHECK(transpose(t).exponents == e.exponents);
    const auto a = validate_invertible(e);
    const auto b = validate_invertible(t);
    REQUIRE(a.size() == b.size());
    std::size_t loops_a = 0, loops_b = 0, chain_len_a = 0, chain_len_b = 0;
    for (const auto& x : a) (x.kind == BlockKind::Loop ? loops_a : chain_len_a) += x.size();
    for (const auto& x : b) (x.kind == BlockKind::Loop ? loops_b : chain_len_b) += x.size();
    CHECK(loops_a == loops_b);
    CHECK(chain_len_a == chain_len_b);
    // chains reverse: the tail variable becomes the head
    for (const auto& x : a)
      if (x.kind == BlockKind::Chain && x.size() > 1) {
        bool found = false;
        for (const auto& y : b)
          if (y.kind == BlockKind::Chain && y.size() == x.size())
            found |= std::equal(x.variables.rbegin(), x.variables.rend(), y.variables.begin());
        CHECK(found);
      }
  }
}

TEST_CASE("weights") {
  CHECK(weights(parse_polynomial(kX1)) == std::vector<Rational>(5, Rational(1, 5)));
  CHECK(weights(parse_polynomial(kX14)) == std::vector<Rational>(5, Rational(1, 5)));
  CHECK(weights(parse_polynomial("x1^2*x2+x2^3")) == std::vector<Rational>{Rational(1, 3), Rational(1, 3)});
  for (const char* text : {kX15, "x1^3*x2+x2^2*x3+x3^4+x4^2*x5+x5^3*x4", "x1^2*x2+x1*x2^3"}) {
    const auto e = parse_polynomial(text);
    CHECK(times(e.exponents, weights(e)) == std::vector<Rational>(e.variables(), 1));
  }
  CHECK(code_of([] { weights(from_exponents({{1, 1}, {1, 1}})); }) == ErrorCode::SingularMatrix);
}

TEST_CASE("restriction to coordinate subspaces") {
  const auto x1 = restrict_to(parse_polynomial(kX1), {0, 2});
  CHECK(x1.full);
  CHECK(x1.to_string() == "x1^5+x3^5");

  const auto x14 = restrict_to(parse_polynomial(kX14), {0, 4});
  CHECK(!x14.full);
  CHECK(x14.monomials.size() == 1);
  CHECK(x14.to_string() == "x5^5");

  const auto x15 = restrict_to(parse_polynomial(kX15), {0, 1});
  CHECK(!x15.full);
  CHECK(x15.to_string() == "x1^4*x2");

  const auto empty = restrict_to(parse_polynomial(kX1), {});
  CHECK(empty.full);
  CHECK(empty.variables() == 0);
  CHECK(empty.monomials.empty());
}

TEST_CASE("full restriction is dual to full restriction of the complement") {
  for (const char* text : {kX1, kX14, kX15, "x1^2*x2+x2^3", "x1^3*x2+x2^2*x3+x3^4+x4^2*x5+x5^3*x4"}) {
    const auto e = parse_polynomial(text);
    const auto t = transpose(e);
    const int n = static_cast<int>(e.variables());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      IndexSet set;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) set.push_back(i);
      CAPTURE(text);
      CAPTURE(mask);
      CHECK(restrict_to(e, set).full == restrict_to(t, complement(set, n)).full);
    }
  }
}

TEST_CASE("restriction to fixed loci") {
  const auto quad = diagonal_restrict(parse_polynomial("x1^3+x2^3"), {0, 1}, group(2, {"(12)"}));
  CHECK(quad.full);
  CHECK(quad.variables() == 1);
  CHECK(quad.monomials == std::vector<std::vector<std::int64_t>>{{3}});
  CHECK(quad.coefficients == std::vector<Rational>{2});

  const auto e = parse_polynomial(kX14);
  const auto x14 = diagonal_restrict(e, {0, 1, 2, 3}, group(5, {"(12)(34)"}));
  CHECK(x14.full);
  CHECK(x14.classes == std::vector<IndexSet>{{0, 1}, {2, 3}});
  CHECK(x14.monomials == std::vector<std::vector<std::int64_t>>{{5, 0}, {0, 5}});
  CHECK(x14.coefficients == std::vector<Rational>{2, 2});

  const auto x14b = diagonal_restrict(e, {0, 1, 2, 3}, group(5, {"(13)(24)"}));
  CHECK(x14b.classes == std::vector<IndexSet>{{0, 2}, {1, 3}});
  CHECK(x14b.monomials == std::vector<std::vector<std::int64_t>>{{4, 1}, {1, 4}});
  CHECK(x14b.coefficients == std::vector<Rational>{2, 2});

  CHECK(code_of([&] { diagonal_restrict(e, {0, 1, 2, 3}, group(5, {"(13)"})); }) == ErrorCode::NotPreserved);
  CHECK(code_of([&] { diagonal_restrict(e, {0, 1}, group(5, {"(13)(24)"})); }) == ErrorCode::NotPreserved);
}

TEST_CASE("trivial group restriction equals coordinate restriction") {
  for (const char* text : {kX1, kX14, kX15}) {
    const auto e = parse_polynomial(text);
    for (unsigned mask = 0; mask < 32; ++mask) {
      IndexSet set;
      for (int i = 0; i < 5; ++i)
        if (mask >> i & 1) set.push_back(i);
      const auto a = restrict_to(e, set);
      const auto b = diagonal_restrict(e, set, PermGroup::trivial(5));
      CHECK(a.monomials == b.monomials);
      CHECK(a.full == b.full);
      CHECK(a.coefficients == b.coefficients);
    }
  }
}

TEST_CASE("merged coefficients are positive integers") {
  const auto e = parse_polynomial(kX1);
  const auto s5 = group(5, {"(12345)", "(12)"});
  for (const auto& t : s5.elements()) {
    const auto rest = diagonal_restrict(e, full_set(5), PermGroup::from_generators(5, {t}));
    for (const auto& c : rest.coefficients) {
      CHECK(c > 0);
      CHECK(denominator(c) == 1);
    }
  }
}

TEST_CASE("symmetric group actions") {
  const auto fermat = parse_polynomial(kX1);
  const auto blocks = validate_invertible(fermat);
  const auto report = check_S_invariance(fermat, blocks, group(5, {"(12345)", "(12)"}));
  for (const auto& o : report.orbits) CHECK(o.type == BlockActionType::First);

  const auto loop = InvertiblePolynomial::parse(kX15);
  const auto rot = check_S_invariance(loop, group(5, {"(12345)"}));
  REQUIRE(rot.orbits.size() == 1);
  CHECK(rot.orbits[0].type == BlockActionType::Second);
  CHECK(rot.orbits[0].period == 1);
  CHECK(rot.orbits[0].rotation_order == 5);

  const auto x14 = InvertiblePolynomial::parse(kX14);
  const auto two = check_S_invariance(x14, group(5, {"(12)(34)"}));
  std::size_t rotated = 0;
  for (const auto& o : two.orbits)
    if (o.type == BlockActionType::Second) {
      ++rotated;
      CHECK(o.period == 1);
      CHECK(o.rotation_order == 2);
    }
  CHECK(rotated == 2);

  const auto swap = check_S_invariance(x14, group(5, {"(13)(24)"}));
  for (const auto& o : swap.orbits) CHECK(o.type == BlockActionType::First);
}

TEST_CASE("rotation period") {
  const auto f = InvertiblePolynomial::parse("x1^2*x2+x2^3*x3+x3^2*x4+x4^3*x1");
  const auto r = check_S_invariance(f, group(4, {"(13)(24)"}));
  REQUIRE(r.orbits.size() == 1);
  CHECK(r.orbits[0].type == BlockActionType::Second);
  CHECK(r.orbits[0].period == 2);
  CHECK(r.orbits[0].rotation_order == 2);
}

TEST_CASE("invariance errors") {
  const auto x14 = InvertiblePolynomial::parse(kX14);
  CHECK(code_of([&] { check_S_invariance(x14, group(5, {"(15)"})); }) == ErrorCode::NotInvariant);
  const auto chain = InvertiblePolynomial::parse("x1^2*x2+x2^2");
  CHECK(code_of([&] { check_S_invariance(chain, group(2, {"(12)"})); }) == ErrorCode::NotInvariant);
  const auto e = parse_polynomial("x1*x2+x2*x3+x3*x1");
  CHECK(code_of([&] { check_S_invariance(e, decompose_blocks(e), group(3, {"(13)"})); }) ==
        ErrorCode::FlipSymmetry);
  const auto loop = parse_polynomial("x1^2*x2+x2^2*x3+x3^2*x1");
  CHECK(code_of([&] { check_S_invariance(loop, decompose_blocks(loop), group(3, {"(13)"})); }) ==
        ErrorCode::NotInvariant);
}

TEST_CASE("aligned rows") {
  const auto f = InvertiblePolynomial::parse("x2^3+x1^2*x2");
  CHECK(f.exponents() == IntMatrix::from_rows({{2, 1}, {0, 3}}));
  const auto g = InvertiblePolynomial::parse(kX15);
  CHECK(g.transposed().transposed() == g);
  CHECK(preserves_polynomial(g.matrix(), Permutation::from_cycles(5, "(12345)")));
  CHECK(!preserves_polynomial(g.matrix(), Permutation::from_cycles(5, "(12)")));
}
