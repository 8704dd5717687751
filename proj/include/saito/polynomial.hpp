#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "saito/int_matrix.hpp"
#include "saito/numeric.hpp"
#include "saito/perm_group.hpp"

namespace saito {

// Sum of monomials a_i * x^{E_i}; row i of `exponents` is monomial i.
struct ExponentMatrix {
  IntMatrix exponents;  // monomials x variables
  std::vector<Rational> coefficients;

  std::size_t variables() const { return exponents.cols(); }
  std::size_t monomials() const { return exponents.rows(); }

  // Inverse of parse_polynomial: "x1^4*x2+2*x2^5".
  std::string to_string() const;

  bool operator==(const ExponentMatrix&) const = default;
};

// Monomials separated by '+', each an optional "c*" coefficient followed by
// factors xK or xK^P joined by '*'. The variable count is the largest K.
ExponentMatrix parse_polynomial(std::string_view text);

ExponentMatrix from_exponents(const std::vector<std::vector<std::int64_t>>& rows);

enum class BlockKind { Chain, Loop };

// Chain: x1^p1 x2 + x2^p2 x3 + ... + xm^pm.  Loop: ... + xm^pm x1.
// `variables` is in that order, 0-based.
struct AtomicBlock {
  BlockKind kind = BlockKind::Chain;
  std::vector<int> variables;
  std::vector<std::int64_t> exponents;

  std::size_t size() const { return variables.size(); }
  bool operator==(const AtomicBlock&) const = default;
};

// Chain/loop decomposition without the degenerate-loop check. Throws
// NotInvertible when the matrix is not square or no decomposition exists.
std::vector<AtomicBlock> decompose_blocks(const ExponentMatrix& e);

// decompose_blocks, then rejects loops whose exponents are all 1.
std::vector<AtomicBlock> validate_invertible(const ExponentMatrix& e);

// Matrix transpose with unit coefficients.
ExponentMatrix transpose(const ExponentMatrix& e);

// Solution q of E q = (1, ..., 1).
std::vector<Rational> weights(const ExponentMatrix& e);

// Validated invertible polynomial with row i leading variable x_i, so that
// the diagonal holds the block exponents.
class InvertiblePolynomial {
 public:
  InvertiblePolynomial() = default;
  explicit InvertiblePolynomial(const ExponentMatrix& e);
  static InvertiblePolynomial parse(std::string_view text);

  int n() const { return static_cast<int>(matrix_.variables()); }
  const ExponentMatrix& matrix() const { return matrix_; }
  const IntMatrix& exponents() const { return matrix_.exponents; }
  const std::vector<AtomicBlock>& blocks() const { return blocks_; }

  InvertiblePolynomial transposed() const;
  std::vector<Rational> weights() const { return saito::weights(matrix_); }
  std::string to_string() const { return matrix_.to_string(); }

  bool operator==(const InvertiblePolynomial& o) const { return matrix_ == o.matrix_; }

 private:
  ExponentMatrix matrix_;
  std::vector<AtomicBlock> blocks_;
};

// Polynomial in the variables given by `classes` (T-orbits on I, or the
// singletons of I). Monomials are sorted descending lexicographically.
struct RestrictedPolynomial {
  IndexSet support;               // I
  std::vector<IndexSet> classes;  // one new variable per class
  std::vector<std::vector<std::int64_t>> monomials;
  std::vector<Rational> coefficients;
  bool full = true;  // as many monomials as variables

  std::size_t variables() const { return classes.size(); }
  IntMatrix matrix() const;  // monomials x variables
  std::string to_string() const;

  bool operator==(const RestrictedPolynomial&) const = default;
};

RestrictedPolynomial restrict_to(const ExponentMatrix& e, const IndexSet& set);

// Restriction to the T-fixed part of C^I. Throws NotPreserved when T does
// not preserve I or f^I.
RestrictedPolynomial diagonal_restrict(const ExponentMatrix& e, const IndexSet& set,
                                       const PermGroup& t);

// True when every monomial of f is mapped by p to a monomial of f with the
// same coefficient.
bool preserves_polynomial(const ExponentMatrix& e, const Permutation& p);

enum class BlockActionType { First, Second };

struct BlockOrbit {
  std::vector<std::size_t> blocks;  // indices into the block list
  BlockActionType type = BlockActionType::First;
  std::size_t period = 0;          // l, for second type
  std::size_t rotation_order = 0;  // k = m / l, for second type
};

struct BlockActionReport {
  std::vector<BlockOrbit> orbits;
};

// Throws NotInvariant when some generator does not preserve f and
// FlipSymmetry when a loop is reflected.
BlockActionReport check_S_invariance(const ExponentMatrix& e,
                                     const std::vector<AtomicBlock>& blocks,
                                     const PermGroup& s);
BlockActionReport check_S_invariance(const InvertiblePolynomial& f, const PermGroup& s);

}  // namespace saito
