#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "saito/numeric.hpp"

namespace saito {

// Dense row-major matrix of 64-bit integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const;
  std::vector<std::int64_t> row(std::size_t i) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Fraction-free Bareiss elimination.
BigInt determinant(const IntMatrix& m);

// Exact solution of m x = rhs; throws SingularMatrix.
std::vector<Rational> solve(const IntMatrix& m, const std::vector<Rational>& rhs);

// left * m * right == diagonal, with left and right unimodular and
// right * right_inverse == identity. The diagonal entries d_1 | d_2 | ... are
// non-negative.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  IntMatrix right_inverse;

  std::vector<std::int64_t> invariants() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace saito
