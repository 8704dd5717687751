#include "saito/int_matrix.hpp"

#include <utility>

#include "saito/errors.hpp"

namespace saito {

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

IntMatrix to_small(const BigMatrix& m, std::size_t rows, std::size_t cols) {
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = to_int64(m[i][j]);
  return out;
}

BigMatrix big_identity(std::size_t n) {
  BigMatrix out(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  BigMatrix out(a.rows(), std::vector<BigInt>(b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out[i][j] += BigInt(a(i, k)) * b(k, j);
  return to_small(out, a.rows(), b.cols());
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigMatrix a = to_big(m);
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Rational> solve(const IntMatrix& m, const std::vector<Rational>& rhs) {
  if (!m.is_square() || rhs.size() != m.rows())
    throw Error(ErrorCode::InvalidArgument, "solve: shape mismatch");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    std::swap(a[col], a[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational factor = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

std::vector<std::int64_t> SmithForm::invariants() const {
  std::vector<std::int64_t> out;
  const std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < k; ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  BigMatrix a = to_big(m);
  BigMatrix left = big_identity(rows);
  BigMatrix right = big_identity(cols);
  BigMatrix right_inv = big_identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(left[i], left[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : right) std::swap(r[i], r[j]);
    std::swap(right_inv[i], right_inv[j]);
  };
  // row_i -= q * row_t
  auto row_sub = [&](std::size_t i, std::size_t t, const BigInt& q) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[t][j];
    for (std::size_t j = 0; j < rows; ++j) left[i][j] -= q * left[t][j];
  };
  // col_j -= q * col_t
  auto col_sub = [&](std::size_t j, std::size_t t, const BigInt& q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
    for (std::size_t i = 0; i < cols; ++i) right[i][j] -= q * right[i][t];
    for (std::size_t k = 0; k < cols; ++k) right_inv[t][k] += q * right_inv[j][k];
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      BigInt best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          BigInt v = abs(a[i][j]);
          if (pi == rows || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;  // remaining block is zero
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        row_sub(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        col_sub(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      // row_t += row_bad
      row_sub(t, bad, BigInt(-1));
    }
    if (a[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
      for (std::size_t j = 0; j < rows; ++j) left[t][j] = -left[t][j];
    }
  }
  return SmithForm{to_small(a, rows, cols), to_small(left, rows, rows),
                   to_small(right, cols, cols), to_small(right_inv, cols, cols)};
}

}  // namespace saito
