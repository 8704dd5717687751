#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace saito {

// Sorted 0-based subset of {0, ..., n-1}.
using IndexSet = std::vector<int>;

IndexSet complement(const IndexSet& set, int n);
IndexSet full_set(int n);
// "{1,3}" in 1-based notation.
std::string index_set_to_string(const IndexSet& set);

// Permutation of {0, ..., n-1}; images()[i] is the image of i.
// Products compose right to left: (a * b)(i) == a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  // Parses 1-based cycle notation such as "(12)(34)", "(1,2,10)" or "()".
  static Permutation from_cycles(int n, std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation conjugated_by(const Permutation& s) const;  // s * this * s^-1

  bool is_identity() const;
  bool is_even() const;
  int cycle_count() const;  // fixed points count as cycles

  IndexSet apply(const IndexSet& set) const;  // sorted image set

  // 1-based cycle notation, "()" for the identity. Digits are concatenated
  // when the degree is below 10, comma separated otherwise.
  std::string to_cycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace saito
