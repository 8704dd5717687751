#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saito/diag_group.hpp"
#include "saito/perm_group.hpp"
#include "saito/polynomial.hpp"

namespace saito {

// Flat text fixture:
//
//   # comment
//   [polynomial]
//   x1^5+x2^5+x3^5+x4^5+x5^5
//   [G]            one element per line, "1/m(...)" or J; absent means G_f
//   [dual-G]       optional expected dual subgroup
//   [S]            one cycle-notation generator per line, or a named group
//   [expect]
//   pc = true
//   duality = true
//   golden = name.jsonl
struct FixtureSpec {
  std::string name;
  std::vector<std::string> comments;
  std::string polynomial;
  std::optional<std::vector<std::string>> g;
  std::optional<std::vector<std::string>> dual_g;
  std::vector<std::string> s;
  std::optional<bool> expect_pc;
  std::optional<bool> expect_duality;
  std::optional<std::string> golden;

  std::string serialize() const;
  bool operator==(const FixtureSpec&) const = default;
};

FixtureSpec parse_fixture(std::string_view text, std::string name = "");
FixtureSpec load_fixture(const std::filesystem::path& path);
// All *.fixture files of a directory, sorted by name.
std::vector<std::filesystem::path> list_fixtures(const std::filesystem::path& dir);

// Generators of A3, A4, A5, D10, Z2x2, or nullopt for other names.
std::optional<std::vector<std::string>> named_group(std::string_view name);

PermGroup parse_perm_group(int n, const std::vector<std::string>& generators);

// The fixture resolved against the core types.
struct LoadedFixture {
  FixtureSpec spec;
  InvertiblePolynomial f;
  PermGroup s;
  DiagonalGroupPtr g_f;
  DiagonalSubgroup g;  // the listed G, or all of G_f
};

LoadedFixture resolve_fixture(const FixtureSpec& spec);

// Dual fixture: transposed polynomial, annihilator of G as [G], the
// original G as [dual-G], same S. Throws NotPreserved when G is not
// S-invariant.
FixtureSpec dual_fixture(const LoadedFixture& fixture);

}  // namespace saito
