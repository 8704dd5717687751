#pragma once

#include <filesystem>
#include <string>

#include "saito/fixture.hpp"

#ifndef SAITO_FIXTURE_DIR
#define SAITO_FIXTURE_DIR "fixtures"
#endif

namespace saito::test {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(SAITO_FIXTURE_DIR) / (name + ".fixture");
}

inline LoadedFixture fixture(const std::string& name) {
  return resolve_fixture(load_fixture(fixture_path(name)));
}

inline PermGroup group(int n, std::initializer_list<const char*> gens) {
  std::vector<Permutation> ps;
  for (const char* g : gens) ps.push_back(Permutation::from_cycles(n, g));
  return PermGroup::from_generators(n, ps);
}

inline const char* kX1 = "x1^5+x2^5+x3^5+x4^5+x5^5";
inline const char* kX14 = "x1^4*x2+x2^4*x1+x3^4*x4+x4^4*x3+x5^5";
inline const char* kX15 = "x1^4*x2+x2^4*x3+x3^4*x4+x4^4*x5+x5^4*x1";

}  // namespace saito::test
