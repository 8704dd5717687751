#pragma once

// Slow reference implementations used to cross-check the library.

#include <cstdint>
#include <random>
#include <vector>

#include "saito/burnside.hpp"
#include "saito/diag_group.hpp"
#include "saito/perm_group.hpp"

namespace saito::oracle {

// Number of cosets x K' fixed by K, from an explicit list of all cosets.
std::int64_t naive_mark(const SemidirectProduct& g, const HTClass& k_prime, const HTClass& k);

// Whether some element of G x| S conjugates one subgroup onto the other.
bool naive_conjugate(const SemidirectProduct& g, const HTClass& a, const HTClass& b);

// Every subgroup of a diagonal group.
std::vector<DiagonalSubgroup> all_subgroups(const DiagonalSubgroup& g);

// Every subgroup H x| T of the ambient, not reduced up to conjugacy.
std::vector<HTClass> all_ht_subgroups(const SemidirectProduct& g);

// Subgroups counted as distinct closures of generating subsets (all
// subsets for |S| <= 12, at most three generators above).
std::size_t subset_closure_subgroup_count(const PermGroup& s);
std::size_t subset_closure_class_count(const PermGroup& s);

// chi of {x^m + y^m = 1} inside (C*)^2 from the genus of the projective
// curve: 2 - 2g - m points at infinity - 2m points on the axes.
std::int64_t fermat_curve_torus_chi(std::int64_t m);

// Random well-formed H x| T: T drawn from the subgroups of S, H generated
// by the T-orbits of up to two random elements of G.
HTClass random_ht_class(const SemidirectProduct& g, const SubgroupLattice& s, std::mt19937_64& rng);

// Combination of up to `terms` random classes with coefficients in [-5, 5].
BurnsideElement random_element(const SemidirectPtr& g, const SubgroupLattice& s, std::mt19937_64& rng,
                               std::size_t terms = 4);

}  // namespace saito::oracle
