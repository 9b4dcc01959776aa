#pragma once

// Standard small permutation groups.

#include "wadefect/finite_group.hpp"

#include <numeric>
#include <vector>

namespace wadefect {

/// Permutation of {0..degree-1} from disjoint (or not) cycles, applied
/// right to left.
inline Permutation permutation_from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    for (std::size_t x : c)
      if (x >= degree) throw InputError("cycle entry exceeds the degree");
    Permutation step(degree);
    std::iota(step.begin(), step.end(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) step[c[i]] = c[(i + 1) % c.size()];
    Permutation next(degree);
    for (std::size_t x = 0; x < degree; ++x) next[x] = step[p[x]];
    p = next;
  }
  return p;
}

namespace groups {

inline FiniteGroup cyclic(std::size_t n) {
  if (n <= 1) return group_from_generators(1, {}, {});
  std::vector<std::size_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  return group_from_generators(n, {permutation_from_cycles(n, {cycle})}, {"s"});
}

/// Z/2 x Z/2 acting regularly on four points.
inline FiniteGroup klein_four() {
  return group_from_generators(4, {permutation_from_cycles(4, {{0, 1}, {2, 3}}), permutation_from_cycles(4, {{0, 2}, {1, 3}})},
                               {"a", "b"});
}

inline FiniteGroup symmetric3() {
  return group_from_generators(3, {permutation_from_cycles(3, {{0, 1}}), permutation_from_cycles(3, {{0, 1, 2}})}, {"t", "r"});
}

/// Dihedral group of order 2n acting on the n-gon.
inline FiniteGroup dihedral(std::size_t n) {
  std::vector<std::size_t> rot(n);
  std::iota(rot.begin(), rot.end(), 0);
  Permutation refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return group_from_generators(n, {permutation_from_cycles(n, {rot}), refl}, {"r", "f"});
}

/// The affine group x -> a x + b of F_5 (order 20); its Sylow subgroups
/// are cyclic of orders 4 and 5.
inline FiniteGroup metacyclic20() {
  return group_from_generators(5, {permutation_from_cycles(5, {{0, 1, 2, 3, 4}}), permutation_from_cycles(5, {{1, 2, 4, 3}})},
                               {"t", "m"});
}

inline FiniteGroup quaternion8() {
  return group_from_generators(8, {permutation_from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                                   permutation_from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})},
                               {"i", "j"});
}

inline FiniteGroup alternating4() {
  return group_from_generators(4, {permutation_from_cycles(4, {{0, 1, 2}}), permutation_from_cycles(4, {{0, 1}, {2, 3}})},
                               {"c", "d"});
}

/// Z/m x Z/n on m + n points.
inline FiniteGroup cyclic_product(std::size_t m, std::size_t n) {
  std::vector<std::size_t> a(m), b(n);
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), m);
  return group_from_generators(m + n, {permutation_from_cycles(m + n, {a}), permutation_from_cycles(m + n, {b})}, {"x", "y"});
}

inline FiniteGroup elementary_abelian2(std::size_t rank) {
  std::vector<Permutation> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) {
    gens.push_back(permutation_from_cycles(2 * rank, {{2 * i, 2 * i + 1}}));
    names.push_back("x" + std::to_string(i));
  }
  return group_from_generators(2 * rank, gens, names);
}

}  // namespace groups
}  // namespace wadefect
