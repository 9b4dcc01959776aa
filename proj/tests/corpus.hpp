#pragma once

// Random lattices for property tests: sums of trivial, sign, permutation,
// augmentation and norm-one pieces, their duals, optionally conjugated by a
// unimodular matrix. Generator matrices keep entries in [-2, 2].

#include "wadefect/g_lattice.hpp"
#include "wadefect/groups.hpp"

#include <random>
#include <vector>

namespace corpus {

using namespace wadefect;

inline std::vector<FiniteGroup> cyclic_groups(std::size_t max_order) {
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= max_order; ++n) out.push_back(groups::cyclic(n));
  return out;
}

inline std::vector<FiniteGroup> metacyclic_catalog() {
  std::vector<FiniteGroup> out;
  for (std::size_t n = 2; n <= 12; ++n) out.push_back(groups::cyclic(n));
  out.push_back(groups::symmetric3());
  out.push_back(groups::dihedral(5));
  out.push_back(groups::metacyclic20());
  return out;
}

/// Small groups of order at most 16.
inline std::vector<FiniteGroup> small_groups() {
  return {groups::cyclic(1),       groups::cyclic(2),      groups::cyclic(3),          groups::cyclic(4),
          groups::cyclic(6),       groups::klein_four(),   groups::symmetric3(),       groups::dihedral(4),
          groups::quaternion8(),   groups::dihedral(5),    groups::alternating4(),     groups::cyclic_product(2, 4),
          groups::elementary_abelian2(3), groups::dihedral(6), groups::cyclic_product(4, 4)};
}

inline bool entries_small(const std::vector<IntegerMatrix>& ms) {
  for (const auto& m : ms)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) > 2 || m(i, j) < -2) return false;
  return true;
}

/// Sign of the permutation action, or trivial for groups without one.
inline GLattice sign_lattice(const FiniteGroup& g) {
  const auto& perms = g.permutations();
  std::vector<IntegerMatrix> action;
  for (std::size_t a = 0; a < g.order(); ++a) {
    int sign = 1;
    if (perms) {
      const auto& p = (*perms)[a];
      std::vector<bool> seen(p.size(), false);
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x]) continue;
        std::size_t len = 0;
        for (std::size_t y = x; !seen[y]; y = p[y], ++len) seen[y] = true;
        if (len % 2 == 0) sign = -sign;
      }
    }
    action.push_back(IntegerMatrix{{sign}});
  }
  return GLattice::from_full_action(g, std::move(action), 1);
}

/// Kernel of the degree map on Z[g/h] (basis e_c - e_0) or its quotient by
/// the sum of the basis (images of e_c, c >= 1).
inline GLattice coset_piece(const GLattice& perm, bool kernel) {
  const std::size_t k = perm.rank();
  if (k <= 1) return GLattice(perm.group(), 0);
  std::vector<IntegerMatrix> action;
  for (std::size_t x = 0; x < perm.group().order(); ++x) {
    const auto& p = perm.action(x);
    auto image = [&](std::size_t c) {
      for (std::size_t i = 0; i < k; ++i)
        if (p(i, c) != 0) return i;
      return k;
    };
    IntegerMatrix a(k - 1, k - 1);
    for (std::size_t c = 1; c < k; ++c) {
      const std::size_t xc = image(c), x0 = image(0);
      if (kernel) {
        if (xc != 0) a(xc - 1, c - 1) += 1;
        if (x0 != 0) a(x0 - 1, c - 1) -= 1;
      } else if (xc != 0) {
        a(xc - 1, c - 1) = 1;
      } else {
        for (std::size_t i = 0; i < k - 1; ++i) a(i, c - 1) = -1;
      }
    }
    action.push_back(std::move(a));
  }
  return GLattice::from_full_action(perm.group(), std::move(action), k - 1);
}

/// Subgroups h generated by one or two elements whose index is at most `max_index`.
inline std::vector<Subgroup> small_index_subgroups(const FiniteGroup& g, std::size_t max_index) {
  std::vector<Subgroup> out;
  std::vector<std::vector<std::size_t>> seen;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a; b < g.order(); ++b) {
      auto e = generated_elements(g, {a, b});
      if (g.order() / e.size() > max_index) continue;
      if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
      seen.push_back(e);
      out.emplace_back(g, e);
    }
  return out;
}

inline GLattice random_piece(const FiniteGroup& g, std::mt19937& rng, std::size_t budget) {
  for (;;) {
    switch (rng() % 6) {
      case 0:
        return trivial_lattice(g, 1);
      case 1:
        return sign_lattice(g);
      default: {
        auto subs = small_index_subgroups(g, budget + 1);
        const auto& h = subs[rng() % subs.size()];
        GLattice p = permutation_lattice(g, h);
        const int kind = static_cast<int>(rng() % 4);
        if (kind == 0 && p.rank() <= budget) return p;
        if (kind == 1 && p.rank() >= 2 && p.rank() - 1 <= budget) return coset_piece(p, true);
        if (kind == 2 && p.rank() >= 2 && p.rank() - 1 <= budget) return coset_piece(p, false);
        if (kind == 3 && p.rank() >= 2 && p.rank() - 1 <= budget) return dual(coset_piece(p, true));
        break;
      }
    }
  }
}

/// Random lattice of rank between 1 and max_rank.
inline GLattice random_lattice(const FiniteGroup& g, std::mt19937& rng, std::size_t max_rank = 5) {
  const std::size_t target = 1 + rng() % max_rank;
  GLattice m = random_piece(g, rng, target);
  while (m.rank() < target && rng() % 4 != 0) m = direct_sum(m, random_piece(g, rng, target - m.rank()));
  // a few elementary conjugations, kept only while entries stay small
  std::vector<IntegerMatrix> gens = m.generator_action();
  for (int step = 0; step < 3 && m.rank() >= 2; ++step) {
    const std::size_t i = rng() % m.rank(), j = (i + 1 + rng() % (m.rank() - 1)) % m.rank();
    const Integer s = (rng() % 2) ? 1 : -1;
    IntegerMatrix e = IntegerMatrix::identity(m.rank()), ei = IntegerMatrix::identity(m.rank());
    e(i, j) = s;
    ei(i, j) = -s;
    std::vector<IntegerMatrix> next;
    for (const auto& a : gens) next.push_back(e * a * ei);
    if (entries_small(next)) gens = std::move(next);
  }
  return lattice_from_action(g, gens, m.rank());
}

}  // namespace corpus

#include "wadefect/defect.hpp"

namespace corpus {

inline Subgroup random_subgroup(const FiniteGroup& g, std::mt19937& rng) {
  std::vector<std::size_t> gens;
  const std::size_t k = rng() % 3;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(rng() % g.order());
  return Subgroup::generated_by(g, gens);
}

/// Up to `max_places` special places (some archimedean) with random
/// decomposition groups.
inline ArithmeticContext random_context(const FiniteGroup& g, std::mt19937& rng, std::size_t max_rank = 4,
                                        std::size_t max_places = 3) {
  GLattice m = random_lattice(g, rng, max_rank);
  std::vector<Place> places;
  const std::size_t count = rng() % (max_places + 1);
  for (std::size_t i = 0; i < count; ++i) {
    Subgroup d = random_subgroup(g, rng);
    const bool arch = d.order() <= 2 && rng() % 3 == 0;
    places.push_back({(arch ? "inf" : "v") + std::to_string(i), d, arch});
  }
  return ArithmeticContext(g, m, std::move(places));
}

inline std::vector<std::string> random_s(const ArithmeticContext& ctx, std::mt19937& rng) {
  std::vector<std::string> s;
  for (const auto& p : ctx.places())
    if (rng() % 2) s.push_back(p.name);
  return s;
}

/// Every subset of the place names.
inline std::vector<std::vector<std::string>> all_s(const ArithmeticContext& ctx) {
  std::vector<std::vector<std::string>> out;
  const std::size_t n = ctx.places().size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(ctx.places()[i].name);
    out.push_back(s);
  }
  return out;
}

/// Klein four-group with the augmentation kernel and one place of full
/// decomposition group.
inline ArithmeticContext klein_worked_example() {
  auto g = groups::klein_four();
  return ArithmeticContext(g, augmentation_kernel(g), {{"v0", Subgroup::whole(g), false}});
}

}  // namespace corpus
