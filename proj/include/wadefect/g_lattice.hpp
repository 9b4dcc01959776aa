#pragma once

// Free abelian groups of finite rank with an action of a finite group.

#include "wadefect/errors.hpp"
#include "wadefect/finite_group.hpp"
#include "wadefect/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wadefect {

class GLattice {
 public:
  GLattice() : GLattice(FiniteGroup{}, 0) {}

  /// Trivial action on Z^rank.
  GLattice(FiniteGroup g, std::size_t rank) : group_(std::move(g)), rank_(rank) {
    action_.assign(group_.order(), IntegerMatrix::identity(rank_));
  }

  /// Extends one matrix per generator along generator words and checks the
  /// result is a homomorphism. `rank` is needed only when there are no
  /// generators.
  static GLattice from_generator_action(FiniteGroup g, const std::vector<IntegerMatrix>& on_generators,
                                        std::optional<std::size_t> rank = std::nullopt) {
    if (on_generators.size() != g.generators().size())
      throw InputError("expected " + std::to_string(g.generators().size()) + " action matrices, got " +
                       std::to_string(on_generators.size()));
    std::size_t r = rank.value_or(on_generators.empty() ? 0 : on_generators.front().rows());
    for (std::size_t i = 0; i < on_generators.size(); ++i) {
      const auto& m = on_generators[i];
      if (m.rows() != r || m.cols() != r) throw InputError("action matrix " + std::to_string(i) + " has the wrong shape");
      Integer det = determinant(m);
      if (det != 1 && det != -1)
        throw InputError("action matrix " + std::to_string(i) + " is not invertible over the integers (det " + det.str() + ")");
    }
    GLattice m(std::move(g), r);
    for (std::size_t a : m.group_.bfs_order()) {
      if (a == 0) continue;
      auto [parent, p] = m.group_.tree_edge(a);
      m.action_[a] = m.action_[parent] * on_generators[p];
    }
    if (!m.verify()) throw InputError("generator matrices violate a relation of the group");
    return m;
  }

  /// Full action table without validation; verify() reports violations.
  static GLattice unchecked(FiniteGroup g, std::vector<IntegerMatrix> action) {
    GLattice m(std::move(g), action.empty() ? 0 : action.front().rows());
    m.action_ = std::move(action);
    return m;
  }

  /// Action given on every element; validated.
  static GLattice from_full_action(FiniteGroup g, std::vector<IntegerMatrix> action, std::size_t rank) {
    if (action.size() != g.order()) throw InputError("action table size differs from the group order");
    GLattice m(std::move(g), rank);
    m.action_ = std::move(action);
    if (!m.verify()) throw InputError("action table is not a homomorphism");
    return m;
  }

  const FiniteGroup& group() const { return group_; }
  std::size_t rank() const { return rank_; }
  const IntegerMatrix& action(std::size_t element) const { return action_.at(element); }
  const std::vector<IntegerMatrix>& actions() const { return action_; }

  std::vector<IntegerMatrix> generator_action() const {
    std::vector<IntegerMatrix> out;
    for (std::size_t s : group_.generators()) out.push_back(action_[s]);
    return out;
  }

  /// Identity and action(a s) = action(a) action(s) for every element a and
  /// generator s, which forces the homomorphism property on all pairs.
  bool verify() const {
    if (!shape_ok()) return false;
    for (std::size_t a = 0; a < group_.order(); ++a)
      for (std::size_t s : group_.generators())
        if (!(action_[a] * action_[s] == action_[group_.mul(a, s)])) return false;
    return true;
  }

  /// The homomorphism property checked directly on all |g|^2 pairs.
  bool verify_all_pairs() const {
    if (!shape_ok()) return false;
    for (std::size_t a = 0; a < group_.order(); ++a)
      for (std::size_t b = 0; b < group_.order(); ++b)
        if (!(action_[a] * action_[b] == action_[group_.mul(a, b)])) return false;
    return true;
  }

  /// Sum over all group elements of the action.
  IntegerMatrix norm() const {
    IntegerMatrix n(rank_, rank_);
    for (const auto& m : action_) n = n + m;
    return n;
  }

  friend bool operator==(const GLattice& a, const GLattice& b) {
    return a.group_.same_as(b.group_) && a.rank_ == b.rank_ && a.action_ == b.action_;
  }

 private:
  bool shape_ok() const {
    if (action_.size() != group_.order()) return false;
    for (const auto& m : action_)
      if (m.rows() != rank_ || m.cols() != rank_) return false;
    return action_[0] == IntegerMatrix::identity(rank_);
  }

  FiniteGroup group_;
  std::size_t rank_ = 0;
  std::vector<IntegerMatrix> action_;
};

inline GLattice lattice_from_action(const FiniteGroup& g, const std::vector<IntegerMatrix>& matrices_on_generators,
                                    std::optional<std::size_t> rank = std::nullopt) {
  return GLattice::from_generator_action(g, matrices_on_generators, rank);
}

inline GLattice trivial_lattice(const FiniteGroup& g, std::size_t rank = 1) { return GLattice(g, rank); }

/// Z[g/h] with basis the left cosets (ordered by smallest element).
inline GLattice permutation_lattice(const FiniteGroup& g, const Subgroup& h) {
  if (!h.parent().same_as(g)) throw InputError("subgroup of a different group");
  LeftCosets cosets = left_cosets(h);
  const std::size_t r = cosets.representatives.size();
  std::vector<IntegerMatrix> action(g.order(), IntegerMatrix(r, r));
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t c = 0; c < r; ++c) action[x](cosets.coset_of[g.mul(x, cosets.representatives[c])], c) = 1;
  return GLattice::from_full_action(g, std::move(action), r);
}

inline GLattice regular_lattice(const FiniteGroup& g) { return permutation_lattice(g, Subgroup::trivial(g)); }

/// { sum x_a e_a : sum x_a = 0 } in the basis e_a - e_1, a != 1.
inline GLattice augmentation_kernel(const FiniteGroup& g) {
  const std::size_t n = g.order(), r = n - 1;
  std::vector<IntegerMatrix> action(n, IntegerMatrix(r, r));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 1; a < n; ++a) {
      // x (e_a - e_1) = (e_{xa} - e_1) - (e_x - e_1)
      const std::size_t xa = g.mul(x, a);
      if (xa != 0) action[x](xa - 1, a - 1) += 1;
      if (x != 0) action[x](x - 1, a - 1) -= 1;
    }
  return GLattice::from_full_action(g, std::move(action), r);
}

/// Z[g] / Z (sum e_a) in the basis of the images of e_a, a != 1.
inline GLattice norm_one_quotient(const FiniteGroup& g) {
  const std::size_t n = g.order(), r = n - 1;
  std::vector<IntegerMatrix> action(n, IntegerMatrix(r, r));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 1; a < n; ++a) {
      const std::size_t xa = g.mul(x, a);
      if (xa != 0) {
        action[x](xa - 1, a - 1) = 1;
      } else {
        for (std::size_t i = 0; i < r; ++i) action[x](i, a - 1) = -1;
      }
    }
  return GLattice::from_full_action(g, std::move(action), r);
}

/// The module restricted to a subgroup, as a lattice over the standalone
/// subgroup.
inline GLattice restrict(const GLattice& m, const Subgroup& h) {
  if (!h.parent().same_as(m.group())) throw InputError("subgroup of a different group");
  SubgroupEmbedding emb = standalone(h);
  std::vector<IntegerMatrix> action;
  for (std::size_t p : emb.to_parent) action.push_back(m.action(p));
  return GLattice::from_full_action(emb.group, std::move(action), m.rank());
}

inline GLattice direct_sum(const GLattice& a, const GLattice& b) {
  if (!a.group().same_as(b.group())) throw InputError("direct sum of lattices over different groups");
  std::vector<IntegerMatrix> action;
  for (std::size_t x = 0; x < a.group().order(); ++x) action.push_back(block_diagonal(a.action(x), b.action(x)));
  return GLattice::from_full_action(a.group(), std::move(action), a.rank() + b.rank());
}

/// Hom(M, Z): a acts by the transpose of action(a^{-1}).
inline GLattice dual(const GLattice& m) {
  std::vector<IntegerMatrix> action;
  for (std::size_t x = 0; x < m.group().order(); ++x) action.push_back(m.action(m.group().inv(x)).transpose());
  return GLattice::from_full_action(m.group(), std::move(action), m.rank());
}

/// a (x) b with the diagonal action.
inline GLattice tensor_product(const GLattice& a, const GLattice& b) {
  if (!a.group().same_as(b.group())) throw InputError("tensor product of lattices over different groups");
  std::vector<IntegerMatrix> action;
  for (std::size_t x = 0; x < a.group().order(); ++x) action.push_back(kronecker(a.action(x), b.action(x)));
  return GLattice::from_full_action(a.group(), std::move(action), a.rank() * b.rank());
}

}  // namespace wadefect
