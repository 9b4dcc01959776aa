#pragma once

// Tate cohomology of a finite group with coefficients in a lattice, in
// degrees -1, 0, 1 and 2, plus restriction to subgroups.
//
// Cochain coordinates:
//   degree -1, 0: vectors of M (length rank)
//   degree 1: c(a) for every element a, block a of length rank
//   degree 2: normalized c(a, b) for a, b != 1, block (a-1)(n-1) + (b-1)

#include "wadefect/abelian_group.hpp"
#include "wadefect/errors.hpp"
#include "wadefect/finite_group.hpp"
#include "wadefect/g_lattice.hpp"
#include "wadefect/normal_form.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wadefect {

inline void require_supported_degree(int i) {
  if (i < -1 || i > 2)
    throw InputError("Tate cohomology is computed natively only in degrees -1, 0, 1, 2 (got " + std::to_string(i) +
                     "); use shift_degree to move other degrees into range");
}

namespace detail {

inline std::size_t pair_block(std::size_t n, std::size_t a, std::size_t b) { return (a - 1) * (n - 1) + (b - 1); }

inline IntegerMatrix stacked_minus_identity(const GLattice& m) {
  const std::size_t r = m.rank(), n = m.group().order();
  IntegerMatrix out(n * r, r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) out(a * r + i, k) = m.action(a)(i, k) - (i == k ? 1 : 0);
  return out;
}

// columns (a - 1) e_k for every a and k
inline IntegerMatrix augmentation_image(const GLattice& m) {
  const std::size_t r = m.rank(), n = m.group().order();
  IntegerMatrix out(r, n * r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) out(i, a * r + k) = m.action(a)(i, k) - (i == k ? 1 : 0);
  return out;
}

/// c(ab) - c(a) - a c(b) = 0 for all |g|^2 pairs.
inline IntegerMatrix one_cocycle_system(const GLattice& m) {
  const std::size_t r = m.rank(), n = m.group().order();
  const FiniteGroup& g = m.group();
  IntegerMatrix sys(n * n * r, n * r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t row = (a * n + b) * r, ab = g.mul(a, b);
      for (std::size_t i = 0; i < r; ++i) {
        sys(row + i, ab * r + i) += 1;
        sys(row + i, a * r + i) -= 1;
        for (std::size_t k = 0; k < r; ++k) sys(row + i, b * r + k) -= m.action(a)(i, k);
      }
    }
  return sys;
}

/// Columns: the coboundaries a -> (a - 1) e_k.
inline IntegerMatrix one_coboundaries(const GLattice& m) { return stacked_minus_identity(m); }

/// Columns: delta f for f running over the basis of normalized 1-cochains,
/// (delta f)(a, b) = a f(b) - f(ab) + f(a).
inline IntegerMatrix two_coboundaries(const GLattice& m) {
  const std::size_t r = m.rank(), n = m.group().order();
  const FiniteGroup& g = m.group();
  if (n <= 1) return IntegerMatrix(0, 0);
  IntegerMatrix out((n - 1) * (n - 1) * r, (n - 1) * r);
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) {
      const std::size_t row = pair_block(n, a, b) * r, ab = g.mul(a, b);
      for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t i = 0; i < r; ++i) out(row + i, (b - 1) * r + k) += m.action(a)(i, k);
        if (ab != 0) out(row + k, (ab - 1) * r + k) -= 1;
        out(row + k, (a - 1) * r + k) += 1;
      }
    }
  return out;
}

}  // namespace detail

class CohomologyGroup {
 public:
  enum class Model { bar, periodic };

  CohomologyGroup() = default;

  CohomologyGroup(int degree, FiniteGroup group, GLattice module, LatticeQuotient presentation, Model model)
      : degree_(degree), group_(std::move(group)), module_(std::move(module)), quotient_(std::move(presentation)),
        model_(model) {
    if (quotient_.free_rank() != 0) throw ConsistencyError("Tate cohomology came out infinite");
  }

  int degree() const { return degree_; }
  const FiniteGroup& group() const { return group_; }
  const GLattice& module() const { return module_; }
  const FiniteAbelianGroup& value() const { return quotient_.group(); }
  Model model() const { return model_; }
  std::size_t cochain_length() const { return quotient_.ambient_rank(); }
  const LatticeQuotient& presentation() const { return quotient_; }

  /// Cocycle representing the i-th invariant-factor generator.
  IntegerVector representative(std::size_t i) const { return quotient_.lift(i); }

  std::vector<IntegerVector> representative_lift() const {
    std::vector<IntegerVector> out;
    for (std::size_t i = 0; i < value().rank(); ++i) out.push_back(representative(i));
    return out;
  }

  IntegerVector lift(std::span<const Integer> element) const { return quotient_.lift_element(element); }

  bool is_cocycle(std::span<const Integer> cochain) const { return quotient_.contains(cochain); }

  /// Class of a cocycle; throws StructuralError on a non-cocycle.
  GroupElement classify(std::span<const Integer> cochain) const { return quotient_.project(cochain); }

  bool is_coboundary(std::span<const Integer> cochain) const { return value().is_zero(classify(cochain)); }

 private:
  int degree_ = 0;
  FiniteGroup group_;
  GLattice module_;
  LatticeQuotient quotient_;
  Model model_ = Model::bar;
};

inline CohomologyGroup tate(const FiniteGroup& g, const GLattice& m, int i) {
  if (!m.group().same_as(g)) throw InputError("lattice is defined over a different group");
  require_supported_degree(i);
  LatticeQuotient q;
  switch (i) {
    case -1: {
      IntegerMatrix n = m.norm();
      q = LatticeQuotient(kernel_basis(n), detail::augmentation_image(m));
      break;
    }
    case 0: {
      IntegerMatrix fixed = kernel_basis(detail::stacked_minus_identity(m));
      q = LatticeQuotient(fixed, m.norm());
      break;
    }
    case 1:
      q = LatticeQuotient(kernel_basis(detail::one_cocycle_system(m)), detail::one_coboundaries(m));
      break;
    default:
      // H^2 is finite and cocycles form a saturated lattice, so Z^2 = sat(B^2)
      q = LatticeQuotient::over_saturation(detail::two_coboundaries(m));
      break;
  }
  return CohomologyGroup(i, g, m, std::move(q), CohomologyGroup::Model::bar);
}

/// First element of maximal order, in element order.
inline std::size_t cyclic_generator(const FiniteGroup& c) {
  std::size_t best = 0;
  for (std::size_t a = 0; a < c.order(); ++a)
    if (c.element_order(a) > c.element_order(best)) best = a;
  return best;
}

/// Closed form for cyclic groups: even degrees ker(s - 1) / N M, odd degrees
/// ker N / (s - 1) M.
inline CohomologyGroup tate_cyclic(const FiniteGroup& c, const GLattice& m, int i) {
  if (!m.group().same_as(c)) throw InputError("lattice is defined over a different group");
  if (!is_cyclic(c)) throw InputError("tate_cyclic needs a cyclic group");
  const std::size_t r = m.rank();
  const IntegerMatrix s_minus_1 = m.action(cyclic_generator(c)) - IntegerMatrix::identity(r);
  const IntegerMatrix n = m.norm();
  LatticeQuotient q = (i % 2 == 0) ? LatticeQuotient(kernel_basis(s_minus_1), n)
                                   : LatticeQuotient(kernel_basis(n), s_minus_1);
  return CohomologyGroup(i, c, m, std::move(q), CohomologyGroup::Model::periodic);
}

/// I_g (x) M: Tate cohomology of M in degree i is that of the result in
/// degree i + 1.
inline GLattice shift_degree(const GLattice& m) { return tensor_product(augmentation_kernel(m.group()), m); }

class CohomologyMap {
 public:
  CohomologyMap(CohomologyGroup source, CohomologyGroup target, IntegerMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.value().rank() || matrix_.cols() != source_.value().rank())
      throw StructuralError("cohomology map matrix has the wrong shape");
  }

  const CohomologyGroup& source() const { return source_; }
  const CohomologyGroup& target() const { return target_; }
  const IntegerMatrix& matrix() const { return matrix_; }

  GroupElement apply(std::span<const Integer> x) const {
    return target_.value().reduce(matrix_ * x);
  }

  SubgroupHandle kernel() const { return homomorphism_kernel(source_.value(), target_.value(), matrix_); }

  /// d_j times column j vanishes in the target.
  bool well_defined() const {
    const auto& d = source_.value().invariant_factors();
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      std::vector<Integer> col = matrix_.column(j);
      for (auto& v : col) v *= d[j];
      if (!target_.value().is_zero(target_.value().reduce(col))) return false;
    }
    return true;
  }

 private:
  CohomologyGroup source_;
  CohomologyGroup target_;
  IntegerMatrix matrix_;
};

/// Restriction of a cochain of degree `degree` on the parent to the
/// subgroup described by `emb`.
inline IntegerVector restrict_cochain(int degree, const GLattice& m, const Subgroup& h, const SubgroupEmbedding& emb,
                                      std::span<const Integer> c) {
  const std::size_t r = m.rank(), n = m.group().order(), k = emb.to_parent.size();
  switch (degree) {
    case -1: {
      // transfer: sum of x c over right coset representatives x of h x
      IntegerVector out(r, 0);
      for (std::size_t x : right_coset_representatives(h)) {
        std::vector<Integer> y = m.action(x) * c;
        for (std::size_t i = 0; i < r; ++i) out[i] += y[i];
      }
      return out;
    }
    case 0:
      return IntegerVector(c.begin(), c.end());
    case 1: {
      IntegerVector out(k * r);
      for (std::size_t y = 0; y < k; ++y)
        for (std::size_t i = 0; i < r; ++i) out[y * r + i] = c[emb.to_parent[y] * r + i];
      return out;
    }
    case 2: {
      if (k <= 1) return {};
      IntegerVector out((k - 1) * (k - 1) * r);
      for (std::size_t a = 1; a < k; ++a)
        for (std::size_t b = 1; b < k; ++b) {
          const std::size_t src = detail::pair_block(n, emb.to_parent[a], emb.to_parent[b]) * r;
          const std::size_t dst = detail::pair_block(k, a, b) * r;
          for (std::size_t i = 0; i < r; ++i) out[dst + i] = c[src + i];
        }
      return out;
    }
    default:
      require_supported_degree(degree);
      return {};
  }
}

/// Res from g to h on an already computed Ĥ^i(g, M).
inline CohomologyMap restriction(const CohomologyGroup& source, const Subgroup& h) {
  if (source.model() != CohomologyGroup::Model::bar) throw InputError("restriction needs a bar-resolution presentation");
  if (!h.parent().same_as(source.group())) throw InputError("subgroup of a different group");
  SubgroupEmbedding emb = standalone(h);
  GLattice mh = restrict(source.module(), h);
  CohomologyGroup target = tate(mh.group(), mh, source.degree());
  IntegerMatrix mat(target.value().rank(), source.value().rank());
  for (std::size_t j = 0; j < source.value().rank(); ++j)
    mat.set_column(j, target.classify(restrict_cochain(source.degree(), source.module(), h, emb, source.representative(j))));
  return CohomologyMap(source, std::move(target), std::move(mat));
}

inline CohomologyMap restriction(const FiniteGroup& g, const Subgroup& h, const GLattice& m, int i) {
  return restriction(tate(g, m, i), h);
}

/// Joint kernel of the restrictions to every listed subgroup.
inline SubgroupHandle restriction_kernel(const CohomologyGroup& source, const std::vector<Subgroup>& subgroups) {
  SubgroupHandle k = SubgroupHandle::whole(source.value());
  for (const auto& h : subgroups) {
    if (k.is_trivial()) break;
    k = subgroup_intersection(k, restriction(source, h).kernel());
  }
  return k;
}

struct ShaOmega {
  CohomologyGroup cohomology;
  SubgroupHandle handle;
  FiniteAbelianGroup group;
};

/// Elements of Ĥ^i(g, M) restricting to zero on every cyclic subgroup.
inline ShaOmega sha_omega(const FiniteGroup& g, const GLattice& m, int i) {
  CohomologyGroup h = tate(g, m, i);
  SubgroupHandle k = restriction_kernel(h, cyclic_subgroups_up_to_conjugacy(g));
  FiniteAbelianGroup structure = k.structure();
  return {std::move(h), std::move(k), std::move(structure)};
}

}  // namespace wadefect
