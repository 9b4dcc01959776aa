#pragma once

// Finite abelian groups in invariant-factor form, subgroups given by
// generators, and subquotients L/B of integer lattices.
//
// A subgroup of G = Z/d_1 + ... + Z/d_k is handled through its preimage
// lattice in Z^k, which always contains d_1 e_1, ..., d_k e_k. The dual of G
// is identified with G itself through <x, y> = sum x_i y_i / d_i in Q/Z.

#include "wadefect/errors.hpp"
#include "wadefect/integer.hpp"
#include "wadefect/matrix.hpp"
#include "wadefect/normal_form.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace wadefect {

using GroupElement = std::vector<Integer>;

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Factors must be >= 2 and form a divisibility chain.
  explicit FiniteAbelianGroup(IntegerVector invariant_factors) : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2) throw InputError("invariant factor below 2");
      if (i > 0 && factors_[i] % factors_[i - 1] != 0) throw InputError("invariant factors do not form a divisibility chain");
    }
  }

  /// Normalizes arbitrary positive cyclic orders to invariant-factor form.
  static FiniteAbelianGroup from_cyclic_orders(std::span<const Integer> orders) {
    IntegerMatrix d(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (orders[i] <= 0) throw InputError("cyclic order must be positive");
      d(i, i) = orders[i];
    }
    return FiniteAbelianGroup(snf(d).invariant_factors);
  }

  const IntegerVector& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }

  Integer order() const {
    Integer n = 1;
    for (const auto& d : factors_) n *= d;
    return n;
  }

  Integer exponent() const { return factors_.empty() ? Integer(1) : factors_.back(); }

  GroupElement zero() const { return GroupElement(rank(), 0); }

  GroupElement generator(std::size_t i) const {
    GroupElement e = zero();
    e.at(i) = 1;
    return e;
  }

  bool is_valid(std::span<const Integer> x) const {
    if (x.size() != rank()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < 0 || x[i] >= factors_[i]) return false;
    return true;
  }

  GroupElement reduce(std::span<const Integer> x) const {
    if (x.size() != rank()) throw StructuralError("element length differs from group rank");
    GroupElement r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = scalar::mod(x[i], factors_[i]);
    return r;
  }

  GroupElement add(std::span<const Integer> a, std::span<const Integer> b) const {
    GroupElement r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = scalar::mod(a[i] + b[i], factors_[i]);
    return r;
  }

  GroupElement scale(const Integer& s, std::span<const Integer> a) const {
    GroupElement r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = scalar::mod(s * a[i], factors_[i]);
    return r;
  }

  bool is_zero(std::span<const Integer> a) const {
    return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
  }

  Integer element_order(std::span<const Integer> a) const {
    Integer o = 1;
    for (std::size_t i = 0; i < rank(); ++i) o = scalar::lcm(o, factors_[i] / scalar::gcd(a[i], factors_[i]));
    return o;
  }

  /// True iff <x, y> = 0 in Q/Z under the diagonal pairing.
  bool pairing_vanishes(std::span<const Integer> x, std::span<const Integer> y) const {
    const Integer e = exponent();
    Integer s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += x[i] * y[i] * (e / factors_[i]);
    return scalar::mod(s, e) == 0;
  }

  /// All elements in lexicographic order; intended for small groups.
  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    GroupElement cur = zero();
    for (;;) {
      out.push_back(cur);
      std::size_t i = rank();
      while (i > 0) {
        --i;
        if (++cur[i] < factors_[i]) break;
        cur[i] = 0;
        if (i == 0) return out;
      }
      if (rank() == 0) return out;
    }
  }

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

  /// "0" or "Z/d1 ⊕ Z/d2 ⊕ ...".
  std::string to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " ⊕ " : "") << "Z/" << factors_[i];
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const FiniteAbelianGroup& g) { return os << g.to_string(); }

 private:
  IntegerVector factors_;
};

/// The subquotient L / B for lattices B ⊆ L ⊆ Z^n, presented in
/// invariant-factor coordinates, with a projection from L and lifts of the
/// abstract generators back into L.
class LatticeQuotient {
 public:
  LatticeQuotient() = default;

  /// `lattice_gens` spans L; the columns of `sub_gens` must lie in L.
  LatticeQuotient(const IntegerMatrix& lattice_gens, const IntegerMatrix& sub_gens)
      : lattice_(column_echelon(lattice_gens)) {
    init(sub_gens);
  }

  LatticeQuotient(EchelonForm lattice, const IntegerMatrix& sub_gens) : lattice_(std::move(lattice)) { init(sub_gens); }

  /// L / B with B given by its coordinates in the basis of L.
  static LatticeQuotient from_coordinates(EchelonForm lattice, const IntegerMatrix& sub_coordinates) {
    if (sub_coordinates.rows() != lattice.rank()) throw StructuralError("coordinate matrix rows differ from lattice rank");
    LatticeQuotient q;
    q.lattice_ = std::move(lattice);
    q.init_coordinates(sub_coordinates);
    return q;
  }

  /// L / B for B of full rank in its saturation L.
  static LatticeQuotient over_saturation(const IntegerMatrix& sub_gens) {
    Saturation s = saturate(sub_gens);
    return from_coordinates(std::move(s.lattice), s.sub_coordinates);
  }

  /// Z^n / span(columns of a).
  static LatticeQuotient cokernel(const IntegerMatrix& a, std::size_t ambient_rank) {
    if (a.rows() != ambient_rank) throw StructuralError("cokernel: matrix rows differ from ambient rank");
    return LatticeQuotient(IntegerMatrix::identity(ambient_rank), a);
  }

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t free_rank() const { return free_rows_.size(); }
  std::size_t ambient_rank() const { return lattice_.ambient_rank(); }
  const EchelonForm& lattice() const { return lattice_; }

  bool contains(std::span<const Integer> x) const { return solve_in_lattice(lattice_, x).has_value(); }

  /// Image of x ∈ L in the torsion coordinates.
  GroupElement project(std::span<const Integer> x) const { return split(x).first; }

  /// Image of x ∈ L in the free coordinates.
  IntegerVector project_free(std::span<const Integer> x) const { return split(x).second; }

  /// A vector of L mapping to the i-th torsion generator.
  IntegerVector lift(std::size_t i) const { return lift_row(torsion_rows_.at(i)); }

  IntegerVector lift_element(std::span<const Integer> element) const {
    IntegerVector v(ambient_rank(), 0);
    for (std::size_t i = 0; i < element.size(); ++i) {
      if (element[i] == 0) continue;
      auto l = lift(i);
      for (std::size_t r = 0; r < v.size(); ++r) v[r] += element[i] * l[r];
    }
    return v;
  }

 private:
  void init(const IntegerMatrix& sub_gens) {
    const std::size_t l = lattice_.rank();
    IntegerMatrix y(l, sub_gens.cols());
    for (std::size_t j = 0; j < sub_gens.cols(); ++j) {
      auto c = solve_in_lattice(lattice_, sub_gens.column(j));
      if (!c) throw StructuralError("sublattice generator outside the lattice");
      y.set_column(j, *c);
    }
    init_coordinates(y);
  }

  void init_coordinates(const IntegerMatrix& y) {
    const std::size_t l = lattice_.rank();
    smith_ = snf(y);
    IntegerVector factors;
    for (std::size_t i = 0; i < l; ++i) {
      if (i < smith_.diagonal.size()) {
        if (smith_.diagonal[i] > 1) {
          torsion_rows_.push_back(i);
          factors.push_back(smith_.diagonal[i]);
        }
      } else {
        free_rows_.push_back(i);
      }
    }
    group_ = FiniteAbelianGroup(std::move(factors));
  }

  std::pair<GroupElement, IntegerVector> split(std::span<const Integer> x) const {
    auto y = solve_in_lattice(lattice_, x);
    if (!y) throw StructuralError("vector outside the presented lattice");
    std::vector<Integer> z = smith_.U * std::span<const Integer>(*y);
    GroupElement t(torsion_rows_.size());
    for (std::size_t i = 0; i < torsion_rows_.size(); ++i) t[i] = scalar::mod(z[torsion_rows_[i]], group_.invariant_factors()[i]);
    IntegerVector f(free_rows_.size());
    for (std::size_t i = 0; i < free_rows_.size(); ++i) f[i] = z[free_rows_[i]];
    return {std::move(t), std::move(f)};
  }

  IntegerVector lift_row(std::size_t row) const {
    std::vector<Integer> coords = smith_.U_inverse.column(row);
    return lattice_.basis * std::span<const Integer>(coords);
  }

  EchelonForm lattice_;
  SmithDecomposition smith_;
  std::vector<std::size_t> torsion_rows_;
  std::vector<std::size_t> free_rows_;
  FiniteAbelianGroup group_;
};

/// Z^n / column-span(a): finite part, free rank, and projection.
inline LatticeQuotient cokernel(const IntegerMatrix& a, std::size_t ambient_rank) {
  return LatticeQuotient::cokernel(a, ambient_rank);
}

/// A subgroup of a finite abelian group, given by generators.
class SubgroupHandle {
 public:
  SubgroupHandle() = default;

  SubgroupHandle(FiniteAbelianGroup ambient, std::vector<GroupElement> generators)
      : ambient_(std::move(ambient)), generators_(std::move(generators)) {
    for (auto& g : generators_) {
      if (g.size() != ambient_.rank()) throw StructuralError("generator length differs from ambient rank");
      g = ambient_.reduce(g);
    }
    lattice_ = compute_lattice();
  }

  static SubgroupHandle trivial(const FiniteAbelianGroup& g) { return SubgroupHandle(g, {}); }

  static SubgroupHandle whole(const FiniteAbelianGroup& g) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
    return SubgroupHandle(g, std::move(gens));
  }

  const FiniteAbelianGroup& ambient() const { return ambient_; }
  const std::vector<GroupElement>& generators() const { return generators_; }

  /// Canonical Hermite basis (rank x rank, lower triangular) of the preimage
  /// lattice in Z^rank; equal subgroups have equal lattices.
  const IntegerMatrix& lattice() const { return lattice_; }

  Integer order() const {
    Integer index = 1;
    for (std::size_t i = 0; i < lattice_.rows(); ++i) index *= lattice_(i, i);
    return ambient_.order() / index;
  }

  Integer index() const { return ambient_.order() / order(); }

  bool is_trivial() const { return order() == 1; }

  bool contains(std::span<const Integer> x) const {
    EchelonForm e{lattice_, identity_pivots()};
    return solve_in_lattice(e, ambient_.reduce(x)).has_value();
  }

  /// Abstract structure of the subgroup.
  FiniteAbelianGroup structure() const {
    IntegerMatrix d(ambient_.rank(), ambient_.rank());
    for (std::size_t i = 0; i < ambient_.rank(); ++i) d(i, i) = ambient_.invariant_factors()[i];
    return LatticeQuotient(lattice_, d).group();
  }

  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    for (auto& e : ambient_.elements())
      if (contains(e)) out.push_back(e);
    return out;
  }

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.ambient_ == b.ambient_ && a.lattice_ == b.lattice_;
  }

 private:
  std::vector<std::size_t> identity_pivots() const {
    std::vector<std::size_t> p(ambient_.rank());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    return p;
  }

  IntegerMatrix compute_lattice() const {
    const std::size_t k = ambient_.rank();
    IntegerMatrix gens(k, generators_.size() + k);
    for (std::size_t j = 0; j < generators_.size(); ++j) gens.set_column(j, generators_[j]);
    for (std::size_t i = 0; i < k; ++i) gens(i, generators_.size() + i) = ambient_.invariant_factors()[i];
    EchelonForm e = column_echelon(gens);
    if (e.rank() != k) throw ConsistencyError("subgroup lattice lost full rank");
    return e.basis;
  }

  FiniteAbelianGroup ambient_;
  std::vector<GroupElement> generators_;
  IntegerMatrix lattice_;
};

namespace detail {

inline void require_same_ambient(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (!(a.ambient() == b.ambient())) throw StructuralError("subgroups live in different ambient groups");
}

inline std::vector<GroupElement> columns_as_elements(const FiniteAbelianGroup& g, const IntegerMatrix& m) {
  std::vector<GroupElement> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto e = g.reduce(m.column(j));
    if (!g.is_zero(e)) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace detail

inline SubgroupHandle subgroup_sum(const SubgroupHandle& a, const SubgroupHandle& b) {
  detail::require_same_ambient(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return SubgroupHandle(a.ambient(), std::move(gens));
}

inline SubgroupHandle subgroup_intersection(const SubgroupHandle& a, const SubgroupHandle& b) {
  detail::require_same_ambient(a, b);
  const std::size_t k = a.ambient().rank();
  // a.lattice() u = b.lattice() v
  IntegerMatrix joint(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      joint(i, j) = a.lattice()(i, j);
      joint(i, k + j) = -b.lattice()(i, j);
    }
  IntegerMatrix ker = kernel_basis(joint);
  IntegerMatrix meet = a.lattice() * row_range(ker, 0, k);
  return SubgroupHandle(a.ambient(), detail::columns_as_elements(a.ambient(), meet));
}

/// ambient / sub.
inline FiniteAbelianGroup quotient(const FiniteAbelianGroup& ambient, const SubgroupHandle& sub) {
  if (!(sub.ambient() == ambient)) throw StructuralError("quotient by a subgroup of a different group");
  return cokernel(sub.lattice(), ambient.rank()).group();
}

/// outer / inner for inner ⊆ outer.
inline FiniteAbelianGroup subquotient(const SubgroupHandle& outer, const SubgroupHandle& inner) {
  detail::require_same_ambient(outer, inner);
  try {
    return LatticeQuotient(outer.lattice(), inner.lattice()).group();
  } catch (const StructuralError&) {
    throw StructuralError("subquotient: inner subgroup is not contained in outer");
  }
}

/// { y in dual : <x, y> = 0 for all x in sub }, inside the dual group
/// (same invariant factors, diagonal pairing).
inline SubgroupHandle annihilator(const SubgroupHandle& sub) {
  const FiniteAbelianGroup& g = sub.ambient();
  const std::size_t k = g.rank();
  if (k == 0) return SubgroupHandle::trivial(g);
  const Integer e = g.exponent();
  const auto& gens = sub.generators();
  // rows: (e/d_i) x_i for each generator x; extra columns e * I for the congruence
  IntegerMatrix sys(gens.size(), k + gens.size());
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t i = 0; i < k; ++i) sys(r, i) = gens[r][i] * (e / g.invariant_factors()[i]);
    sys(r, k + r) = e;
  }
  IntegerMatrix ker = kernel_basis(sys);
  return SubgroupHandle(g, detail::columns_as_elements(g, row_range(ker, 0, k)));
}

/// Kernel of the homomorphism ⊕Z/d_j → ⊕Z/e_i given by an integer matrix in
/// invariant-factor coordinates.
inline SubgroupHandle homomorphism_kernel(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target,
                                          const IntegerMatrix& matrix) {
  const std::size_t k = source.rank(), t = target.rank();
  if (matrix.rows() != t || matrix.cols() != k) throw StructuralError("homomorphism matrix has the wrong shape");
  if (k == 0) return SubgroupHandle::trivial(source);
  if (t == 0) return SubgroupHandle::whole(source);
  IntegerMatrix sys(t, k + t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < k; ++j) sys(i, j) = matrix(i, j);
    sys(i, k + i) = target.invariant_factors()[i];
  }
  IntegerMatrix ker = kernel_basis(sys);
  return SubgroupHandle(source, detail::columns_as_elements(source, row_range(ker, 0, k)));
}

}  // namespace wadefect
