#pragma once

// Hermite and Smith normal forms, integer kernels, lattice membership and
// saturation. Every routine is exact. The eliminations first run on
// overflow-checked 64-bit words and restart on arbitrary precision
// integers if any intermediate value leaves that range.

#include "wadefect/errors.hpp"
#include "wadefect/integer.hpp"
#include "wadefect/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wadefect {

namespace detail {

template <class F>
auto with_fast_path(F&& f) {
  try {
    return f(CheckedInt64{});
  } catch (const Overflow&) {
    return f(Integer{});
  }
}

/// Packed list of `count` vectors of length `len`.
template <class T>
struct VectorPack {
  std::size_t count = 0;
  std::size_t len = 0;
  std::vector<T> buf;

  VectorPack(std::size_t c, std::size_t l) : count(c), len(l), buf(c * l, T(0)) {}
  T* operator[](std::size_t j) { return buf.data() + j * len; }
  const T* operator[](std::size_t j) const { return buf.data() + j * len; }

  void swap_vectors(std::size_t a, std::size_t b) {
    if (a != b) std::swap_ranges((*this)[a], (*this)[a] + len, (*this)[b]);
  }
  // v_dst -= q * v_src on coordinates [from, len)
  void sub_multiple(std::size_t dst, const T& q, std::size_t src, std::size_t from) {
    T* d = (*this)[dst];
    const T* s = (*this)[src];
    for (std::size_t i = from; i < len; ++i)
      if (!scalar::is_zero(s[i])) d[i] = d[i] - q * s[i];
  }
  void negate(std::size_t j, std::size_t from) {
    T* v = (*this)[j];
    for (std::size_t i = from; i < len; ++i) v[i] = -v[i];
  }
};

/// Brings the first `active` coordinates of the vectors into Hermite form:
/// afterwards vectors [0, r) carry strictly increasing pivot coordinates
/// (returned) with positive pivots, vectors [r, count) vanish on those
/// coordinates, and when `reduce` is set every entry at a pivot coordinate
/// of an earlier vector lies in [0, pivot).
template <class T>
std::vector<std::size_t> echelonize(VectorPack<T>& pack, std::size_t active, bool reduce = true) {
  std::vector<std::size_t> pivots;
  std::size_t c = 0;
  for (std::size_t i = 0; i < active && c < pack.count; ++i) {
    bool found = false;
    for (;;) {
      std::size_t best = pack.count;
      T best_abs{};
      for (std::size_t j = c; j < pack.count; ++j) {
        const T& x = pack[j][i];
        if (scalar::is_zero(x)) continue;
        T a = scalar::abs(x);
        if (best == pack.count || a < best_abs) {
          best = j;
          best_abs = a;
          if (a == T(1)) break;
        }
      }
      if (best == pack.count) break;
      found = true;
      pack.swap_vectors(c, best);
      const T p = pack[c][i];
      bool done = true;
      for (std::size_t j = c + 1; j < pack.count; ++j) {
        const T x = pack[j][i];
        if (scalar::is_zero(x)) continue;
        pack.sub_multiple(j, x / p, c, i);
        if (!scalar::is_zero(pack[j][i])) done = false;
      }
      if (done) break;
    }
    if (!found) continue;
    if (pack[c][i] < T(0)) pack.negate(c, i);
    if (reduce) {
      const T p = pack[c][i];
      for (std::size_t k = 0; k < c; ++k) {
        const T x = pack[k][i];
        if (scalar::is_zero(x)) continue;
        const T q = scalar::floor_div(x, p);
        if (!scalar::is_zero(q)) pack.sub_multiple(k, q, c, i);
      }
    }
    pivots.push_back(i);
    ++c;
  }
  return pivots;
}

template <class T>
VectorPack<T> columns_of(const Matrix<T>& a, std::size_t extra = 0) {
  VectorPack<T> pack(a.cols(), a.rows() + extra);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) pack[j][i] = a(i, j);
  return pack;
}

template <class T>
VectorPack<T> rows_of(const Matrix<T>& a) {
  VectorPack<T> pack(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) pack[i][j] = a(i, j);
  return pack;
}

template <class T>
Matrix<Integer> pack_to_columns(const VectorPack<T>& pack, std::size_t first, std::size_t count,
                                std::size_t coord_from, std::size_t coord_count) {
  Matrix<Integer> m(coord_count, count);
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t i = 0; i < coord_count; ++i) m(i, j) = scalar::convert<Integer>(pack[first + j][coord_from + i]);
  return m;
}

}  // namespace detail

/// Column echelon basis of a lattice together with its pivot rows.
struct EchelonForm {
  IntegerMatrix basis;  // ambient_rank x rank, lower echelon, canonical
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return basis.cols(); }
  std::size_t ambient_rank() const { return basis.rows(); }
};

/// Canonical column-style Hermite form of the lattice spanned by the columns
/// of `a`; zero columns are dropped.
inline EchelonForm column_echelon(const IntegerMatrix& a) {
  return detail::with_fast_path([&](auto tag) {
    using T = decltype(tag);
    auto pack = detail::columns_of(convert_matrix<T>(a));
    auto pivots = detail::echelonize(pack, a.rows());
    return EchelonForm{detail::pack_to_columns(pack, 0, pivots.size(), 0, a.rows()), std::move(pivots)};
  });
}

/// Column-style Hermite normal form with the shape of `a` (zero columns last).
inline IntegerMatrix hnf(const IntegerMatrix& a) {
  EchelonForm e = column_echelon(a);
  IntegerMatrix h(a.rows(), a.cols());
  for (std::size_t j = 0; j < e.rank(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) h(i, j) = e.basis(i, j);
  return h;
}

/// Basis (as columns, in Hermite form) of { x : a x = 0 }.
inline IntegerMatrix kernel_basis(const IntegerMatrix& a) {
  const std::size_t m = a.rows(), k = a.cols();
  IntegerMatrix raw = detail::with_fast_path([&](auto tag) {
    using T = decltype(tag);
    auto pack = detail::columns_of(convert_matrix<T>(a), k);
    for (std::size_t j = 0; j < k; ++j) pack[j][m + j] = T(1);
    auto pivots = detail::echelonize(pack, m, false);
    return detail::pack_to_columns(pack, pivots.size(), k - pivots.size(), m, k);
  });
  return column_echelon(raw).basis;
}

inline std::size_t rank(const IntegerMatrix& a) { return column_echelon(a).rank(); }

/// Coordinates y with e.basis * y = x, or nullopt if x is outside the lattice.
inline std::optional<IntegerVector> solve_in_lattice(const EchelonForm& e, std::span<const Integer> x) {
  if (x.size() != e.ambient_rank()) throw StructuralError("vector length differs from lattice ambient rank");
  IntegerVector r(x.begin(), x.end());
  IntegerVector y(e.rank());
  for (std::size_t j = 0; j < e.rank(); ++j) {
    const std::size_t p = e.pivot_rows[j];
    const Integer& piv = e.basis(p, j);
    if (r[p] % piv != 0) return std::nullopt;
    y[j] = r[p] / piv;
    if (y[j] == 0) continue;
    for (std::size_t i = p; i < r.size(); ++i)
      if (e.basis(i, j) != 0) r[i] -= y[j] * e.basis(i, j);
  }
  for (const auto& v : r)
    if (v != 0) return std::nullopt;
  return y;
}

/// Saturation of a lattice B together with B's basis in saturation
/// coordinates: the Hermite basis H of B equals lattice.basis * sub_coordinates.
struct Saturation {
  EchelonForm lattice;
  IntegerMatrix sub_coordinates;
};

/// (Q-span of the columns) intersected with Z^n.
///
/// With H the echelon basis and R the row lattice of H, x = H y is integral
/// exactly when y lies in the dual of R, so the saturation is spanned by the
/// columns of C = H * R^{-1}. R is taken lower triangular, so C keeps the
/// pivot rows of H.
inline Saturation saturate(const IntegerMatrix& gens) {
  EchelonForm h = column_echelon(gens);
  const std::size_t rho = h.rank();
  if (rho == 0) return {h, IntegerMatrix(0, 0)};
  auto [c, r] = detail::with_fast_path([&](auto tag) {
    using T = decltype(tag);
    // coordinates reversed: vector b gets pivot rho-1-b in original order
    detail::VectorPack<T> rows(h.basis.rows(), rho);
    for (std::size_t i = 0; i < h.basis.rows(); ++i)
      for (std::size_t j = 0; j < rho; ++j) rows[i][j] = scalar::convert<T>(h.basis(i, rho - 1 - j));
    auto pivots = detail::echelonize(rows, rho);
    if (pivots.size() != rho) throw ConsistencyError("saturation: echelon basis lost rank");
    Matrix<Integer> out(h.basis.rows(), rho);
    std::vector<T> rem(rho);
    for (std::size_t i = 0; i < h.basis.rows(); ++i) {
      for (std::size_t j = 0; j < rho; ++j) rem[j] = scalar::convert<T>(h.basis(i, rho - 1 - j));
      for (std::size_t b = 0; b < rho; ++b) {
        const std::size_t p = pivots[b];
        if (scalar::is_zero(rem[p])) continue;
        const T q = rem[p] / rows[b][p];
        for (std::size_t j = p; j < rho; ++j) rem[j] = rem[j] - q * rows[b][j];
        out(i, rho - 1 - b) = scalar::convert<Integer>(q);
      }
      for (const auto& v : rem)
        if (!scalar::is_zero(v)) throw ConsistencyError("saturation: row outside its own row lattice");
    }
    Matrix<Integer> rmat(rho, rho);
    for (std::size_t b = 0; b < rho; ++b)
      for (std::size_t j = 0; j < rho; ++j) rmat(rho - 1 - b, rho - 1 - j) = scalar::convert<Integer>(rows[b][j]);
    return std::pair{std::move(out), std::move(rmat)};
  });
  // H = C * R
  return {EchelonForm{std::move(c), h.pivot_rows}, std::move(r)};
}

inline EchelonForm saturation(const IntegerMatrix& gens) { return column_echelon(saturate(gens).lattice.basis); }

/// U * A * V = S with S diagonal, d_1 | d_2 | ... positive, zeros last.
struct SmithDecomposition {
  IntegerMatrix S;
  IntegerMatrix U;
  IntegerMatrix V;
  IntegerMatrix U_inverse;
  IntegerVector diagonal;           // nonzero diagonal entries, in order
  IntegerVector invariant_factors;  // diagonal entries > 1
  std::size_t free_rank = 0;        // rows(A) - rank(A): free rank of the cokernel
};

namespace detail {

template <class T>
SmithDecomposition snf_impl(Matrix<T> a) {
  const std::size_t m = a.rows(), k = a.cols();
  Matrix<T> u = Matrix<T>::identity(m), ui = Matrix<T>::identity(m), v = Matrix<T>::identity(k);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(a.row(i).begin(), a.row(i).end(), a.row(j).begin());
    std::swap_ranges(u.row(i).begin(), u.row(i).end(), u.row(j).begin());
    for (std::size_t r = 0; r < m; ++r) std::swap(ui(r, i), ui(r, j));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < k; ++r) std::swap(v(r, i), v(r, j));
  };
  // row_dst += q row_src
  auto add_row = [&](std::size_t dst, std::size_t src, const T& q) {
    for (std::size_t c = 0; c < k; ++c)
      if (!scalar::is_zero(a(src, c))) a(dst, c) = a(dst, c) + q * a(src, c);
    for (std::size_t c = 0; c < m; ++c)
      if (!scalar::is_zero(u(src, c))) u(dst, c) = u(dst, c) + q * u(src, c);
    for (std::size_t r = 0; r < m; ++r)
      if (!scalar::is_zero(ui(r, dst))) ui(r, src) = ui(r, src) - q * ui(r, dst);
  };
  // col_dst += q col_src
  auto add_col = [&](std::size_t dst, std::size_t src, const T& q) {
    for (std::size_t r = 0; r < m; ++r)
      if (!scalar::is_zero(a(r, src))) a(r, dst) = a(r, dst) + q * a(r, src);
    for (std::size_t r = 0; r < k; ++r)
      if (!scalar::is_zero(v(r, src))) v(r, dst) = v(r, dst) + q * v(r, src);
  };

  const std::size_t n = std::min(m, k);
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t bi = m, bj = k;
    T best{};
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < k; ++j) {
        if (scalar::is_zero(a(i, j))) continue;
        T x = scalar::abs(a(i, j));
        if (bi == m || x < best) {
          bi = i;
          bj = j;
          best = x;
        }
      }
    if (bi == m) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    for (;;) {
      const T p = a(t, t);
      for (std::size_t i = t + 1; i < m; ++i)
        if (!scalar::is_zero(a(i, t))) add_row(i, t, -(a(i, t) / p));
      for (std::size_t j = t + 1; j < k; ++j)
        if (!scalar::is_zero(a(t, j))) add_col(j, t, -(a(t, j) / p));
      bool moved = false;
      for (std::size_t i = t + 1; i < m && !moved; ++i)
        if (!scalar::is_zero(a(i, t))) {
          swap_rows(t, i);
          moved = true;
        }
      for (std::size_t j = t + 1; j < k && !moved; ++j)
        if (!scalar::is_zero(a(t, j))) {
          swap_cols(t, j);
          moved = true;
        }
      if (moved) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < k; ++j)
          if (!scalar::is_zero(a(i, j) % a(t, t))) {
            add_row(t, i, T(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (a(t, t) < T(0)) {
      for (std::size_t c = 0; c < k; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < m; ++c) u(t, c) = -u(t, c);
      for (std::size_t r = 0; r < m; ++r) ui(r, t) = -ui(r, t);
    }
  }

  SmithDecomposition out;
  out.S = convert_matrix<Integer>(a);
  out.U = convert_matrix<Integer>(u);
  out.V = convert_matrix<Integer>(v);
  out.U_inverse = convert_matrix<Integer>(ui);
  for (std::size_t i = 0; i < t; ++i) {
    out.diagonal.push_back(out.S(i, i));
    if (out.S(i, i) > 1) out.invariant_factors.push_back(out.S(i, i));
  }
  out.free_rank = m - t;
  return out;
}

}  // namespace detail

inline SmithDecomposition snf(const IntegerMatrix& a) {
  return detail::with_fast_path([&](auto tag) {
    using T = decltype(tag);
    return detail::snf_impl(convert_matrix<T>(a));
  });
}

}  // namespace wadefect
