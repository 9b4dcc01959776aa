#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// normal-form or cohomology code it is used to check.

#include "wadefect/integer.hpp"
#include "wadefect/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using wadefect::Integer;
using wadefect::IntegerMatrix;
using wadefect::IntegerVector;

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

/// Smith diagonal via determinantal divisors: d_i = D_i / D_{i-1} with D_i
/// the gcd of all i x i minors.
inline IntegerVector smith_diagonal_from_minors(const IntegerMatrix& a) {
  IntegerVector out;
  Integer prev = 1;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t s = 1; s <= n; ++s) {
    Integer g = 0;
    for_each_subset(a.rows(), s, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(a.cols(), s, [&](const std::vector<std::size_t>& cs) {
        IntegerMatrix m(s, s);
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) m(i, j) = a(rs[i], cs[j]);
        g = wadefect::scalar::gcd(g, wadefect::determinant(m));
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Elements of the subgroup of Z/m_1 x ... x Z/m_k generated by `gens`.
inline std::set<std::vector<int64_t>> closure(const std::vector<int64_t>& moduli,
                                              const std::vector<std::vector<int64_t>>& gens) {
  std::set<std::vector<int64_t>> seen;
  std::deque<std::vector<int64_t>> queue;
  std::vector<int64_t> zero(moduli.size(), 0);
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = ((y[i] + g[i]) % moduli[i] + moduli[i]) % moduli[i];
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen;
}

/// |Z^n / column-span(a)| for a cokernel known to be finite: the lattice
/// contains d Z^n for any nonzero maximal minor d, so count inside (Z/d)^n.
inline Integer cokernel_order_by_enumeration(const IntegerMatrix& a) {
  const std::size_t n = a.rows();
  Integer d = 0;
  for_each_subset(a.cols(), n, [&](const std::vector<std::size_t>& cs) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, cs[j]);
    Integer det = wadefect::scalar::abs(wadefect::determinant(m));
    if (det != 0 && (d == 0 || det < d)) d = det;
  });
  const int64_t dd = static_cast<int64_t>(d);
  std::vector<int64_t> moduli(n, dd);
  std::vector<std::vector<int64_t>> gens;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::vector<int64_t> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<int64_t>(a(i, j));
    gens.push_back(g);
  }
  Integer total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= dd;
  return total / Integer(closure(moduli, gens).size());
}

}  // namespace oracle

#include "wadefect/abelian_group.hpp"
#include "wadefect/g_lattice.hpp"
#include "wadefect/normal_form.hpp"

namespace oracle {

/// H^1 from the generator-pair system: c(1) = 0 and c(a s) = c(a) + a c(s)
/// for every element a and generator s.
inline wadefect::FiniteAbelianGroup h1_generator_pairs(const wadefect::GLattice& m) {
  const auto& g = m.group();
  const std::size_t n = g.order(), r = m.rank();
  const auto& gens = g.generators();
  IntegerMatrix sys((1 + n * gens.size()) * r, n * r);
  for (std::size_t i = 0; i < r; ++i) sys(i, i) = 1;
  std::size_t row = r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t s : gens) {
      const std::size_t as = g.mul(a, s);
      for (std::size_t i = 0; i < r; ++i) {
        sys(row + i, as * r + i) += 1;
        sys(row + i, a * r + i) -= 1;
        for (std::size_t k = 0; k < r; ++k) sys(row + i, s * r + k) -= m.action(a)(i, k);
      }
      row += r;
    }
  IntegerMatrix cob(n * r, r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) cob(a * r + i, k) = m.action(a)(i, k) - (i == k ? 1 : 0);
  return wadefect::LatticeQuotient(wadefect::kernel_basis(sys), cob).group();
}

/// Normalized 2-cochain value c(a, b) (zero when a or b is the identity).
inline std::vector<Integer> two_cochain_at(const wadefect::GLattice& m, std::span<const Integer> c, std::size_t a,
                                           std::size_t b) {
  const std::size_t n = m.group().order(), r = m.rank();
  std::vector<Integer> out(r, 0);
  if (a == 0 || b == 0) return out;
  const std::size_t at = ((a - 1) * (n - 1) + (b - 1)) * r;
  for (std::size_t i = 0; i < r; ++i) out[i] = c[at + i];
  return out;
}

/// a c(b, d) - c(ab, d) + c(a, bd) - c(a, b) = 0 on every triple.
inline bool is_two_cocycle(const wadefect::GLattice& m, std::span<const Integer> c) {
  const auto& g = m.group();
  const std::size_t n = g.order(), r = m.rank();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        auto x = m.action(a) * std::span<const Integer>(two_cochain_at(m, c, b, d));
        auto y = two_cochain_at(m, c, g.mul(a, b), d);
        auto z = two_cochain_at(m, c, a, g.mul(b, d));
        auto w = two_cochain_at(m, c, a, b);
        for (std::size_t i = 0; i < r; ++i)
          if (x[i] - y[i] + z[i] - w[i] != 0) return false;
      }
  return true;
}

/// Z^2 as the kernel of the explicit coboundary d2 on normalized cochains,
/// with the coboundaries written from scratch.
inline wadefect::FiniteAbelianGroup h2_from_kernel(const wadefect::GLattice& m) {
  const auto& g = m.group();
  const std::size_t n = g.order(), r = m.rank();
  if (n <= 1 || r == 0) return wadefect::FiniteAbelianGroup();
  const std::size_t dim = (n - 1) * (n - 1) * r;
  auto slot = [&](std::size_t a, std::size_t b) { return ((a - 1) * (n - 1) + (b - 1)) * r; };
  IntegerMatrix d2((n - 1) * (n - 1) * (n - 1) * r, dim);
  std::size_t row = 0;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      for (std::size_t d = 1; d < n; ++d, row += r) {
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t k = 0; k < r; ++k) d2(row + i, slot(b, d) + k) += m.action(a)(i, k);
          if (g.mul(a, b) != 0) d2(row + i, slot(g.mul(a, b), d) + i) -= 1;
          if (g.mul(b, d) != 0) d2(row + i, slot(a, g.mul(b, d)) + i) += 1;
          d2(row + i, slot(a, b) + i) -= 1;
        }
      }
  // coboundaries of normalized 1-cochains f, one f(c) = e_k at a time
  IntegerMatrix b2(dim, (n - 1) * r);
  for (std::size_t c = 1; c < n; ++c)
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t col = (c - 1) * r + k;
      for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) {
          if (b == c)
            for (std::size_t i = 0; i < r; ++i) b2(slot(a, b) + i, col) += m.action(a)(i, k);
          if (g.mul(a, b) == c) b2(slot(a, b) + k, col) -= 1;
          if (a == c) b2(slot(a, b) + k, col) += 1;
        }
    }
  return wadefect::LatticeQuotient(wadefect::kernel_basis(d2), b2).group();
}

}  // namespace oracle

#include "wadefect/cohomology.hpp"

#include <map>

namespace oracle {

/// Number of elements of each order in Z/d_1 + ... + Z/d_k.
inline std::map<Integer, std::size_t> order_profile(const wadefect::FiniteAbelianGroup& g) {
  std::map<Integer, std::size_t> out;
  for (const auto& x : g.elements()) ++out[g.element_order(x)];
  return out;
}

/// Order profile of Sha_S / Sha_empty by enumeration: Sha_S is the set of
/// classes whose image vanishes under every map in `kept`, Sha_empty
/// additionally under every map in `dropped`.
inline std::map<Integer, std::size_t> defect_profile_by_enumeration(const wadefect::FiniteAbelianGroup& h1,
                                                                    const std::vector<wadefect::CohomologyMap>& kept,
                                                                    const std::vector<wadefect::CohomologyMap>& dropped) {
  auto dies = [](const std::vector<wadefect::CohomologyMap>& maps, const std::vector<Integer>& x) {
    for (const auto& m : maps)
      if (!m.target().value().is_zero(m.apply(x))) return false;
    return true;
  };
  std::set<std::vector<Integer>> sha_s, sha_empty;
  for (const auto& x : h1.elements()) {
    if (!dies(kept, x)) continue;
    sha_s.insert(x);
    if (dies(dropped, x)) sha_empty.insert(x);
  }
  std::map<Integer, std::size_t> out;
  for (const auto& x : sha_s) {
    Integer k = 1;
    auto y = x;
    while (!sha_empty.count(y)) {
      y = h1.add(y, x);
      ++k;
    }
    ++out[k];
  }
  // each coset was counted |Sha_empty| times
  for (auto& [k, v] : out) v /= sha_empty.size();
  return out;
}

}  // namespace oracle
