#pragma once

// Finite groups as explicit multiplication tables.
//
// Elements are numbered 0..n-1 with 0 the identity. Groups built from
// permutations enumerate elements breadth-first over generator words, so the
// numbering (and every label) is deterministic.

#include "wadefect/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wadefect {

/// One-line notation: perm[i] is the image of i.
using Permutation = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultMaxGroupOrder = 64;

class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(trivial_data()) {}

  /// Validates a full multiplication table (identity at 0, associativity,
  /// inverses). `generators` must generate the group.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table, std::vector<std::size_t> generators,
                                std::vector<std::string> generator_names = {}) {
    auto d = std::make_shared<Data>();
    d->n = table.size();
    d->table.resize(d->n * d->n);
    for (std::size_t a = 0; a < d->n; ++a) {
      if (table[a].size() != d->n) throw InputError("multiplication table is not square");
      for (std::size_t b = 0; b < d->n; ++b) {
        if (table[a][b] >= d->n) throw InputError("multiplication table entry out of range");
        d->table[a * d->n + b] = static_cast<uint16_t>(table[a][b]);
      }
    }
    d->generators = std::move(generators);
    d->generator_names = std::move(generator_names);
    FiniteGroup g(std::move(d));
    g.finish_construction();
    return g;
  }

  std::size_t order() const { return d_->n; }
  static constexpr std::size_t identity() { return 0; }

  std::size_t mul(std::size_t a, std::size_t b) const { return d_->table[a * d_->n + b]; }
  std::size_t inv(std::size_t a) const { return d_->inverse[a]; }
  std::size_t conjugate(std::size_t x, std::size_t a) const { return mul(mul(x, a), inv(x)); }

  std::size_t power(std::size_t a, std::size_t k) const {
    std::size_t r = identity();
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
  }

  const std::vector<std::size_t>& generators() const { return d_->generators; }
  const std::vector<std::string>& generator_names() const { return d_->generator_names; }

  /// Breadth-first word of an element as positions into generators().
  const std::vector<std::size_t>& word(std::size_t a) const { return d_->words[a]; }

  /// BFS parent and the generator position leading to `a` (a = parent * gen).
  std::pair<std::size_t, std::size_t> tree_edge(std::size_t a) const { return d_->edges[a]; }

  /// Order in which elements were first reached (identity first).
  const std::vector<std::size_t>& bfs_order() const { return d_->bfs; }

  std::string label(std::size_t a) const {
    if (a == identity()) return "e";
    std::string s;
    for (std::size_t p : word(a)) {
      if (!s.empty()) s += '*';
      s += d_->generator_names[p];
    }
    return s;
  }

  /// Permutation images when the group was built from permutations.
  const std::optional<std::vector<Permutation>>& permutations() const { return d_->perms; }
  std::size_t degree() const { return d_->degree; }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Element index of a generator word given as generator positions.
  std::size_t evaluate(const std::vector<std::size_t>& positions) const {
    std::size_t r = identity();
    for (std::size_t p : positions) r = mul(r, d_->generators.at(p));
    return r;
  }

  /// Full re-check of the group axioms on the table.
  bool verify_axioms() const {
    const std::size_t n = order();
    for (std::size_t a = 0; a < n; ++a) {
      if (mul(0, a) != a || mul(a, 0) != a) return false;
      if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0) return false;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    }
    return true;
  }

  bool same_as(const FiniteGroup& o) const { return d_ == o.d_ || d_->table == o.d_->table; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.same_as(b) && a.d_->generators == b.d_->generators;
  }

  friend FiniteGroup group_from_generators(std::size_t, const std::vector<Permutation>&, std::vector<std::string>,
                                           std::size_t);

 private:
  struct Data {
    std::size_t n = 1;
    std::vector<uint16_t> table{0};
    std::vector<std::size_t> inverse{0};
    std::vector<std::size_t> generators;
    std::vector<std::string> generator_names;
    std::vector<std::vector<std::size_t>> words{{}};
    std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 0}};
    std::vector<std::size_t> bfs{0};
    std::optional<std::vector<Permutation>> perms;
    std::size_t degree = 0;
  };

  explicit FiniteGroup(std::shared_ptr<Data> d) : d_(std::move(d)) {}

  static std::shared_ptr<Data> trivial_data() {
    static const auto d = std::make_shared<Data>();
    return d;
  }

  void finish_construction() {
    Data& d = *d_;
    const std::size_t n = d.n;
    if (n == 0) throw InputError("a group has at least one element");
    for (std::size_t a = 0; a < n; ++a)
      if (mul(0, a) != a || mul(a, 0) != a) throw InputError("element 0 is not the identity");
    d.inverse.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        if (mul(a, b) == 0) {
          if (mul(b, a) != 0) throw InputError("one-sided inverse in multiplication table");
          d.inverse[a] = b;
          break;
        }
      if (d.inverse[a] == n) throw InputError("element without inverse in multiplication table");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InputError("multiplication table is not associative");
    for (std::size_t g : d.generators)
      if (g >= n) throw InputError("generator index out of range");
    if (d.generator_names.empty())
      for (std::size_t i = 0; i < d.generators.size(); ++i) d.generator_names.push_back("g" + std::to_string(i));
    if (d.generator_names.size() != d.generators.size()) throw InputError("generator name count mismatch");
    // breadth-first words
    d.words.assign(n, {});
    d.edges.assign(n, {0, 0});
    d.bfs.clear();
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      d.bfs.push_back(x);
      for (std::size_t p = 0; p < d.generators.size(); ++p) {
        std::size_t y = mul(x, d.generators[p]);
        if (seen[y]) continue;
        seen[y] = true;
        d.words[y] = d.words[x];
        d.words[y].push_back(p);
        d.edges[y] = {x, p};
        queue.push_back(y);
      }
    }
    if (d.bfs.size() != n) throw InputError("listed generators do not generate the group");
  }

  // never mutated once construction returns
  std::shared_ptr<Data> d_;
};

/// Closure of permutation generators, elements in breadth-first order over
/// generator words.
inline FiniteGroup group_from_generators(std::size_t degree, const std::vector<Permutation>& perms,
                                         std::vector<std::string> names = {},
                                         std::size_t max_order = kDefaultMaxGroupOrder) {
  for (const auto& p : perms) {
    if (p.size() != degree) throw InputError("permutation length differs from the degree");
    std::vector<bool> hit(degree, false);
    for (std::size_t x : p) {
      if (x >= degree || hit[x]) throw InputError("not a permutation of {0..degree-1}");
      hit[x] = true;
    }
  }
  if (!names.empty() && names.size() != perms.size()) throw InputError("generator name count mismatch");
  // (a*b)(x) = a(b(x))
  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t x = 0; x < degree; ++x) c[x] = a[b[x]];
    return c;
  };
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elems{id};
  std::map<Permutation, std::size_t> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : perms) {
      Permutation y = compose(elems[head], s);
      if (index.count(y)) continue;
      if (elems.size() >= max_order) throw SizeError("group closure exceeds the order bound " + std::to_string(max_order));
      index.emplace(y, elems.size());
      elems.push_back(std::move(y));
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::size_t> gens;
  for (const auto& s : perms) gens.push_back(index.at(s));
  FiniteGroup g = FiniteGroup::from_table(std::move(table), std::move(gens), std::move(names));
  FiniteGroup::Data& d = *g.d_;
  d.perms = std::move(elems);
  d.degree = degree;
  return g;
}

/// Element set of the subgroup generated by `elements`.
inline std::vector<std::size_t> generated_elements(const FiniteGroup& g, const std::vector<std::size_t>& elements) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> out{0};
  in[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (std::size_t s : elements) {
      std::size_t y = g.mul(out[head], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

class Subgroup {
 public:
  Subgroup() = default;

  /// `elements` must be closed under multiplication and contain the identity.
  Subgroup(FiniteGroup parent, std::vector<std::size_t> elements) : parent_(std::move(parent)), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    member_.assign(parent_.order(), false);
    for (std::size_t e : elems_) {
      if (e >= parent_.order()) throw InputError("subgroup element index out of range");
      member_[e] = true;
    }
    if (!verify_closure()) throw InputError("element set is not a subgroup");
  }

  static Subgroup generated_by(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
    for (std::size_t x : gens)
      if (x >= g.order()) throw InputError("element index out of range");
    return Subgroup(g, generated_elements(g, gens));
  }
  static Subgroup trivial(const FiniteGroup& g) { return Subgroup(g, {0}); }
  static Subgroup whole(const FiniteGroup& g) {
    std::vector<std::size_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
  }

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<std::size_t>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  bool contains(std::size_t a) const { return a < member_.size() && member_[a]; }

  bool verify_closure() const {
    if (elems_.empty() || elems_.front() != 0) return false;
    for (std::size_t a : elems_) {
      if (!contains(parent_.inv(a))) return false;
      for (std::size_t b : elems_)
        if (!contains(parent_.mul(a, b))) return false;
    }
    return true;
  }

  Subgroup conjugate_by(std::size_t x) const {
    std::vector<std::size_t> c;
    for (std::size_t a : elems_) c.push_back(parent_.conjugate(x, a));
    return Subgroup(parent_, std::move(c));
  }

  bool is_cyclic() const {
    for (std::size_t a : elems_)
      if (parent_.element_order(a) == order()) return true;
    return false;
  }

  /// First element (in index order) of maximal order; generates when cyclic.
  std::size_t max_order_element() const {
    std::size_t best = 0, best_order = 1;
    for (std::size_t a : elems_) {
      std::size_t o = parent_.element_order(a);
      if (o > best_order) {
        best = a;
        best_order = o;
      }
    }
    return best;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_as(b.parent_) && a.elems_ == b.elems_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems_ < b.elems_;
  }

 private:
  FiniteGroup parent_;
  std::vector<std::size_t> elems_{0};
  std::vector<bool> member_{true};
};

/// A subgroup re-expressed as a group in its own right; element i of
/// `group` is element to_parent[i] of the parent.
struct SubgroupEmbedding {
  FiniteGroup group;
  std::vector<std::size_t> to_parent;
};

inline SubgroupEmbedding standalone(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto& elems = h.elements();
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = i;
  std::vector<std::vector<std::size_t>> table(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) table[i][j] = local.at(g.mul(elems[i], elems[j]));
  // greedy generating set in index order
  std::vector<std::size_t> gens, names_src;
  std::vector<std::size_t> span{0};
  for (std::size_t i = 1; i < elems.size() && span.size() < elems.size(); ++i) {
    if (std::binary_search(span.begin(), span.end(), elems[i])) continue;
    names_src.push_back(elems[i]);
    gens.push_back(i);
    span = generated_elements(g, names_src);
  }
  std::vector<std::string> names;
  for (std::size_t p : names_src) names.push_back(g.label(p));
  return {FiniteGroup::from_table(std::move(table), std::move(gens), std::move(names)), elems};
}

/// Representatives x_i of the right cosets h x_i, one per coset, each the
/// smallest index in its coset.
inline std::vector<std::size_t> right_coset_representatives(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<bool> covered(g.order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (std::size_t a : h.elements()) covered[g.mul(a, x)] = true;
  }
  return reps;
}

/// Left cosets a h, ordered by smallest element; coset_of[x] is the index
/// of the coset containing x.
struct LeftCosets {
  std::vector<std::size_t> representatives;
  std::vector<std::size_t> coset_of;
};

inline LeftCosets left_cosets(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  LeftCosets c;
  c.coset_of.assign(g.order(), g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (c.coset_of[x] != g.order()) continue;
    const std::size_t idx = c.representatives.size();
    c.representatives.push_back(x);
    for (std::size_t a : h.elements()) c.coset_of[g.mul(x, a)] = idx;
  }
  return c;
}

/// One representative per conjugacy class of cyclic subgroups (the trivial
/// subgroup included): the smallest element set in each class, sorted by
/// (order, element set).
inline std::vector<Subgroup> cyclic_subgroups_up_to_conjugacy(const FiniteGroup& g) {
  std::set<std::vector<std::size_t>> cyclic;
  for (std::size_t a = 0; a < g.order(); ++a) cyclic.insert(generated_elements(g, {a}));
  std::set<std::vector<std::size_t>> done;
  std::vector<Subgroup> reps;
  for (const auto& s : cyclic) {
    if (done.count(s)) continue;
    Subgroup h(g, s);
    std::vector<std::size_t> best = s;
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto c = h.conjugate_by(x).elements();
      done.insert(c);
      best = std::min(best, c);
    }
    reps.emplace_back(g, best);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p <= n; ++p)
    if (n % p == 0 && is_prime(p)) out.push_back(p);
  return out;
}

/// A Sylow p-subgroup, grown greedily from the trivial subgroup; the trivial
/// subgroup when p does not divide the order.
inline Subgroup sylow_subgroup(const FiniteGroup& g, std::size_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;
  auto is_p_power = [p](std::size_t k) {
    while (k % p == 0) k /= p;
    return k == 1;
  };
  std::vector<std::size_t> current{0};
  std::vector<std::size_t> gens;
  bool grown = true;
  while (current.size() < target && grown) {
    grown = false;
    for (std::size_t x = 1; x < g.order() && current.size() < target; ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      if (!is_p_power(g.element_order(x))) continue;
      auto trial_gens = gens;
      trial_gens.push_back(x);
      auto trial = generated_elements(g, trial_gens);
      if (is_p_power(trial.size())) {
        gens = std::move(trial_gens);
        current = std::move(trial);
        grown = true;
      }
    }
  }
  if (current.size() != target) throw ConsistencyError("Sylow subgroup search did not reach full order");
  return Subgroup(g, current);
}

/// All Sylow subgroups are cyclic.
inline bool is_metacyclic(const FiniteGroup& g) {
  for (std::size_t p : prime_divisors(g.order()))
    if (!sylow_subgroup(g, p).is_cyclic()) return false;
  return true;
}

inline bool is_cyclic(const Subgroup& h) { return h.is_cyclic(); }
inline bool is_cyclic(const FiniteGroup& g) { return Subgroup::whole(g).is_cyclic(); }

}  // namespace wadefect
