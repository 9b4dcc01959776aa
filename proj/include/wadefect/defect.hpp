#pragma once

// Defect of weak approximation for a finite Galois model: a group acting on
// a character lattice and a list of special places. Every cyclic subgroup
// class is also realized by some place outside any finite S.

#include "wadefect/abelian_group.hpp"
#include "wadefect/cohomology.hpp"
#include "wadefect/errors.hpp"
#include "wadefect/finite_group.hpp"
#include "wadefect/g_lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wadefect {

struct Place {
  std::string name;
  Subgroup decomposition;
  bool archimedean = false;
};

class ArithmeticContext {
 public:
  ArithmeticContext() = default;

  ArithmeticContext(FiniteGroup group, GLattice lattice, std::vector<Place> places)
      : group_(std::move(group)), lattice_(std::move(lattice)), places_(std::move(places)) {
    if (!lattice_.group().same_as(group_)) throw InputError("lattice: defined over a different group");
    std::set<std::string> names;
    for (std::size_t i = 0; i < places_.size(); ++i) {
      const Place& p = places_[i];
      const std::string where = "places[" + std::to_string(i) + "]";
      if (p.name.empty()) throw InputError(where + ".name: empty place name");
      if (!names.insert(p.name).second) throw InputError(where + ".name: duplicate place name '" + p.name + "'");
      if (!p.decomposition.parent().same_as(group_))
        throw InputError(where + ".decomposition: not a subgroup of the context group");
      if (p.archimedean && p.decomposition.order() > 2)
        throw InputError(where + ".decomposition: archimedean place '" + p.name + "' has decomposition group of order " +
                         std::to_string(p.decomposition.order()) + " (at most 2 allowed)");
    }
  }

  const FiniteGroup& group() const { return group_; }
  const GLattice& lattice() const { return lattice_; }
  const std::vector<Place>& places() const { return places_; }

  const Place& place(const std::string& name) const {
    for (const auto& p : places_)
      if (p.name == name) return p;
    throw InputError("unknown place '" + name + "'");
  }

 private:
  FiniteGroup group_;
  GLattice lattice_;
  std::vector<Place> places_;
};

enum class Shortcut { none, cyclic_splitting, metacyclic, s_cap_s0_empty };

inline std::string to_string(Shortcut s) {
  switch (s) {
    case Shortcut::cyclic_splitting:
      return "cyclic-splitting";
    case Shortcut::metacyclic:
      return "metacyclic";
    case Shortcut::s_cap_s0_empty:
      return "S-cap-S0-empty";
    default:
      return "none";
  }
}

struct DefectReport {
  std::vector<std::string> S;
  std::vector<std::string> S0;
  FiniteAbelianGroup C_S;
  FiniteAbelianGroup C_S_dual_path;
  bool wa_verdict = true;
  Shortcut shortcut_used = Shortcut::none;
  bool real_approximation = false;  // S nonempty and every place in it archimedean
};

/// Special places with non-cyclic decomposition group, in context order.
inline std::vector<std::string> compute_S0(const ArithmeticContext& ctx) {
  std::vector<std::string> out;
  for (const auto& p : ctx.places())
    if (!p.archimedean && !p.decomposition.is_cyclic()) out.push_back(p.name);
  return out;
}

/// Caches H^1(g, lattice) and restriction kernels across queries on one
/// context. B(T) is the dual of H^1 with the diagonal pairing.
class DefectEngine {
 public:
  explicit DefectEngine(ArithmeticContext ctx)
      : ctx_(std::move(ctx)), h1_(tate(ctx_.group(), ctx_.lattice(), 1)),
        cyclic_(cyclic_subgroups_up_to_conjugacy(ctx_.group())) {}

  const ArithmeticContext& context() const { return ctx_; }
  const CohomologyGroup& h1() const { return h1_; }
  const FiniteAbelianGroup& b_group() const { return h1_.value(); }

  SubgroupHandle restriction_kernel(const Subgroup& d) {
    auto it = kernels_.find(d.elements());
    if (it != kernels_.end()) return it->second;
    SubgroupHandle k = restriction(h1_, d).kernel();
    kernels_.emplace(d.elements(), k);
    return k;
  }

  /// Image of B_v in B(T): the annihilator of the restriction kernel.
  SubgroupHandle lambda_image(const Subgroup& d) { return annihilator(restriction_kernel(d)); }

  /// Normalized S in context order; throws on unknown names.
  std::vector<std::string> resolve(const std::vector<std::string>& s) const {
    std::set<std::string> wanted(s.begin(), s.end());
    for (const auto& name : wanted) ctx_.place(name);
    std::vector<std::string> out;
    for (const auto& p : ctx_.places())
      if (wanted.count(p.name)) out.push_back(p.name);
    return out;
  }

  /// B^S: lambda images of every cyclic class and of special places outside S.
  SubgroupHandle b_upper(const std::vector<std::string>& s) {
    const std::set<std::string> in_s(s.begin(), s.end());
    SubgroupHandle sum = SubgroupHandle::trivial(b_group());
    for (const auto& c : cyclic_) sum = subgroup_sum(sum, lambda_image(c));
    for (const auto& p : ctx_.places())
      if (!in_s.count(p.name)) sum = subgroup_sum(sum, lambda_image(p.decomposition));
    return sum;
  }

  /// Sha^1_S: classes dying on every cyclic class and every special place outside S.
  SubgroupHandle sha_s(const std::vector<std::string>& s) {
    const std::set<std::string> in_s(s.begin(), s.end());
    SubgroupHandle k = SubgroupHandle::whole(b_group());
    for (const auto& c : cyclic_) k = subgroup_intersection(k, restriction_kernel(c));
    for (const auto& p : ctx_.places())
      if (!in_s.count(p.name)) k = subgroup_intersection(k, restriction_kernel(p.decomposition));
    return k;
  }

  /// B' / B^S.
  FiniteAbelianGroup defect_primal(const std::vector<std::string>& s) {
    auto r = resolve(s);
    return subquotient(b_upper({}), b_upper(r));
  }

  /// Sha^1_S / Sha^1_empty, which is dual to B' / B^S.
  FiniteAbelianGroup defect_dual(const std::vector<std::string>& s) {
    auto r = resolve(s);
    return subquotient(sha_s(r), sha_s({}));
  }

  DefectReport verdict(const std::vector<std::string>& s) {
    DefectReport rep;
    rep.S = resolve(s);
    rep.S0 = compute_S0(ctx_);
    rep.C_S = defect_primal(rep.S);
    rep.C_S_dual_path = defect_dual(rep.S);
    if (rep.C_S.invariant_factors() != rep.C_S_dual_path.invariant_factors())
      throw ConsistencyError("defect paths disagree: primal " + rep.C_S.to_string() + ", dual " +
                             rep.C_S_dual_path.to_string());
    rep.wa_verdict = rep.C_S.is_trivial();

    bool meets_s0 = false;
    for (const auto& name : rep.S)
      for (const auto& t : rep.S0) meets_s0 = meets_s0 || name == t;
    if (is_cyclic(ctx_.group()))
      rep.shortcut_used = Shortcut::cyclic_splitting;
    else if (is_metacyclic(ctx_.group()))
      rep.shortcut_used = Shortcut::metacyclic;
    else if (!meets_s0)
      rep.shortcut_used = Shortcut::s_cap_s0_empty;
    if (rep.shortcut_used != Shortcut::none && !rep.wa_verdict)
      throw ConsistencyError("shortcut " + to_string(rep.shortcut_used) + " predicts a trivial defect but C_S = " +
                             rep.C_S.to_string());

    rep.real_approximation = !rep.S.empty();
    for (const auto& name : rep.S) rep.real_approximation = rep.real_approximation && ctx_.place(name).archimedean;
    return rep;
  }

  /// defect(S) and defect(S ∩ S0) agree.
  bool s0_reduction_check(const std::vector<std::string>& s) {
    auto r = resolve(s);
    const auto s0 = compute_S0(ctx_);
    std::vector<std::string> cut;
    for (const auto& name : r)
      if (std::find(s0.begin(), s0.end(), name) != s0.end()) cut.push_back(name);
    return defect_primal(r).invariant_factors() == defect_primal(cut).invariant_factors();
  }

 private:
  ArithmeticContext ctx_;
  CohomologyGroup h1_;
  std::vector<Subgroup> cyclic_;
  std::map<std::vector<std::size_t>, SubgroupHandle> kernels_;
};

inline SubgroupHandle lambda_image(const ArithmeticContext& ctx, const Subgroup& d) {
  return DefectEngine(ctx).lambda_image(d);
}

inline FiniteAbelianGroup defect_primal(const ArithmeticContext& ctx, const std::vector<std::string>& s) {
  return DefectEngine(ctx).defect_primal(s);
}

inline FiniteAbelianGroup defect_dual(const ArithmeticContext& ctx, const std::vector<std::string>& s) {
  return DefectEngine(ctx).defect_dual(s);
}

inline DefectReport verdict(const ArithmeticContext& ctx, const std::vector<std::string>& s) {
  return DefectEngine(ctx).verdict(s);
}

inline bool s0_reduction_check(const ArithmeticContext& ctx, const std::vector<std::string>& s) {
  return DefectEngine(ctx).s0_reduction_check(s);
}

}  // namespace wadefect
