#pragma once

// Invariant checks over the built-in catalog.

#include "wadefect/catalog.hpp"
#include "wadefect/cohomology.hpp"
#include "wadefect/defect.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace wadefect {

struct SelftestResult {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

namespace selftest_detail {

inline std::vector<std::vector<std::string>> subsets(const ArithmeticContext& ctx) {
  std::vector<std::vector<std::string>> out;
  const std::size_t n = ctx.places().size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(ctx.places()[i].name);
    out.push_back(std::move(s));
  }
  return out;
}

/// Replaces the action of the first generator by twice itself.
inline ArithmeticContext corrupt(const ArithmeticContext& ctx) {
  std::vector<IntegerMatrix> action = ctx.lattice().actions();
  const auto& gens = ctx.group().generators();
  if (!gens.empty()) action[gens.front()] = Integer(2) * action[gens.front()];
  return ArithmeticContext(ctx.group(), GLattice::unchecked(ctx.group(), std::move(action)), ctx.places());
}

}  // namespace selftest_detail

/// Runs every check, printing one line each. `corrupt_first` damages the
/// action matrices of the first catalog entry.
inline SelftestResult run_selftest(std::ostream& out, bool corrupt_first = false) {
  SelftestResult res;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (ok) {
      ++res.passed;
      out << "ok    " << name << "\n";
    } else {
      ++res.failed;
      out << "FAIL  " << name << (why.empty() ? "" : ": " + why) << "\n";
    }
  };

  bool first = true;
  for (const auto& entry : catalog()) {
    ContextDocument doc = parse_context(entry.document);
    if (first && corrupt_first) doc.context = selftest_detail::corrupt(doc.context);
    first = false;
    const ArithmeticContext& ctx = doc.context;
    const FiniteGroup& g = ctx.group();
    const GLattice& m = ctx.lattice();
    const std::string tag = entry.name + ": ";

    check(tag + "action is a homomorphism", [&] { return m.verify_all_pairs(); });
    check(tag + "document round trip", [&] { return same_context(parse_context(serialize_context(doc)).context, ctx); });
    for (int i = -1; i <= 2; ++i) {
      const std::string deg = " (degree " + std::to_string(i) + ")";
      check(tag + "group order kills cohomology" + deg, [&] {
        auto h = tate(g, m, i);
        for (auto rep : h.representative_lift()) {
          for (auto& x : rep) x *= Integer(g.order());
          if (!h.is_coboundary(rep)) return false;
        }
        return true;
      });
      if (is_cyclic(g))
        check(tag + "closed form for cyclic groups" + deg, [&] {
          return tate(g, m, i).value().invariant_factors() == tate_cyclic(g, m, i).value().invariant_factors();
        });
      if (is_metacyclic(g)) check(tag + "Sha_Omega vanishes" + deg, [&] { return sha_omega(g, m, i).group.is_trivial(); });
      check(tag + "Sylow restrictions are jointly injective" + deg, [&] {
        std::vector<Subgroup> sylows;
        for (std::size_t p : prime_divisors(g.order())) sylows.push_back(sylow_subgroup(g, p));
        return restriction_kernel(tate(g, m, i), sylows).is_trivial();
      });
      if (g.order() <= 6 && i <= 1)
        check(tag + "degree shift" + deg, [&] {
          return tate(g, m, i).value().invariant_factors() == tate(g, shift_degree(m), i + 1).value().invariant_factors();
        });
    }
    check(tag + "defect paths agree, S0 reduction, archimedean S", [&] {
      DefectEngine e(ctx);
      for (const auto& s : selftest_detail::subsets(ctx)) {
        DefectReport rep = e.verdict(s);
        if (!e.s0_reduction_check(s)) return false;
        if (rep.real_approximation && !rep.wa_verdict) return false;
      }
      return true;
    });
  }

  check("klein-augmentation: worked values", [] {
    ContextDocument doc = parse_context(catalog_entry("klein-augmentation").document);
    const auto& ctx = doc.context;
    const bool h1 = tate(ctx.group(), ctx.lattice(), 1).value().to_string() == "Z/4";
    const bool sha = sha_omega(ctx.group(), ctx.lattice(), 1).group.to_string() == "Z/2";
    DefectEngine e(ctx);
    return h1 && sha && e.defect_primal({"v0"}).to_string() == "Z/2" && e.defect_primal({}).is_trivial();
  });

  out << "selftest: " << res.passed << " passed, " << res.failed << " failed\n";
  return res;
}

}  // namespace wadefect
