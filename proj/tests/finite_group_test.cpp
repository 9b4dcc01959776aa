#include "wadefect/finite_group.hpp"
#include "wadefect/groups.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace wadefect;

namespace {

std::vector<FiniteGroup> corpus() {
  return {groups::cyclic(1),         groups::cyclic(2),         groups::cyclic(6),        groups::cyclic(12),
          groups::klein_four(),      groups::symmetric3(),      groups::dihedral(4),      groups::dihedral(5),
          groups::quaternion8(),     groups::alternating4(),    groups::cyclic_product(2, 4),
          groups::elementary_abelian2(3), groups::cyclic_product(4, 4), groups::metacyclic20(), groups::dihedral(6)};
}

// every subgroup generated by at most two elements, by closure
std::set<std::vector<std::size_t>> two_generated_subgroups(const FiniteGroup& g) {
  std::set<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a; b < g.order(); ++b) out.insert(generated_elements(g, {a, b}));
  return out;
}

bool has_generator(const FiniteGroup& g, const std::vector<std::size_t>& elems) {
  for (std::size_t a : elems) {
    std::set<std::size_t> powers;
    std::size_t x = a;
    do {
      powers.insert(x);
      x = g.mul(x, a);
    } while (x != a);
    if (powers.size() == elems.size()) return true;
  }
  return false;
}

}  // namespace

TEST(GroupFromGenerators, Examples) {
  auto s3 = group_from_generators(3, {permutation_from_cycles(3, {{0, 1}}), permutation_from_cycles(3, {{0, 1, 2}})});
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(s3.is_abelian());

  auto k4 = group_from_generators(4, {permutation_from_cycles(4, {{0, 1}}), permutation_from_cycles(4, {{2, 3}})});
  EXPECT_EQ(k4.order(), 4u);
  for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(k4.mul(a, a), 0u);

  auto triv = group_from_generators(1, {});
  EXPECT_EQ(triv.order(), 1u);
}

TEST(GroupFromGenerators, Errors) {
  EXPECT_THROW(group_from_generators(3, {{0, 0, 1}}), InputError);
  EXPECT_THROW(group_from_generators(3, {{0, 1}}), InputError);
  // symmetric group on 5 letters has order 120
  EXPECT_THROW(group_from_generators(5, {permutation_from_cycles(5, {{0, 1}}), permutation_from_cycles(5, {{0, 1, 2, 3, 4}})}),
               SizeError);
  EXPECT_NO_THROW(group_from_generators(
      5, {permutation_from_cycles(5, {{0, 1}}), permutation_from_cycles(5, {{0, 1, 2, 3, 4}})}, {}, 120));
}

TEST(GroupFromGenerators, AxiomsAndDeterminism) {
  for (const auto& g : corpus()) {
    EXPECT_TRUE(g.verify_axioms());
    for (std::size_t a = 0; a < g.order(); ++a) EXPECT_EQ(g.evaluate(g.word(a)), a);
  }
  auto a = groups::metacyclic20(), b = groups::metacyclic20();
  EXPECT_EQ(*a.permutations(), *b.permutations());
  for (std::size_t x = 0; x < a.order(); ++x) EXPECT_EQ(a.label(x), b.label(x));
}

TEST(GroupFromTable, RejectsNonGroups) {
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}, {1}), InputError);
  EXPECT_THROW(FiniteGroup::from_table({{1, 0}, {0, 1}}, {1}), InputError);
  EXPECT_NO_THROW(FiniteGroup::from_table({{0, 1}, {1, 0}}, {1}));
}

TEST(CyclicSubgroups, Examples) {
  EXPECT_EQ(cyclic_subgroups_up_to_conjugacy(groups::klein_four()).size(), 4u);
  auto s3 = cyclic_subgroups_up_to_conjugacy(groups::symmetric3());
  ASSERT_EQ(s3.size(), 3u);
  EXPECT_EQ(s3[0].order(), 1u);
  EXPECT_EQ(s3[1].order(), 2u);
  EXPECT_EQ(s3[2].order(), 3u);
  EXPECT_EQ(cyclic_subgroups_up_to_conjugacy(groups::cyclic(1)).size(), 1u);
}

TEST(CyclicSubgroups, AbelianMatchesBruteForce) {
  for (const auto& g : corpus()) {
    if (!g.is_abelian() || g.order() > 16) continue;
    std::set<std::vector<std::size_t>> expect;
    for (const auto& s : two_generated_subgroups(g))
      if (has_generator(g, s)) expect.insert(s);
    std::set<std::vector<std::size_t>> got;
    for (const auto& h : cyclic_subgroups_up_to_conjugacy(g)) got.insert(h.elements());
    EXPECT_EQ(got, expect);
  }
}

TEST(CyclicSubgroups, OneRepresentativePerClass) {
  for (const auto& g : corpus()) {
    auto reps = cyclic_subgroups_up_to_conjugacy(g);
    std::set<std::vector<std::size_t>> covered;
    for (const auto& h : reps) {
      EXPECT_TRUE(h.verify_closure());
      EXPECT_TRUE(h.is_cyclic());
      std::set<std::vector<std::size_t>> cls;
      for (std::size_t x = 0; x < g.order(); ++x) cls.insert(h.conjugate_by(x).elements());
      for (const auto& c : cls) EXPECT_TRUE(covered.insert(c).second) << "two representatives share a class";
    }
    std::set<std::vector<std::size_t>> all_cyclic;
    for (std::size_t a = 0; a < g.order(); ++a) all_cyclic.insert(generated_elements(g, {a}));
    EXPECT_EQ(covered, all_cyclic);
  }
}

TEST(Sylow, Examples) {
  auto s3 = groups::symmetric3();
  EXPECT_EQ(sylow_subgroup(s3, 2).order(), 2u);
  EXPECT_EQ(sylow_subgroup(s3, 3).order(), 3u);
  EXPECT_EQ(sylow_subgroup(groups::klein_four(), 2).order(), 4u);
  EXPECT_EQ(sylow_subgroup(s3, 5).order(), 1u);
  EXPECT_THROW(sylow_subgroup(s3, 4), InputError);
}

TEST(Sylow, FullOrderAndCountCongruence) {
  for (const auto& g : corpus())
    for (std::size_t p : prime_divisors(g.order())) {
      auto s = sylow_subgroup(g, p);
      std::size_t target = 1;
      for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;
      EXPECT_EQ(s.order(), target);
      EXPECT_TRUE(s.verify_closure());
      std::set<std::vector<std::size_t>> conj;
      for (std::size_t x = 0; x < g.order(); ++x) conj.insert(s.conjugate_by(x).elements());
      EXPECT_EQ(conj.size() % p, 1u);
    }
}

TEST(Metacyclic, Examples) {
  EXPECT_TRUE(is_metacyclic(groups::symmetric3()));
  EXPECT_FALSE(is_metacyclic(groups::klein_four()));
  EXPECT_TRUE(is_metacyclic(groups::cyclic(6)));
  EXPECT_TRUE(is_metacyclic(groups::dihedral(5)));
  EXPECT_TRUE(is_metacyclic(groups::metacyclic20()));
  EXPECT_FALSE(is_metacyclic(groups::quaternion8()));
  EXPECT_FALSE(is_metacyclic(groups::alternating4()));
  EXPECT_FALSE(is_metacyclic(groups::dihedral(4)));
  EXPECT_TRUE(is_metacyclic(groups::cyclic(1)));
}

TEST(Metacyclic, SylowRoundTrip) {
  for (const auto& g : corpus()) {
    if (!is_metacyclic(g)) continue;
    for (std::size_t p : prime_divisors(g.order())) EXPECT_TRUE(is_cyclic(sylow_subgroup(g, p)));
  }
}

TEST(IsCyclic, Examples) {
  auto k4 = groups::klein_four();
  EXPECT_TRUE(is_cyclic(Subgroup::trivial(k4)));
  EXPECT_TRUE(is_cyclic(Subgroup::generated_by(k4, {1})));
  EXPECT_FALSE(is_cyclic(Subgroup::whole(k4)));
}

TEST(Standalone, PreservesStructure) {
  auto g = groups::alternating4();
  auto v4 = sylow_subgroup(g, 2);
  auto emb = standalone(v4);
  EXPECT_EQ(emb.group.order(), 4u);
  EXPECT_TRUE(emb.group.verify_axioms());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(emb.to_parent[emb.group.mul(i, j)], g.mul(emb.to_parent[i], emb.to_parent[j]));
}

TEST(Cosets, Partition) {
  auto g = groups::symmetric3();
  auto h = Subgroup::generated_by(g, {g.generators()[0]});
  auto lc = left_cosets(h);
  EXPECT_EQ(lc.representatives.size(), 3u);
  auto rc = right_coset_representatives(h);
  EXPECT_EQ(rc.size(), 3u);
  std::set<std::size_t> seen;
  for (std::size_t x : rc)
    for (std::size_t a : h.elements()) EXPECT_TRUE(seen.insert(g.mul(a, x)).second);
  EXPECT_EQ(seen.size(), 6u);
}
