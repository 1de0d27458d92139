#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "endotriv/analysis.hpp"
#include "endotriv/errors.hpp"
#include "endotriv/families.hpp"
#include "oracles.hpp"

using namespace endotriv;
using Inv = std::vector<std::uint64_t>;

namespace {

PermGroup slpm23() { return to_perm(classical_group(Classical::kSLpm, 2, 3), PermAction::kFaithful).group; }

// Odd part of |G/[G,G]| by closing the commutators of all element pairs.
std::uint64_t brute_odd_abelianization(const PermGroup& g) {
  auto el = oracle::closure(g.generators(), g.degree());
  std::vector<Perm> comms;
  for (const auto& a : el) {
    for (const auto& b : el) comms.push_back(a.inverse() * b.inverse() * a * b);
  }
  std::set<Perm> uniq(comms.begin(), comms.end());
  auto derived = oracle::closure({uniq.begin(), uniq.end()}, g.degree());
  std::uint64_t q = el.size() / derived.size();
  while (q % 2 == 0) q /= 2;
  return q;
}

std::uint64_t product(const Inv& v) {
  std::uint64_t x = 1;
  for (auto d : v) x *= d;
  return x;
}

}  // namespace

TEST(KGCircle, TwoGroupIsItsOwnKernel) {
  PermGroup g = semidihedral_group(4);
  auto r = k_g_circle(g, sylow_2(g));
  EXPECT_TRUE(r.equals_normalizer);
  EXPECT_EQ(craven_bound(r), Inv{});
}

TEST(KGCircle, SL33) {
  PermGroup g = sl3_eps(1, 3).group;
  auto r = k_g_circle(g, sylow_2(g));
  EXPECT_TRUE(r.equals_normalizer);
  EXPECT_EQ(craven_bound(r), Inv{});
}

TEST(KGCircle, M11) {
  PermGroup g = fixture_m11();
  auto r = k_g_circle(g, sylow_2(g));
  EXPECT_EQ(r.normalizer.order(), 16);
  EXPECT_TRUE(r.equals_normalizer);
}

TEST(KGCircle, ThreeM10) {
  PermGroup g = fixture_3m10();
  PermGroup p = sylow_2(g);
  auto r = k_g_circle(g, p);
  EXPECT_FALSE(r.equals_normalizer);
  EXPECT_EQ(r.ab_quotient_invariants, Inv{3});
  EXPECT_EQ(craven_bound(r), Inv{3});
  EXPECT_TRUE(is_normal(r.normalizer, r.kgc));
  EXPECT_TRUE(o_upper_pprime(r.normalizer, 2).is_subgroup_of(r.kgc));
  EXPECT_TRUE(p.is_subgroup_of(r.kgc));
  std::size_t members = 0;
  for (const auto& c : r.class_log) members += c.class_size;
  EXPECT_EQ(members + 1, subgroups_of_2group(p).size());
}

TEST(KGCircle, PrefixRunsAreSubgroups) {
  for (const auto& g : {fixture_3m10(), sl3_eps(1, 3).group}) {
    PermGroup p = sylow_2(g);
    auto full = k_g_circle(g, p);
    for (std::size_t k = 1; k <= full.class_log.size(); ++k) {
      auto part = k_g_circle(g, p, k);
      EXPECT_TRUE(part.kgc.is_subgroup_of(full.kgc)) << k;
    }
  }
}

TEST(XGroup, Examples) {
  EXPECT_EQ(x_group(fixture_m11()), Inv{});
  EXPECT_EQ(x_group(direct_product(cyclic_group(3), semidihedral_group(4))), Inv{3});
  PermGroup s = slpm23();
  EXPECT_EQ(product(x_group(s)), brute_odd_abelianization(s));
  PermGroup c = direct_product(cyclic_group(3), semidihedral_group(4));
  EXPECT_EQ(product(x_group(c)), brute_odd_abelianization(c));
}

TEST(CharacterTableTest, QuotientInvariants) {
  PermGroup g = direct_product(cyclic_group(3), cyclic_group(3));
  auto chars = one_dim_modules(g, 2);
  ASSERT_EQ(chars.size(), 9u);
  CharacterTable t(chars);
  EXPECT_EQ(t.identity(), 0u);
  std::vector<std::size_t> all(9);
  for (std::size_t i = 0; i < 9; ++i) all[i] = i;
  EXPECT_EQ(t.quotient_invariants(all), (Inv{3, 3}));
  std::size_t a = 1;
  std::vector<std::size_t> line{0, a, t.product(a, a)};
  EXPECT_TRUE(t.is_subgroup(line));
  EXPECT_EQ(t.quotient_invariants(line), Inv{3});
  EXPECT_EQ(t.quotient_invariants(all, line), Inv{3});
  EXPECT_EQ(t.quotient_invariants(line, line), Inv{});
  EXPECT_FALSE(t.is_subgroup({0, 1}));
}

TEST(Green, TwoGroupHasOnlyTrivialCharacter) {
  PermGroup g = semidihedral_group(4);
  auto r = k_group_via_green(g, sylow_2(g));
  ASSERT_EQ(r.characters.size(), 1u);
  EXPECT_FALSE(r.decomposed);
  EXPECT_TRUE(r.flagged[0]);
  EXPECT_EQ(r.group_structure, Inv{});
}

TEST(Green, ThreeM10) {
  PermGroup g = fixture_3m10();
  auto r = k_group_via_green(g, sylow_2(g));
  ASSERT_EQ(r.characters.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(r.flagged[i]) << i;
  for (std::size_t i = 1; i < 3; ++i) {
    EXPECT_EQ(r.correspondent_dims[i], (std::vector<std::size_t>{12, 33}));
    EXPECT_EQ(r.endotrivial_flags[i], (std::vector<bool>{false, true}));
  }
  EXPECT_EQ(r.group_structure, Inv{3});
}

TEST(Green, IndexCap) {
  PermGroup g = fixture_m11();
  EXPECT_THROW(k_group_via_green(g, sylow_2(g), 8, 100), ScaleError);
}

TEST(Report, SemidihedralGroup) {
  auto r = theorem_a_report(semidihedral_group(4));
  EXPECT_EQ(r.shortcuts_applied.size(), 1u);
  EXPECT_NE(r.shortcuts_applied[0].find("O_2(G) > 1"), std::string::npos);
  EXPECT_NE(r.conclusion.find("T(G) ≅ ℤ/2ℤ ⊕ ℤ"), std::string::npos);
  EXPECT_NE(r.conclusion.find("K(G) = X(G) = 1"), std::string::npos);
}

TEST(Report, ThreeM10) {
  auto r = theorem_a_report(fixture_3m10());
  EXPECT_TRUE(r.shortcuts_applied.empty());
  EXPECT_EQ(r.o2prime_order, 3u);
  EXPECT_EQ(r.quotient_label, "heuristic: PGL*_2(9)");
  ASSERT_TRUE(r.kgroup);
  EXPECT_EQ(r.craven_invariants, Inv{3});
  EXPECT_EQ(r.k_group_invariants, Inv{3});
  EXPECT_EQ(r.k_over_x_invariants, Inv{3});
  EXPECT_EQ(r.conclusion, "K(G) ≅ ℤ/3ℤ, K(G)/X(G) ≅ ℤ/3ℤ, T(G) ≅ K(G) ⊕ ℤ/2ℤ ⊕ ℤ");
  EXPECT_TRUE(r.within_theorem_bound);
}

TEST(Report, SelfNormalizingCases) {
  for (const auto& g : {pgl_star(3), fixture_m11()}) {
    auto r = theorem_a_report(g);
    ASSERT_EQ(r.shortcuts_applied.size(), 1u);
    EXPECT_NE(r.shortcuts_applied[0].find("self-normalizing"), std::string::npos);
    ASSERT_TRUE(r.kgc);
    EXPECT_TRUE(r.kgc->equals_normalizer);
    EXPECT_NE(r.conclusion.find("K(G) = X(G) = 1"), std::string::npos);
  }
}

TEST(Report, NormalTwoSubgroupShortcut) {
  auto r = theorem_a_report(slpm23());
  ASSERT_FALSE(r.shortcuts_applied.empty());
  EXPECT_NE(r.shortcuts_applied[0].find("O_2(G) > 1"), std::string::npos);
  EXPECT_EQ(r.o2_order, 8u);
  EXPECT_EQ(r.k_over_x_invariants, Inv{});
  auto it = std::find_if(r.provenance.begin(), r.provenance.end(),
                         [](const auto& p) { return p.first == "k_group"; });
  ASSERT_NE(it, r.provenance.end());
  EXPECT_EQ(it->second.rfind("shortcut:", 0), 0u);
}

TEST(Report, OddCoreGivesNontrivialX) {
  auto r = theorem_a_report(direct_product(cyclic_group(3), semidihedral_group(4)));
  EXPECT_EQ(r.x_group_invariants, Inv{3});
  EXPECT_EQ(r.k_group_invariants, Inv{3});
  EXPECT_EQ(r.conclusion, "K(G) = X(G) ≅ ℤ/3ℤ, T(G) ≅ X(G) ⊕ ℤ/2ℤ ⊕ ℤ");
}

TEST(Report, ShortcutOnlyMode) {
  ReportOptions opt;
  opt.verify_shortcuts = false;
  auto r = theorem_a_report(fixture_m11(), opt);
  EXPECT_FALSE(r.kgc);
  EXPECT_FALSE(r.kgroup);
  EXPECT_EQ(r.k_group_invariants, Inv{});
}

TEST(Report, RejectsOtherSylowTypes) {
  EXPECT_THROW(theorem_a_report(pgl2_square(3)), std::invalid_argument);
  EXPECT_THROW(theorem_a_report(dihedral_group(4)), std::invalid_argument);
}

TEST(Report, JsonIsDeterministic) {
  PermGroup g = fixture_3m10();
  std::string a = to_json(theorem_a_report(g));
  std::string b = to_json(theorem_a_report(g));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"schema_version\": 1"), std::string::npos);
  EXPECT_NE(a.find("\"k_group_invariants\": [\n    3\n  ]"), std::string::npos);
  EXPECT_FALSE(to_text(theorem_a_report(g)).empty());
}

TEST(Format, Invariants) {
  EXPECT_EQ(format_invariants({}), "1");
  EXPECT_EQ(format_invariants({3, 3}), "ℤ/3ℤ ⊕ ℤ/3ℤ");
}
