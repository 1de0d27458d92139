#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "endotriv/errors.hpp"
#include "endotriv/families.hpp"
#include "endotriv/grouptheory.hpp"
#include "oracles.hpp"

using namespace endotriv;
using Tag = TwoGroupType::Tag;

TEST(Models, SmallTwoGroupsMatchClosure) {
  for (unsigned m = 4; m <= 6; ++m) {
    for (const auto& g : {semidihedral_group(m), dihedral_group(m), quaternion_group(m)}) {
      EXPECT_EQ(g.order(), BigInt(1) << m);
      EXPECT_EQ(oracle::closure(g.generators(), g.degree()).size(), std::size_t{1} << m);
    }
  }
  EXPECT_THROW(semidihedral_group(3), std::invalid_argument);
}

TEST(Models, Classification) {
  for (unsigned m = 4; m <= 6; ++m) {
    auto sd = classify_2group(semidihedral_group(m));
    EXPECT_EQ(sd.tag, Tag::kSemidihedral) << m;
    EXPECT_EQ(sd.m, m);
    EXPECT_EQ(classify_2group(dihedral_group(m)).tag, Tag::kDihedral) << m;
    EXPECT_EQ(classify_2group(quaternion_group(m)).tag, Tag::kQuaternion) << m;
  }
  EXPECT_EQ(classify_2group(cyclic_group(8)).tag, Tag::kCyclic);
  EXPECT_EQ(classify_2group(direct_product(cyclic_group(2), cyclic_group(4))).tag, Tag::kAbelian);
}

TEST(Models, SemidihedralWitnesses) {
  auto t = classify_2group(semidihedral_group(5));
  ASSERT_TRUE(t.r && t.s);
  EXPECT_EQ(t.r->order(), 16u);
  EXPECT_EQ(t.s->order(), 2u);
  EXPECT_EQ(*t.s * *t.r * t.s->inverse(), t.r->pow(7));
}

TEST(Models, DirectProductOrder) {
  auto g = direct_product(cyclic_group(3), semidihedral_group(4));
  EXPECT_EQ(g.order(), 48);
  EXPECT_EQ(g.degree(), 11u);
}

TEST(Classical, OrderFormulas) {
  EXPECT_EQ(classical_order(Classical::kSL, 2, 3), 24);
  EXPECT_EQ(classical_order(Classical::kSLpm, 2, 3), 48);
  EXPECT_EQ(classical_order(Classical::kGL, 2, 3), 48);
  EXPECT_EQ(classical_order(Classical::kGU, 2, 5), 720);
  EXPECT_EQ(classical_order(Classical::kSU, 3, 5), 378000);
  EXPECT_EQ(classical_order(Classical::kSL, 3, 3), 5616);
  EXPECT_EQ(classical_order(Classical::kSUpm, 2, 3), 48);
}

struct ClassicalCase {
  Classical family;
  std::size_t n;
  unsigned q;
};

class ClassicalGroups : public ::testing::TestWithParam<ClassicalCase> {};

TEST_P(ClassicalGroups, FaithfulImageHasFormulaOrder) {
  auto [family, n, q] = GetParam();
  MatrixGroup m = classical_group(family, n, q);
  for (const auto& g : m.generators) EXPECT_TRUE(m.contains_matrix(g));
  PermImage img = to_perm(m, PermAction::kFaithful);
  EXPECT_EQ(img.kernel_order, 1u);
  EXPECT_EQ(img.group.order(), classical_order(family, n, q));
  PermImage proj = to_perm(m, PermAction::kProjective);
  EXPECT_EQ(proj.group.order() * proj.kernel_order, classical_order(family, n, q));
}

INSTANTIATE_TEST_SUITE_P(
    Families, ClassicalGroups,
    ::testing::Values(ClassicalCase{Classical::kSL, 2, 3}, ClassicalCase{Classical::kSLpm, 2, 3},
                      ClassicalCase{Classical::kGL, 2, 5}, ClassicalCase{Classical::kSL, 3, 3},
                      ClassicalCase{Classical::kSL, 2, 9}, ClassicalCase{Classical::kSU, 2, 3},
                      ClassicalCase{Classical::kGU, 2, 5}, ClassicalCase{Classical::kSUpm, 2, 5},
                      ClassicalCase{Classical::kSU, 3, 3}));

TEST(Classical, MapIsHomomorphism) {
  MatrixGroup m = classical_group(Classical::kGU, 2, 5);
  PermImage img = to_perm(m, PermAction::kFaithful);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, m.generators.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    FqMatrix a = m.generators[pick(rng)] * m.generators[pick(rng)];
    FqMatrix b = m.generators[pick(rng)];
    EXPECT_EQ(img.map(a * b), img.map(a) * img.map(b));
    EXPECT_EQ(img.map(a.inverse()), img.map(a).inverse());
  }
}

TEST(Classical, RejectsBadParameters) {
  EXPECT_THROW(classical_group(Classical::kSL, 2, 4), std::invalid_argument);
  EXPECT_THROW(classical_group(Classical::kSL, 1, 3), std::invalid_argument);
  EXPECT_THROW(to_perm(classical_group(Classical::kGL, 4, 11), PermAction::kVectors), ScaleError);
}

TEST(Classical, SU35Faithful) {
  auto t0 = std::chrono::steady_clock::now();
  PermImage img = sl3_eps(-1, 5);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_EQ(img.degree(), 1953u);
  EXPECT_EQ(img.group.order(), 378000);
  EXPECT_LT(secs, 60.0);
}

TEST(Classical, SL33) {
  EXPECT_EQ(sl3_eps(1, 3).group.order(), 5616);
  EXPECT_EQ(psl3_eps(1, 3).degree(), 13u);
}

TEST(ProjectiveLine, PglStar) {
  PermGroup g = pgl_star(3);
  EXPECT_EQ(g.degree(), 10u);
  EXPECT_EQ(g.order(), 720);
  EXPECT_EQ(classify_2group(sylow_2(g)).tag, Tag::kSemidihedral);
  EXPECT_EQ(classify_2group(sylow_2(pgl2_square(3))).tag, Tag::kDihedral);
  EXPECT_EQ(pgl2_square(3).order(), 720);
  EXPECT_FALSE(g.same_elements(pgl2_square(3)));
  EXPECT_EQ(psl2_square(3).order(), 360);
}

TEST(ProjectiveLine, PglStarFive) {
  PermGroup g = pgl_star(5);
  EXPECT_EQ(g.order(), 15600);
  EXPECT_EQ(classify_2group(sylow_2(g)).tag, Tag::kSemidihedral);
}

class LocalElements : public ::testing::TestWithParam<std::pair<int, unsigned>> {};

TEST_P(LocalElements, Relations) {
  auto [eps, q] = GetParam();
  ExplicitElements e = explicit_elements(eps, q);
  auto cj = [](const FqMatrix& x, const FqMatrix& g) { return g.inverse() * x * g; };
  const FqMatrix &u = e.u, &v = e.v, &t = e.t, &a = e.a, &x = e.x, &y = e.y;
  EXPECT_EQ(cj(x, a), x * y.pow(-3));
  EXPECT_EQ(cj(y, a), x * y.pow(-2));
  EXPECT_EQ(cj(x, t), x.pow(-2) * y.pow(3));
  EXPECT_EQ(cj(y, t), x.inverse() * y.pow(2));
  EXPECT_EQ(cj(a, t), a * a * u * v);
  EXPECT_EQ(cj(u, a), v);
  EXPECT_EQ(cj(v, a), u * v);
  EXPECT_EQ(cj(u * v, a), u);
  EXPECT_EQ(t * t, u);
  EXPECT_TRUE(x.pow(static_cast<long long>(e.zeta_order)).is_identity());
  EXPECT_TRUE(x * y == y * x);

  MatrixGroup g;
  g.family = eps == 1 ? Classical::kSL : Classical::kSU;
  g.n = 3;
  g.q = q;
  g.field = e.field;
  if (eps == -1) g.form = FqMatrix::identity(e.field, 3);
  for (const auto* m : {&u, &v, &t, &a, &x, &y}) EXPECT_TRUE(g.contains_matrix(*m));
}

INSTANTIATE_TEST_SUITE_P(Cases, LocalElements,
                         ::testing::Values(std::pair{1, 3u}, std::pair{1, 7u}, std::pair{-1, 5u},
                                           std::pair{1, 11u}, std::pair{-1, 13u}));

TEST(LocalElementsTest, RejectsWrongResidue) {
  EXPECT_THROW(explicit_elements(1, 5), std::invalid_argument);
  EXPECT_THROW(explicit_elements(-1, 3 + 4), std::invalid_argument);
}

TEST(Fixtures, Orders) {
  EXPECT_EQ(fixture_m11().order(), 7920);
  EXPECT_EQ(fixture_3m10().order(), 2160);
  EXPECT_EQ(classify_2group(sylow_2(fixture_m11())).tag, Tag::kSemidihedral);
  EXPECT_EQ(classify_2group(sylow_2(fixture_3m10())).tag, Tag::kSemidihedral);
}
