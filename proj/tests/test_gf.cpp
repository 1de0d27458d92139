#include <gtest/gtest.h>

#include <random>

#include "endotriv/gf.hpp"
#include "endotriv/kernels.hpp"
#include "oracles.hpp"

using namespace endotriv;

namespace {

FqMatrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  FqMatrix m(f, r, c);
  for (auto& x : m.data()) x = static_cast<Elem>(rng() % f->size());
  return m;
}

}  // namespace

class FieldAxioms : public ::testing::TestWithParam<unsigned> {};

TEST_P(FieldAxioms, Hold) {
  auto f = Field::of_order(GetParam());
  unsigned q = f->size();
  EXPECT_EQ(f->multiplicative_order(f->primitive()), q - 1);
  for (unsigned a = 0; a < q; ++a) {
    EXPECT_EQ(f->add(a, f->neg(a)), 0);
    if (a) {
      EXPECT_EQ(f->mul(a, f->inv(a)), 1);
      EXPECT_EQ(f->exp(f->log(a)), a);
    }
    for (unsigned b = 0; b < q; b += 3) {
      EXPECT_EQ(f->mul(a, b), f->mul(b, a));
      for (unsigned c = 0; c < q; c += 7) {
        EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
    // Frobenius is additive and x^q = x.
    EXPECT_EQ(f->pow(a, q), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldAxioms,
                         ::testing::Values(2u, 4u, 8u, 16u, 32u, 64u, 128u, 256u, 3u, 9u, 27u,
                                           81u, 243u, 5u, 25u, 125u, 7u, 49u, 11u, 121u, 13u,
                                           169u));

TEST(Field, Unsupported) {
  EXPECT_THROW(Field::of_order(6), std::invalid_argument);
  EXPECT_THROW(Field::get(17, 1), std::invalid_argument);
  EXPECT_THROW(Field::get(2, 1)->inv(0), std::domain_error);
}

TEST(FqMatrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(1);
  for (unsigned q : {2u, 4u, 9u, 25u}) {
    auto f = Field::of_order(q);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (int t = 0; t < 5; ++t) {
        FqMatrix a = random_matrix(f, n, n, rng);
        EXPECT_EQ(a.determinant(), oracle::leibniz_det(a));
      }
    }
  }
}

TEST(FqMatrix, InverseAndSolve) {
  std::mt19937_64 rng(2);
  auto f = Field::of_order(4);
  int found = 0;
  while (found < 10) {
    FqMatrix a = random_matrix(f, 6, 6, rng);
    if (a.determinant() == 0) {
      EXPECT_THROW(a.inverse(), std::domain_error);
      continue;
    }
    ++found;
    EXPECT_TRUE((a * a.inverse()).is_identity());
    FqMatrix b = random_matrix(f, 6, 2, rng);
    EXPECT_EQ(a * solve(a, b), b);
  }
}

TEST(FqMatrix, NullspaceRankNullity) {
  std::mt19937_64 rng(3);
  auto f = Field::of_order(3);
  for (int t = 0; t < 20; ++t) {
    FqMatrix a = random_matrix(f, 4, 7, rng);
    FqMatrix ns = nullspace(a);
    EXPECT_EQ(rank(a) + ns.rows(), 7u);
    EXPECT_TRUE((a * ns.transpose()).is_zero());
    FqMatrix ls = left_nullspace(a);
    if (ls.rows()) EXPECT_TRUE((ls * a).is_zero());
  }
}

TEST(FqMatrix, InconsistentSystem) {
  auto f = Field::of_order(2);
  FqMatrix a = FqMatrix::from_rows(f, {{1, 1}, {1, 1}});
  FqMatrix b = FqMatrix::from_rows(f, {{0}, {1}});
  EXPECT_THROW(solve(a, b), InconsistentSystemError);
  EXPECT_THROW(solve(a, FqMatrix(f, 3, 1)), DimensionError);
  auto la = rank_nullspace_solve(a, FqMatrix::from_rows(f, {{1}, {1}}));
  EXPECT_EQ(la.rank, 1u);
  EXPECT_EQ(la.nullspace.rows(), 1u);
  ASSERT_TRUE(la.particular.has_value());
}

TEST(FqMatrix, KroneckerMixedProduct) {
  std::mt19937_64 rng(4);
  auto f = Field::of_order(8);
  FqMatrix a = random_matrix(f, 2, 3, rng), b = random_matrix(f, 3, 2, rng);
  FqMatrix c = random_matrix(f, 2, 2, rng), d = random_matrix(f, 2, 2, rng);
  EXPECT_EQ(kronecker(a, c) * kronecker(b, d), kronecker(a * b, c * d));
}

TEST(FqMatrix, HexRoundTrip) {
  std::mt19937_64 rng(5);
  auto f = Field::of_order(256);
  FqMatrix a = random_matrix(f, 4, 5, rng);
  std::string s = to_hex_block(a);
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto nl = s.find('\n', pos);
    lines.push_back(s.substr(pos, nl - pos));
    pos = nl + 1;
  }
  EXPECT_EQ(from_hex_block(f, 4, 5, lines), a);
}

TEST(Kernels, SerialAndParallelLinearAlgebraAgree) {
  std::mt19937_64 rng(6);
  for (unsigned q : {2u, 9u}) {
    auto f = Field::of_order(q);
    FqMatrix a = random_matrix(f, 40, 30, rng), b = random_matrix(f, 30, 50, rng);
    FqMatrix c1(f, 40, 50), c2(f, 40, 50);
    kernels::serial::matmul(*f, a.data(), b.data(), c1.data(), 40, 30, 50);
    kernels::omp::matmul(*f, a.data(), b.data(), c2.data(), 40, 30, 50);
    EXPECT_EQ(c1, c2);
    FqMatrix e1 = c1, e2 = c1;
    auto p1 = kernels::serial::echelonize(*f, e1.data(), 40, 50);
    auto p2 = kernels::omp::echelonize(*f, e2.data(), 40, 50);
    EXPECT_EQ(p1, p2);
    EXPECT_EQ(e1, e2);
  }
}
