#include <gtest/gtest.h>

#include <random>

#include "endotriv/poly.hpp"
#include "oracles.hpp"

using namespace endotriv;

namespace {

FqMatrix random_matrix(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  FqMatrix m(f, n, n);
  for (auto& x : m.data()) x = static_cast<Elem>(rng() % f->size());
  return m;
}

Poly product(const std::vector<PolyFactor>& fs, const FieldPtr& f) {
  Poly p = Poly::constant(f, 1);
  for (const auto& pf : fs)
    for (unsigned i = 0; i < pf.multiplicity; ++i) p = p * pf.factor;
  return p;
}

// No monic divisor of degree 1..deg/2, by exhaustive search.
bool brute_irreducible(const Poly& f) {
  const auto& fld = f.field();
  int half = f.degree() / 2;
  for (int d = 1; d <= half; ++d) {
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) count *= fld->size();
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
      std::size_t r = code;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<Elem>(r % fld->size());
        r /= fld->size();
      }
      c[static_cast<std::size_t>(d)] = 1;
      if ((f % Poly(fld, c)).is_zero()) return false;
    }
  }
  return true;
}

Poly random_poly(const FieldPtr& f, int deg, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = static_cast<Elem>(rng() % f->size());
  c.back() = 1;
  return Poly(f, c);
}

}  // namespace

TEST(Poly, Basics) {
  auto f = Field::get(2, 1);
  Poly p(f, {0, 1, 1});  // x^2 + x
  auto fs = factor(p);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].factor, Poly(f, {0, 1}));
  EXPECT_EQ(fs[1].factor, Poly(f, {1, 1}));
  EXPECT_THROW(p / Poly(f, {}), std::domain_error);
}

TEST(MinPoly, SimpleCases) {
  auto f = Field::of_order(256);
  EXPECT_EQ(min_poly(FqMatrix::identity(f, 4)), Poly(f, {1, 1}));
  FqMatrix j(f, 3, 3);
  j(0, 1) = 1;
  j(1, 2) = 1;
  EXPECT_EQ(min_poly(j), Poly::monomial(f, 3));
}

TEST(CharPoly, MatchesDeterminantAtEveryPoint) {
  std::mt19937_64 rng(10);
  for (unsigned q : {8u, 9u, 16u, 25u}) {
    auto f = Field::of_order(q);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int t = 0; t < 3; ++t) {
        FqMatrix a = random_matrix(f, n, rng);
        Poly cp = char_poly(a);
        ASSERT_EQ(cp.degree(), static_cast<int>(n));
        EXPECT_EQ(cp.lead(), 1);
        for (unsigned x = 0; x < q; ++x) {
          FqMatrix m = FqMatrix::scalar(f, n, static_cast<Elem>(x)) - a;
          EXPECT_EQ(cp(static_cast<Elem>(x)), oracle::leibniz_det(m));
        }
      }
    }
  }
}

TEST(MinPoly, AnnihilatesAndDividesCharPoly) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto f = Field::of_order(t % 2 ? 4u : 3u);
    std::size_t n = 1 + t % 6;
    FqMatrix a = random_matrix(f, n, rng);
    // force some structure into half the cases
    if (t % 3 == 0 && n > 1) a = a * a * a;
    Poly mp = min_poly(a);
    EXPECT_TRUE(evaluate(mp, a).is_zero());
    EXPECT_TRUE((char_poly(a) % mp).is_zero());
    for (const auto& pf : factor(mp)) {
      Poly smaller = mp / pf.factor;
      EXPECT_FALSE(evaluate(smaller, a).is_zero());
    }
  }
}

TEST(Factor, ReMultipliesAndFactorsAreIrreducible) {
  std::mt19937_64 rng(12);
  for (unsigned q : {2u, 3u, 4u, 5u, 9u, 256u}) {
    auto f = Field::of_order(q);
    for (int t = 0; t < 15; ++t) {
      Poly p = random_poly(f, 1 + static_cast<int>(rng() % 9), rng);
      if (t % 4 == 0) p = p * p * random_poly(f, 2, rng);
      auto fs = factor(p);
      EXPECT_EQ(product(fs, f), p.monic());
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) EXPECT_TRUE(fs[i - 1].factor < fs[i].factor);
        if (fs[i].factor.degree() <= 4 && q <= 9) EXPECT_TRUE(brute_irreducible(fs[i].factor));
        // distinct-degree consistency: x^(q^d) = x mod an irreducible of degree d
        Poly x = Poly::monomial(f, 1);
        BigInt qd = boost::multiprecision::pow(BigInt(q), fs[i].factor.degree());
        EXPECT_EQ(powmod(x, qd, fs[i].factor), x % fs[i].factor);
      }
    }
  }
}

TEST(Factor, InseparablePowers) {
  auto f = Field::of_order(4);
  Poly x1(f, {1, 1});
  Poly p = x1 * x1 * x1 * x1 * x1 * x1;  // (x+1)^6
  auto fs = factor(p);
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0].multiplicity, 6u);
}
