#include <gtest/gtest.h>

#include "endotriv/families.hpp"
#include "endotriv/grouptheory.hpp"
#include "endotriv/io.hpp"

using namespace endotriv;

TEST(GroupFile, RoundTrip) {
  PermGroup g = fixture_3m10();
  std::string text = write_grp(g);
  EXPECT_EQ(text.substr(0, 10), "degree 36\n");
  PermGroup h = read_grp(text);
  EXPECT_EQ(h.generators(), g.generators());
  EXPECT_EQ(write_grp(h), text);
}

TEST(GroupFile, Rejects) {
  EXPECT_THROW(read_grp("degree 3\n1 1 2\n"), std::invalid_argument);
  EXPECT_THROW(read_grp("degree 3\n1 2\n"), std::invalid_argument);
  EXPECT_THROW(read_grp("degree 3\n1 2 4\n"), std::invalid_argument);
  EXPECT_THROW(read_grp("points 3\n"), std::invalid_argument);
  EXPECT_THROW(read_grp("degree 3\n1 x 2\n"), std::invalid_argument);
  EXPECT_EQ(read_grp("degree 3\n2 3 1\n\n").order(), 3);
}

TEST(ModuleFile, RoundTrip) {
  PermGroup g = fixture_3m10();
  PermGroup n = normalizer(g, sylow_2(g));
  GModule m = induce(one_dim_modules(n, 8)[1], g);
  std::string text = write_mod(m);
  EXPECT_EQ(text.substr(0, text.find('\n')), "dim 45 field 2^8 gens 3 degree 36");
  GModule back = read_mod(text);
  EXPECT_EQ(back.dim(), 45u);
  EXPECT_EQ(back.generator_images(), m.generator_images());
  EXPECT_EQ(write_mod(back), text);
}

TEST(ModuleFile, Rejects) {
  EXPECT_THROW(read_mod("dim 1 field 3^1 gens 0 degree 1\n"), std::invalid_argument);
  EXPECT_THROW(read_mod("dim 1 field 2^1 gens 1 degree 2\n2 1\n"), std::invalid_argument);
  EXPECT_THROW(read_mod("dim 1 field 2^1 gens 1 degree 2\n2 1\n2\n"), std::invalid_argument);
  EXPECT_THROW(read_mod("dim 1 field 2^1 gens 1 degree 2\n2 1\n0\n"), std::invalid_argument);
  EXPECT_EQ(read_mod("dim 2 field 2^1 gens 1 degree 2\n2 1\n0 1\n1 0\n").dim(), 2u);
}
