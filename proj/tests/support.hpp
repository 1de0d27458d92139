#pragma once

// Module builders and randomized property suites shared by the unit tests
// and the acceptance binary.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "endotriv/families.hpp"
#include "endotriv/grouptheory.hpp"
#include "endotriv/modrep.hpp"

namespace support {

using namespace endotriv;

inline FieldPtr gf(unsigned q) { return Field::of_order(q); }

inline GModule permutation_module(const PermGroup& g, const FieldPtr& f) {
  std::vector<FqMatrix> gens;
  for (const auto& p : g.generators()) {
    FqMatrix m(f, g.degree(), g.degree());
    for (Point x = 0; x < g.degree(); ++x) m(p(x), x) = 1;
    gens.push_back(m);
  }
  return GModule(g, f, gens);
}

inline GModule regular_module(const PermGroup& g, const FieldPtr& f) {
  return induce(trivial_module(PermGroup::trivial(g.degree()), f), g);
}

inline FqMatrix random_invertible(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, f->size() - 1);
  while (true) {
    FqMatrix m(f, n, n);
    for (auto& x : m.data()) x = static_cast<Elem>(d(rng));
    if (m.determinant() != 0) return m;
  }
}

inline bool block_diagonal_under(const GModule& m, const Decomposition& dec) {
  FqMatrix ti = dec.certificate.inverse();
  for (std::size_t g = 0; g < m.generator_images().size(); ++g) {
    std::vector<FqMatrix> blocks;
    for (const auto& s : dec.summands) blocks.push_back(s.generator_images()[g]);
    if (!(ti * m.generator_images()[g] * dec.certificate == block_diagonal(blocks))) return false;
  }
  return true;
}

inline std::vector<std::size_t> dims_of(const Decomposition& d) {
  std::vector<std::size_t> out;
  for (const auto& s : d.summands) out.push_back(s.dim());
  return out;
}

inline PermGroup a4() {
  return PermGroup({Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{0, 1}, {2, 3}})}, 4);
}

struct PropertyResult {
  bool ok = true;
  std::size_t checks = 0;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

/// Random direct sums of indecomposable kA4-modules over GF(4) in a random
/// basis, decomposed under several seeds: same dimensions, pairwise
/// isomorphic summands, certificates that block-diagonalize.
inline PropertyResult krull_schmidt_stability(int trials = 20, std::uint64_t seeds = 10) {
  PropertyResult r;
  PermGroup g = a4();
  FieldPtr f = gf(4);
  PermGroup c3 = subgroup_generated(4, {g.generators()[0]});
  PermGroup c2 = subgroup_generated(4, {g.generators()[1]});
  std::vector<GModule> pool = one_dim_modules(g, 2);
  for (const auto& lam : one_dim_modules(c3, 2)) pool.push_back(induce(lam, g));
  pool.push_back(induce(trivial_module(c2, f), g));
  pool.erase(std::remove_if(pool.begin(), pool.end(), [](const GModule& m) { return !is_indecomposable(m); }),
             pool.end());
  r.expect(pool.size() >= 5, "fewer than 5 indecomposables in the pool");
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), count(2, 4);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<GModule> parts;
    for (std::size_t c = count(rng); c > 0; --c) parts.push_back(pool[pick(rng)]);
    GModule sum = direct_sum(parts);
    GModule m = change_basis(sum, random_invertible(f, sum.dim(), rng));
    const std::string tag = "trial " + std::to_string(trial);
    Decomposition ref = decompose(m, 1);
    r.expect(block_diagonal_under(m, ref), tag + ": certificate not block diagonal");
    r.expect(ref.summands.size() == parts.size(), tag + ": wrong number of summands");
    for (std::uint64_t seed = 2; seed <= seeds; ++seed) {
      Decomposition d = decompose(m, seed);
      const std::string at = tag + " seed " + std::to_string(seed);
      r.expect(dims_of(d) == dims_of(ref), at + ": dimensions differ");
      r.expect(block_diagonal_under(m, d), at + ": certificate not block diagonal");
      if (dims_of(d) != dims_of(ref)) continue;
      std::vector<bool> used(ref.summands.size(), false);
      for (const auto& s : d.summands) {
        bool matched = false;
        for (std::size_t j = 0; j < ref.summands.size() && !matched; ++j) {
          if (!used[j] && is_isomorphic(s, ref.summands[j])) matched = used[j] = true;
        }
        r.expect(matched, at + ": unmatched summand");
      }
    }
  }
  return r;
}

/// Proper subgroups of g of index at most 200: Sylow subgroups and their
/// normalizers, centralizers and random cyclic subgroups.
inline std::vector<PermGroup> small_index_subgroups(const PermGroup& g, std::mt19937_64& rng) {
  std::vector<PermGroup> cands;
  for (std::uint64_t p : {2, 3}) {
    if (g.order() % p != 0) continue;
    PermGroup s = sylow(g, p);
    cands.push_back(s);
    cands.push_back(normalizer(g, s));
  }
  for (int i = 0; i < 6; ++i) {
    PermGroup c = subgroup_generated(g.degree(), {g.random_element(rng)});
    cands.push_back(c);
    cands.push_back(centralizer(g, c));
  }
  std::vector<PermGroup> out;
  for (auto& h : cands) {
    BigInt index = g.order() / h.order();
    if (index > 1 && index <= 200) out.push_back(std::move(h));
  }
  return out;
}

/// dim Hom_G(Ind V, M) = dim Hom_H(V, Res M) and the mirrored identity on
/// proper subgroups H of small groups.
inline PropertyResult frobenius_reciprocity(int cases = 20) {
  PropertyResult r;
  std::mt19937_64 rng(11);
  std::vector<PermGroup> groups{a4(), semidihedral_group(4), fixture_m11(), pgl_star(3)};
  std::vector<std::vector<PermGroup>> subgroups;
  for (const auto& g : groups) {
    subgroups.push_back(small_index_subgroups(g, rng));
    r.expect(!subgroups.back().empty(), "no proper subgroup of small index in a group of order " + g.order().str());
  }
  for (int checked = 0; checked < cases; ++checked) {
    const PermGroup& g = groups[checked % groups.size()];
    const auto& pool = subgroups[checked % groups.size()];
    if (pool.empty()) continue;
    const PermGroup& h = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    FieldPtr f = gf(4);
    std::vector<GModule> vs{trivial_module(h, f)};
    try {
      vs.push_back(one_dim_modules(h, 2).back());
    } catch (const std::invalid_argument&) {
      vs.push_back(vs.front());  // characters of H not realized over GF(4)
    }
    const GModule& v = vs[checked % 2];
    GModule m = g.degree() > 12 ? trivial_module(g, f) : permutation_module(g, f);
    GModule ind = induce(v, g);
    const std::string tag = "case " + std::to_string(checked);
    r.expect(hom_space(ind, m).size() == hom_space(v, restrict(m, h)).size(), tag + ": Hom(Ind V, M)");
    r.expect(hom_space(m, ind).size() == hom_space(restrict(m, h), v).size(), tag + ": Hom(M, Ind V)");
  }
  return r;
}

/// norm_rank recovers the number of planted free summands of kSD16-modules
/// given in a random basis.
inline PropertyResult planted_free_rank(int trials = 50) {
  PropertyResult r;
  PermGroup p = semidihedral_group(4);
  FieldPtr f = gf(4);
  GModule reg = regular_module(p, f);
  PermGroup c2 = subgroup_generated(p.degree(), {p.generators()[1]});
  GModule nonfree = induce(trivial_module(c2, f), p);  // 8-dim, no free summand
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < trials; ++trial) {
    std::size_t free_rank = trial % 4;
    std::vector<GModule> parts{trivial_module(p, f)};
    if (trial % 3 == 0) parts.push_back(nonfree);
    for (std::size_t i = 0; i < free_rank; ++i) parts.push_back(reg);
    std::shuffle(parts.begin(), parts.end(), rng);
    GModule sum = direct_sum(parts);
    GModule m = change_basis(sum, random_invertible(f, sum.dim(), rng));
    r.expect(norm_rank(m) == free_rank, "trial " + std::to_string(trial));
  }
  return r;
}

}  // namespace support
