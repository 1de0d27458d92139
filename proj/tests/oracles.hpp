#pragma once

// Brute-force reference computations used only by the tests.

#include <set>
#include <vector>

#include "endotriv/gf.hpp"
#include "endotriv/perm.hpp"

namespace oracle {

using endotriv::Perm;

/// Closure of the generators by breadth-first multiplication.
inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Perm y = g * x;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Determinant by Leibniz expansion over all permutations of the columns.
inline endotriv::Elem leibniz_det(const endotriv::FqMatrix& a) {
  const auto& f = *a.field();
  std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  endotriv::Elem total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    endotriv::Elem term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, a(i, perm[i]));
    total = (inversions % 2) ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace oracle
