#pragma once

// Data-parallel kernels. Each kernel has a serial reference implementation
// and an OpenMP implementation with the same contract; tests assert that
// they agree and tools/bench_kernels.cpp compares their speed.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "endotriv/gf.hpp"
#include "endotriv/permgroup.hpp"

namespace endotriv::kernels {

/// A group element addressed by its chain digits and evaluated pointwise on
/// demand, so that predicates can reject most elements after a few lookups.
class LazyElement {
 public:
  LazyElement(std::span<const ChainLevel> levels, std::span<const std::uint32_t> digits)
      : levels_(levels), digits_(digits) {}

  Point apply(Point x) const {
    for (std::size_t l = levels_.size(); l-- > 0;) x = levels_[l].transversal[digits_[l]](x);
    return x;
  }
  Point apply_inverse(Point x) const {
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      x = levels_[l].transversal_inverse[digits_[l]](x);
    }
    return x;
  }
  Perm materialize(std::size_t degree) const;

 private:
  std::span<const ChainLevel> levels_;
  std::span<const std::uint32_t> digits_;
};

using ElementPredicate = std::function<bool(const LazyElement&)>;

namespace serial {
/// Ascending element indices (see PermGroup::element_at) satisfying `pred`.
std::vector<std::uint64_t> scan(const PermGroup& group, const ElementPredicate& pred,
                                std::uint64_t cap = kDefaultElementCap);
/// c = a * b, shapes (m x k) * (k x n).
void matmul(const Field& f, std::span<const Elem> a, std::span<const Elem> b,
            std::span<Elem> c, std::size_t m, std::size_t k, std::size_t n);
/// Forward elimination to row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelonize(const Field& f, std::span<Elem> a, std::size_t rows,
                                    std::size_t cols);
}  // namespace serial

namespace omp {
std::vector<std::uint64_t> scan(const PermGroup& group, const ElementPredicate& pred,
                                std::uint64_t cap = kDefaultElementCap);
void matmul(const Field& f, std::span<const Elem> a, std::span<const Elem> b,
            std::span<Elem> c, std::size_t m, std::size_t k, std::size_t n);
std::vector<std::size_t> echelonize(const Field& f, std::span<Elem> a, std::size_t rows,
                                    std::size_t cols);
}  // namespace omp

}  // namespace endotriv::kernels
