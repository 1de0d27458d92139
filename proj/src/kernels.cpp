#include "endotriv/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace endotriv::kernels {

Perm LazyElement::materialize(std::size_t degree) const {
  std::vector<Point> img(degree);
  for (std::size_t x = 0; x < degree; ++x) img[x] = apply(static_cast<Point>(x));
  return Perm(std::move(img));
}

namespace {

std::vector<std::uint32_t> radices(const PermGroup& g) {
  std::vector<std::uint32_t> r;
  for (const auto& lv : g.levels()) r.push_back(static_cast<std::uint32_t>(lv.orbit.size()));
  return r;
}

// Scans the subtree with digits[0..fixed) held constant, appending hits.
void scan_subtree(std::span<const ChainLevel> levels, const std::vector<std::uint32_t>& radix,
                  std::vector<std::uint32_t>& digits, std::size_t fixed,
                  std::uint64_t base_index, const ElementPredicate& pred,
                  std::vector<std::uint64_t>& hits) {
  const std::size_t depth = levels.size();
  std::uint64_t span_size = 1;
  for (std::size_t l = fixed; l < depth; ++l) span_size *= radix[l];
  std::fill(digits.begin() + static_cast<std::ptrdiff_t>(fixed), digits.end(), 0u);
  LazyElement el(levels, digits);
  for (std::uint64_t k = 0; k < span_size; ++k) {
    if (pred(el)) hits.push_back(base_index + k);
    for (std::size_t l = depth; l-- > fixed;) {
      if (++digits[l] < radix[l]) break;
      digits[l] = 0;
    }
  }
}

inline void row_axpy(const Field& f, Elem* dst, const Elem* src, Elem c, std::size_t from,
                     std::size_t n) {
  // dst -= c * src
  const Elem* mrow = f.mul_row(c);
  if (f.characteristic() == 2) {
    for (std::size_t j = from; j < n; ++j) dst[j] ^= mrow[src[j]];
  } else {
    for (std::size_t j = from; j < n; ++j) dst[j] = f.sub(dst[j], mrow[src[j]]);
  }
}

inline void row_scale(const Field& f, Elem* row, Elem c, std::size_t from, std::size_t n) {
  const Elem* mrow = f.mul_row(c);
  for (std::size_t j = from; j < n; ++j) row[j] = mrow[row[j]];
}

template <bool Parallel>
std::vector<std::size_t> echelonize_impl(const Field& f, std::span<Elem> a, std::size_t rows,
                                         std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i * cols + c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    Elem* prow = &a[r * cols];
    row_scale(f, prow, f.inv(prow[c]), c, cols);
    const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(r + 1);
    const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(rows);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = lo; i < hi; ++i) {
        Elem* row = &a[static_cast<std::size_t>(i) * cols];
        if (row[c] != 0) row_axpy(f, row, prow, row[c], c, cols);
      }
    } else {
      for (std::ptrdiff_t i = lo; i < hi; ++i) {
        Elem* row = &a[static_cast<std::size_t>(i) * cols];
        if (row[c] != 0) row_axpy(f, row, prow, row[c], c, cols);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void matmul_rows(const Field& f, std::span<const Elem> a, std::span<const Elem> b,
                 std::span<Elem> c, std::size_t i, std::size_t k, std::size_t n) {
  Elem* crow = &c[i * n];
  std::fill(crow, crow + n, Elem{0});
  const bool char2 = f.characteristic() == 2;
  for (std::size_t t = 0; t < k; ++t) {
    Elem x = a[i * k + t];
    if (x == 0) continue;
    const Elem* mrow = f.mul_row(x);
    const Elem* brow = &b[t * n];
    if (char2) {
      for (std::size_t j = 0; j < n; ++j) crow[j] ^= mrow[brow[j]];
    } else {
      for (std::size_t j = 0; j < n; ++j) crow[j] = f.add(crow[j], mrow[brow[j]]);
    }
  }
}

void check_scan_cap(const PermGroup& group, std::uint64_t cap) {
  if (group.order() > cap) throw ScaleError("group order exceeds element scan cap");
}

}  // namespace

namespace serial {

std::vector<std::uint64_t> scan(const PermGroup& group, const ElementPredicate& pred,
                                std::uint64_t cap) {
  check_scan_cap(group, cap);
  auto radix = radices(group);
  std::vector<std::uint32_t> digits(radix.size(), 0);
  std::vector<std::uint64_t> hits;
  scan_subtree(group.levels(), radix, digits, 0, 0, pred, hits);
  return hits;
}

void matmul(const Field& f, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> c,
            std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) matmul_rows(f, a, b, c, i, k, n);
}

std::vector<std::size_t> echelonize(const Field& f, std::span<Elem> a, std::size_t rows,
                                    std::size_t cols) {
  return echelonize_impl<false>(f, a, rows, cols);
}

}  // namespace serial

namespace omp {

std::vector<std::uint64_t> scan(const PermGroup& group, const ElementPredicate& pred,
                                std::uint64_t cap) {
  check_scan_cap(group, cap);
  auto radix = radices(group);
  if (radix.empty()) return serial::scan(group, pred, cap);
  std::uint64_t below = 1;
  for (std::size_t l = 1; l < radix.size(); ++l) below *= radix[l];
  const std::ptrdiff_t top = radix[0];
  std::vector<std::vector<std::uint64_t>> per_top(static_cast<std::size_t>(top));
  auto levels = group.levels();
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i0 = 0; i0 < top; ++i0) {
    std::vector<std::uint32_t> digits(radix.size(), 0);
    digits[0] = static_cast<std::uint32_t>(i0);
    scan_subtree(levels, radix, digits, 1, static_cast<std::uint64_t>(i0) * below, pred,
                 per_top[static_cast<std::size_t>(i0)]);
  }
  std::vector<std::uint64_t> hits;
  for (auto& v : per_top) hits.insert(hits.end(), v.begin(), v.end());
  return hits;
}

void matmul(const Field& f, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> c,
            std::size_t m, std::size_t k, std::size_t n) {
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    matmul_rows(f, a, b, c, static_cast<std::size_t>(i), k, n);
  }
}

std::vector<std::size_t> echelonize(const Field& f, std::span<Elem> a, std::size_t rows,
                                    std::size_t cols) {
  return echelonize_impl<true>(f, a, rows, cols);
}

}  // namespace omp

}  // namespace endotriv::kernels
