#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace endotriv {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image array.
///
/// Products compose as functions: (a * b)(x) == a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Perm(std::vector<Point> images);

  /// Cycles are 0-based point lists; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(long long exponent) const;
  std::uint64_t order() const;
  /// Returns degree() when the permutation is the identity.
  Point smallest_moved_point() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

  std::size_t hash() const;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

Perm conjugate(const Perm& g, const Perm& h);  // g * h * g^-1
Perm commutator(const Perm& a, const Perm& b);  // a^-1 b^-1 a b

/// Cycle notation with 1-based points, e.g. "(1,2,3)(4,5)"; "()" for identity.
std::string to_cycle_string(const Perm& p);

}  // namespace endotriv
