#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endotriv/gf.hpp"
#include "endotriv/permgroup.hpp"

namespace endotriv {

/// Degree cap for permutation models of matrix groups.
inline constexpr std::size_t kDegreeCap = 10000;

/// ⟨x -> x+1, x -> (2^(m-2)-1) x⟩ on Z/2^(m-1). std::invalid_argument if m < 4.
PermGroup semidihedral_group(unsigned m);
/// ⟨x -> x+1, x -> -x⟩ on Z/2^(m-1), order 2^m, m >= 2.
PermGroup dihedral_group(unsigned m);
/// Generalized quaternion group of order 2^m, m >= 3, in its regular action.
PermGroup quaternion_group(unsigned m);
/// Cyclic group of order n acting regularly.
PermGroup cyclic_group(std::size_t n);
/// Direct product acting on the disjoint union of the point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

enum class Classical { kGL, kSL, kGU, kSU, kSLpm, kSUpm };

std::string to_string(Classical family);

/// A matrix group over GF(q) (linear types) or GF(q^2) (unitary types).
struct MatrixGroup {
  Classical family = Classical::kSL;
  std::size_t n = 0;
  unsigned q = 0;
  FieldPtr field;
  std::vector<FqMatrix> generators;
  std::optional<FqMatrix> form;  // Hermitian form of unitary types

  /// Whether a matrix satisfies the defining determinant and form conditions.
  bool contains_matrix(const FqMatrix& g) const;
  /// Scalars lambda with lambda*I in the group.
  std::vector<Elem> scalar_subgroup() const;
};

/// Group order from the standard formulas.
BigInt classical_order(Classical family, std::size_t n, unsigned q);

/// Standard generators. std::invalid_argument for even or unsupported q or a
/// bad dimension.
MatrixGroup classical_group(Classical family, std::size_t n, unsigned q);

/// How matrices act when converted to permutations.
enum class PermAction {
  kProjective,  // on 1-spaces; the kernel is the scalar subgroup
  kVectors,     // on nonzero vectors; faithful
  kFaithful,    // on vectors modulo the largest scalar subgroup meeting the centre trivially
};

/// Permutation model of a matrix group together with the point labels.
class PermImage {
 public:
  PermImage(FieldPtr field, std::size_t n, std::uint64_t scalar_quotient);

  /// Permutation induced by an invertible matrix.
  Perm map(const FqMatrix& g) const;
  std::size_t degree() const { return points_.size(); }
  /// Representative column vector of point i.
  const std::vector<Elem>& point(std::size_t i) const { return points_[i]; }
  std::uint64_t scalar_quotient() const { return d_; }

  PermGroup group;
  /// Order of the scalars of the matrix group acting trivially.
  std::uint64_t kernel_order = 1;

 private:
  std::size_t locate(std::vector<Elem> v) const;
  FieldPtr field_;
  std::size_t n_;
  std::uint64_t d_;
  std::vector<std::vector<Elem>> points_;
  std::vector<std::int32_t> index_;  // by vector code
};

/// MatrixGroup to PermGroup. ScaleError if the degree exceeds kDegreeCap.
PermImage to_perm(const MatrixGroup& m, PermAction action = PermAction::kProjective);

/// PSL_2(q^2) extended by z -> w z^q on the projective line over GF(q^2),
/// validated to contain PSL_2(q^2) with index 2 and to have a semidihedral
/// Sylow 2-subgroup.
PermGroup pgl_star(unsigned q);
/// PGL_2(q^2) on the same points (dihedral Sylow 2-subgroup).
PermGroup pgl2_square(unsigned q);
PermGroup psl2_square(unsigned q);

/// Explicit elements of SL_3(q) (eps = 1) or SU_3(q) (eps = -1).
struct ExplicitElements {
  int eps = 1;
  unsigned q = 0;
  FieldPtr field;
  Elem zeta = 1;
  std::uint64_t zeta_order = 1;
  FqMatrix u, v, t, a, x, y;
};

/// std::invalid_argument unless q = -eps mod 4.
ExplicitElements explicit_elements(int eps, unsigned q);
/// SL_3(q) or SU_3(q) as a faithful permutation group.
PermImage sl3_eps(int eps, unsigned q);
/// PSL_3^eps(q) via the projective action.
PermGroup psl3_eps(int eps, unsigned q);

PermGroup fixture_m11();
/// Triple cover of M10 on 36 points.
PermGroup fixture_3m10();

}  // namespace endotriv
