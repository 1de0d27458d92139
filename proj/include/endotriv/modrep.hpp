#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "endotriv/gf.hpp"
#include "endotriv/permgroup.hpp"

namespace endotriv {

inline constexpr std::size_t kInductionCap = 2000;
inline constexpr std::size_t kGeneralEndCap = 200;
inline constexpr std::size_t kRadicalCap = 100;
inline constexpr std::uint64_t kModuleSeed = 0x5eed;

/// Matrix monoid operations for Evaluator.
struct MatrixOps {
  FieldPtr field;
  std::size_t n = 0;
  FqMatrix identity() const { return FqMatrix::identity(field, n); }
  FqMatrix mul(const FqMatrix& a, const FqMatrix& b) const { return a * b; }
  FqMatrix inv(const FqMatrix& a) const { return a.inverse(); }
};

using MatrixEvaluator = Evaluator<FqMatrix, MatrixOps>;

class GModule;

/// Remembered construction of an induced module, used for cheap restriction
/// and for the reciprocity route to End.
struct Induction {
  std::shared_ptr<const GModule> source;
  std::shared_ptr<const LeftCosetTable> cosets;
};

/// A left kG-module: one invertible matrix per generator of the group, acting
/// on column vectors, with rho(gh) = rho(g) rho(h).
class GModule {
 public:
  GModule() = default;
  /// DimensionError on shape or count mismatch or a singular image. The
  /// dimension is read off the images unless the group has no generators.
  GModule(PermGroup group, FieldPtr field, std::vector<FqMatrix> generator_images,
          std::optional<std::size_t> dim = std::nullopt);
  /// Skips the invertibility check; for images that are invertible by construction.
  static GModule unchecked(PermGroup group, FieldPtr field, std::vector<FqMatrix> generator_images,
                           std::optional<std::size_t> dim = std::nullopt);

  const PermGroup& group() const { return group_; }
  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<FqMatrix>& generator_images() const { return gens_; }
  const std::optional<Induction>& induction() const { return induction_; }

  MatrixEvaluator evaluator() const;
  /// rho(g) for any g in the group.
  FqMatrix image(const Perm& g) const;

 private:
  friend GModule induce(const GModule& v, const PermGroup& g, std::size_t cap);
  PermGroup group_;
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<FqMatrix> gens_;
  std::optional<Induction> induction_;
};

GModule trivial_module(const PermGroup& group, FieldPtr field);
/// std::invalid_argument if the modules live over different groups or fields.
GModule tensor(const GModule& a, const GModule& b);
GModule dual(const GModule& m);
GModule direct_sum(const GModule& a, const GModule& b);
GModule direct_sum(const std::vector<GModule>& parts);
/// The module in the basis given by the columns of t: t^-1 rho(g) t.
GModule change_basis(const GModule& m, const FqMatrix& t);

/// MembershipError if H is not a subgroup of the module's group.
GModule restrict(const GModule& m, const PermGroup& h);
/// Ind_H^G V on the left cosets t_i H: g (t_i (x) v) = t_j (x) h v where
/// g t_i = t_j h. ScaleError beyond the dimension cap.
GModule induce(const GModule& v, const PermGroup& g, std::size_t cap = kInductionCap);

/// Random words in the generators evaluated two ways (directly and through
/// the stabilizer chain) agree.
bool verify_relations(const GModule& m, int trials = 20, std::uint64_t seed = kModuleSeed);

/// Basis of Hom_G(M, N) as dim N x dim M matrices, by spinning M.
std::vector<FqMatrix> hom_space(const GModule& m, const GModule& n);

/// Linear span of matrices with coordinate lookup.
class MatrixSpan {
 public:
  MatrixSpan() = default;
  /// DimensionError if the matrices are linearly dependent.
  explicit MatrixSpan(std::vector<FqMatrix> basis);
  std::size_t dim() const { return basis_.size(); }
  const std::vector<FqMatrix>& basis() const { return basis_; }
  /// Coordinates of x, which must lie in the span (MembershipError otherwise).
  std::vector<Elem> coordinates(const FqMatrix& x) const;
  FqMatrix combination(const std::vector<Elem>& coeffs) const;

 private:
  std::vector<FqMatrix> basis_;
  std::vector<std::size_t> pivots_;  // flattened positions
  FqMatrix solver_;                  // inverse of the basis restricted to pivots
};

/// End_G(M) as a subalgebra of matrices.
struct EndAlgebra {
  MatrixSpan span;
  std::size_t dim() const { return span.dim(); }
  const std::vector<FqMatrix>& basis() const { return span.basis(); }
  /// Left multiplication by each basis element in basis coordinates.
  std::vector<FqMatrix> left_regular() const;
  /// c[i][j] = coordinates of basis[i] * basis[j].
  std::vector<std::vector<std::vector<Elem>>> structure_constants() const;
};

/// Dispatches to the reciprocity route for induced modules (up to
/// kInductionCap) and to the general solver otherwise (up to `cap`).
EndAlgebra end_algebra(const GModule& m, std::size_t cap = kGeneralEndCap);
EndAlgebra end_algebra_general(const GModule& m, std::size_t cap = kGeneralEndCap);
/// End of Ind V from Hom_H(V, Res_H Ind V). std::invalid_argument if the module
/// was not built by induce().
EndAlgebra end_algebra_induced(const GModule& m);

/// Spin the rows of `seeds` under the matrices (acting on column vectors).
/// Returns a basis of the invariant subspace, one vector per row, in reduced
/// echelon form.
FqMatrix spin(const std::vector<FqMatrix>& action, const FqMatrix& seeds);

/// A proper nonzero invariant subspace (rows, reduced echelon form), or
/// nullopt if the action is irreducible (Holt-Rees test).
/// UndecidedError after the attempts are exhausted.
std::optional<FqMatrix> find_submodule(const std::vector<FqMatrix>& action, std::mt19937_64& rng,
                                       int attempts = 200);
bool is_irreducible(const GModule& m, std::uint64_t seed = kModuleSeed);
/// Actions on the factors of a composition series.
std::vector<std::vector<FqMatrix>> composition_factors(const std::vector<FqMatrix>& action,
                                                       std::mt19937_64& rng);

struct RadicalInfo {
  std::vector<FqMatrix> basis;          // J(A)
  std::size_t semisimple_dim = 0;       // dim A/J
  std::vector<std::size_t> simple_dims; // composition factor dims of A as a left A-module
  /// A/J is a division algebra: dim A/J equals the dimension of a simple module.
  bool local() const;
};

/// ScaleError if dim A exceeds kRadicalCap.
RadicalInfo radical(const EndAlgebra& a, std::uint64_t seed = kModuleSeed);

struct Decomposition {
  std::vector<GModule> summands;  // sorted by dimension, then matrix encoding
  /// Columns adapted to the summands: certificate^-1 rho(g) certificate is
  /// block diagonal with the summands' images as blocks.
  FqMatrix certificate;
  /// dim End/J(End) of each summand; 1 means absolutely indecomposable.
  std::vector<std::size_t> residue_degrees;
};

/// Krull-Schmidt decomposition. UndecidedError if a split cannot be found.
Decomposition decompose(const GModule& m, std::uint64_t seed = kModuleSeed);
bool is_indecomposable(const GModule& m, std::uint64_t seed = kModuleSeed);

/// std::invalid_argument on group or field mismatch.
bool is_isomorphic(const GModule& a, const GModule& b, std::uint64_t seed = kModuleSeed);

/// Sum of rho(g) over a 2-group of order at most 2^8.
FqMatrix norm_matrix(const GModule& m);
std::size_t norm_rank(const GModule& m);
/// Norm rank of a (x) b without forming the tensor generators.
std::size_t norm_rank_tensor(const GModule& a, const GModule& b);
/// dim M - |P| norm_rank(M).
std::size_t projective_free_dim(const GModule& m);
/// Projective-free part of Res_P M (x) (Res_P M)* has dimension 1.
/// std::invalid_argument unless P is a Sylow 2-subgroup of the module's group.
bool is_endotrivial(const GModule& m, const PermGroup& p);
/// Res_P M = k (+) free. For summands of modules induced from 1-dimensional
/// modules (trivial source) this is equivalent to endo-triviality and costs
/// one norm rank instead of a tensor square.
bool restricts_to_trivial_plus_free(const GModule& m, const PermGroup& p);

/// Smallest e with every odd invariant of the abelianization dividing 2^e - 1.
unsigned minimal_field_exponent(const PermGroup& n);
/// All homomorphisms N -> GF(2^e)^x as 1-dim modules, the trivial one first.
/// std::invalid_argument naming the minimal valid e if the field is too small.
std::vector<GModule> one_dim_modules(const PermGroup& n, unsigned e);

}  // namespace endotriv
