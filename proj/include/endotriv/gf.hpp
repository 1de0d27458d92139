#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endotriv/errors.hpp"

namespace endotriv {

/// Field element, encoded as the integer sum c_i p^i of its coordinates in the
/// polynomial basis 1, x, x^2, ... modulo the field's fixed modulus.
using Elem = std::uint8_t;

/// GF(p^e) for p^e <= 256 with a fixed Conway-style modulus. The class of x
/// (or the root of the linear modulus when e = 1) is primitive.
class Field {
 public:
  /// Throws std::invalid_argument for an unsupported (p, e).
  static std::shared_ptr<const Field> get(unsigned p, unsigned e);
  /// Field of order q = p^e.
  static std::shared_ptr<const Field> of_order(unsigned q);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  unsigned size() const { return q_; }
  /// Monic modulus, coefficients low to high.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem primitive() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long k) const;
  /// a^(p^k)
  Elem frobenius(Elem a, unsigned k = 1) const;
  /// Image of an integer under Z -> GF(p).
  Elem from_int(long long n) const;
  /// primitive()^k for any integer k.
  Elem exp(long long k) const;
  /// Discrete log base primitive(); throws std::domain_error on zero.
  unsigned log(Elem a) const;
  std::uint64_t multiplicative_order(Elem a) const;

  /// Row of the multiplication table for a fixed left factor.
  const Elem* mul_row(Elem a) const { return &mul_[a * q_]; }
  const Elem* add_row(Elem a) const { return &add_[a * q_]; }

  std::string name() const;

 private:
  Field(unsigned p, unsigned e, std::vector<unsigned> modulus);
  unsigned p_, e_, q_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_, exp_;
  std::vector<unsigned> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Dense row-major matrix over a finite field.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static FqMatrix identity(FieldPtr field, std::size_t n);
  static FqMatrix scalar(FieldPtr field, std::size_t n, Elem c);
  /// Entries given by their integer encodings.
  static FqMatrix from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {&data_[r * cols_], cols_}; }
  std::span<Elem> row(std::size_t r) { return {&data_[r * cols_], cols_}; }
  std::span<const Elem> data() const { return data_; }
  std::span<Elem> data() { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  FqMatrix transpose() const;
  /// Throws std::domain_error if singular.
  FqMatrix inverse() const;
  Elem trace() const;
  Elem determinant() const;
  FqMatrix pow(long long k) const;
  /// Entrywise x -> x^(p^k).
  FqMatrix frobenius(unsigned k) const;
  FqMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  FqMatrix scaled(Elem c) const;

  friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator-(const FqMatrix& a, const FqMatrix& b);
  friend bool operator==(const FqMatrix& a, const FqMatrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

FqMatrix kronecker(const FqMatrix& a, const FqMatrix& b);
FqMatrix block_diagonal(const std::vector<FqMatrix>& blocks);
/// Stack matrices with equal column count vertically.
FqMatrix vstack(const std::vector<FqMatrix>& parts);
FqMatrix hstack(const std::vector<FqMatrix>& parts);
/// Row vector view of the matrix entries, row-major.
FqMatrix flatten(const FqMatrix& a);

/// Reduced row echelon form with pivot columns.
struct Echelon {
  FqMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_echelon(const FqMatrix& a);
std::size_t rank(const FqMatrix& a);
/// Basis of {x : a x = 0}, one basis vector per row.
FqMatrix nullspace(const FqMatrix& a);
/// Basis of {y : y a = 0}, one basis vector per row.
FqMatrix left_nullspace(const FqMatrix& a);
/// Particular x with a x = b. DimensionError on shape mismatch,
/// InconsistentSystemError if no solution exists.
FqMatrix solve(const FqMatrix& a, const FqMatrix& b);

struct LinearAnalysis {
  std::size_t rank = 0;
  FqMatrix nullspace;                   // rows are basis vectors
  std::optional<FqMatrix> particular;   // set when a right-hand side was given
};

LinearAnalysis rank_nullspace_solve(const FqMatrix& a,
                                    const std::optional<FqMatrix>& b = std::nullopt);

/// Row space basis in reduced echelon form (zero rows dropped).
FqMatrix row_space(const FqMatrix& a);

/// Lowercase hex encodings, row-major, one matrix row per line.
std::string to_hex_block(const FqMatrix& a);
FqMatrix from_hex_block(FieldPtr field, std::size_t rows, std::size_t cols,
                        const std::vector<std::string>& lines);

}  // namespace endotriv
