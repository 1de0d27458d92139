#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "endotriv/gf.hpp"
#include "endotriv/permgroup.hpp"

namespace endotriv {

/// Univariate polynomial over GF(p^e), coefficients low to high, no trailing
/// zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr field, std::vector<Elem> coeffs);
  static Poly constant(FieldPtr field, Elem c);
  /// x^k
  static Poly monomial(FieldPtr field, std::size_t k, Elem c = 1);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elem lead() const { return c_.empty() ? Elem{0} : c_.back(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }

  Poly monic() const;
  Poly derivative() const;
  Elem operator()(Elem x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  /// Degree first, then coefficients from the top down.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Quotient and remainder; std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
/// base^k mod m.
Poly powmod(const Poly& base, const BigInt& k, const Poly& m);

/// f(A) for a square matrix A.
FqMatrix evaluate(const Poly& f, const FqMatrix& a);

/// Monic generator of the annihilator ideal of A.
Poly min_poly(const FqMatrix& a);
/// Monic polynomial of least degree with f(A) v = 0, v a row vector read as a column.
Poly local_min_poly(const FqMatrix& a, const FqMatrix& v);
/// det(xI - A), by Hessenberg reduction.
Poly char_poly(const FqMatrix& a);

struct PolyFactor {
  Poly factor;  // monic irreducible
  unsigned multiplicity = 0;
};

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
/// Randomized equal-degree splitting uses a fixed seed.
std::vector<PolyFactor> factor(const Poly& f);
bool is_irreducible(const Poly& f);

}  // namespace endotriv
