#include "endotriv/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "endotriv/kernels.hpp"

namespace endotriv {

namespace {

// Conway polynomials, coefficients low to high, monic.
const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>& modulus_table() {
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 1}, {9, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 1}, {11, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

std::vector<unsigned> digits_of(unsigned v, unsigned p, unsigned e) {
  std::vector<unsigned> d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

unsigned from_digits(const std::vector<unsigned>& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Polynomial product modulo the monic modulus, coefficients in GF(p).
unsigned slow_mul(unsigned a, unsigned b, unsigned p, const std::vector<unsigned>& modulus) {
  unsigned e = static_cast<unsigned>(modulus.size() - 1);
  auto da = digits_of(a, p, e), db = digits_of(b, p, e);
  std::vector<unsigned> prod(2 * e, 0);
  for (unsigned i = 0; i < e; ++i) {
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (std::size_t k = prod.size(); k-- > e;) {
    unsigned c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i <= e; ++i) {
      prod[k - e + i] = (prod[k - e + i] + p * p - c * modulus[i] % p) % p;
    }
  }
  prod.resize(e);
  return from_digits(prod, p);
}

}  // namespace

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < e; ++i) q_ *= p;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    auto da = digits_of(a, p, e);
    std::vector<unsigned> dn(e);
    for (unsigned i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<Elem>(from_digits(dn, p));
    for (unsigned b = 0; b < q_; ++b) {
      auto db = digits_of(b, p, e);
      std::vector<unsigned> ds(e);
      for (unsigned i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = static_cast<Elem>(from_digits(ds, p));
    }
  }
  unsigned gen = (e == 1) ? (p - modulus_[0] % p) % p : p;  // root of modulus
  unsigned x = 1;
  for (unsigned k = 0; k < q_ - 1; ++k) {
    if (k > 0 && x == 1) throw std::logic_error("field modulus is not primitive");
    exp_[k] = static_cast<Elem>(x);
    log_[x] = k;
    x = (e == 1) ? (x * gen) % p : slow_mul(x, gen, p, modulus_);
  }
  if (x != 1) throw std::logic_error("field modulus is not primitive");
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      mul_[a * q_ + b] =
          (a == 0 || b == 0) ? Elem{0} : exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    if (a != 0) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
}

std::shared_ptr<const Field> Field::get(unsigned p, unsigned e) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(p, e);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto mt = modulus_table().find(key);
  if (mt == modulus_table().end()) {
    throw std::invalid_argument("unsupported field GF(" + std::to_string(p) + "^" +
                                std::to_string(e) + ")");
  }
  std::shared_ptr<const Field> f(new Field(p, e, mt->second));
  cache.emplace(key, f);
  return f;
}

std::shared_ptr<const Field> Field::of_order(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned e = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) break;
    return get(p, e);
  }
  throw std::invalid_argument("field order must be a prime power");
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, long long k) const {
  if (a == 0) {
    if (k < 0) throw std::domain_error("negative power of zero");
    return k == 0 ? Elem{1} : Elem{0};
  }
  long long m = static_cast<long long>(q_ - 1);
  long long r = ((static_cast<long long>(log_[a]) * (k % m)) % m + m) % m;
  return exp_[static_cast<std::size_t>(r)];
}

Elem Field::frobenius(Elem a, unsigned k) const {
  long long power = 1;
  for (unsigned i = 0; i < k % e_; ++i) power *= p_;
  return pow(a, power);
}

Elem Field::from_int(long long n) const {
  long long r = ((n % p_) + p_) % p_;
  return static_cast<Elem>(r);  // prime field elements are 0..p-1
}

Elem Field::exp(long long k) const {
  long long m = static_cast<long long>(q_ - 1);
  return exp_[static_cast<std::size_t>(((k % m) + m) % m)];
}

unsigned Field::log(Elem a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a == 0) throw std::domain_error("order of zero");
  std::uint64_t m = q_ - 1;
  return m / std::gcd<std::uint64_t>(m, log_[a]);
}

std::string Field::name() const {
  return "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ")";
}

// ---------------------------------------------------------------------------

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t n) { return scalar(std::move(field), n, 1); }

FqMatrix FqMatrix::scalar(FieldPtr field, std::size_t n, Elem c) {
  FqMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

FqMatrix FqMatrix::from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  FqMatrix m(field, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) {
      if (rows[r][c] >= field->size()) throw std::invalid_argument("entry outside field");
      m(r, c) = static_cast<Elem>(rows[r][c]);
    }
  }
  return m;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool FqMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

FqMatrix FqMatrix::inverse() const {
  if (!is_square()) throw DimensionError("inverse of non-square matrix");
  std::size_t n = rows_;
  FqMatrix aug = hstack({*this, identity(field_, n)});
  Echelon e = row_echelon(aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw std::domain_error("matrix is singular");
  }
  return e.reduced.submatrix(0, n, n, n);
}

Elem FqMatrix::trace() const {
  Elem t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = field_->add(t, (*this)(i, i));
  return t;
}

Elem FqMatrix::determinant() const {
  if (!is_square()) throw DimensionError("determinant of non-square matrix");
  const Field& f = *field_;
  FqMatrix a = *this;
  std::size_t n = rows_;
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r) {
      if (a(r, c) != 0) {
        piv = r;
        break;
      }
    }
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    Elem inv = f.inv(a(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Elem factor = f.mul(a(r, c), inv);
      for (std::size_t j = c; j < n; ++j) a(r, j) = f.sub(a(r, j), f.mul(factor, a(c, j)));
    }
  }
  return det;
}

FqMatrix FqMatrix::pow(long long k) const {
  if (!is_square()) throw DimensionError("power of non-square matrix");
  FqMatrix base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  FqMatrix result = identity(field_, rows_);
  while (e) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FqMatrix FqMatrix::frobenius(unsigned k) const {
  FqMatrix m = *this;
  for (Elem& x : m.data_) x = field_->frobenius(x, k);
  return m;
}

FqMatrix FqMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("submatrix out of range");
  FqMatrix s(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    std::copy_n(&data_[(r0 + r) * cols_ + c0], nc, &s.data_[r * nc]);
  }
  return s;
}

FqMatrix FqMatrix::scaled(Elem c) const {
  FqMatrix m = *this;
  const Elem* mrow = field_->mul_row(c);
  for (Elem& x : m.data_) x = mrow[x];
  return m;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  if (a.field_ != b.field_) throw DimensionError("matrix fields differ");
  FqMatrix c(a.field_, a.rows_, b.cols_);
  if (a.rows_ * a.cols_ * b.cols_ > (1u << 18)) {
    kernels::omp::matmul(*a.field_, a.data_, b.data_, c.data_, a.rows_, a.cols_, b.cols_);
  } else {
    kernels::serial::matmul(*a.field_, a.data_, b.data_, c.data_, a.rows_, a.cols_, b.cols_);
  }
  return c;
}

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  FqMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
  return c;
}

FqMatrix operator-(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
  FqMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_->sub(a.data_[i], b.data_[i]);
  return c;
}

bool operator==(const FqMatrix& a, const FqMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
         (a.field_ == b.field_ || a.data_.empty());
}

FqMatrix kronecker(const FqMatrix& a, const FqMatrix& b) {
  const Field& f = *a.field();
  FqMatrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Elem x = a(i, j);
      if (x == 0) continue;
      const Elem* mrow = f.mul_row(x);
      for (std::size_t r = 0; r < b.rows(); ++r) {
        Elem* dst = &k(i * b.rows() + r, j * b.cols());
        for (std::size_t c = 0; c < b.cols(); ++c) dst[c] = mrow[b(r, c)];
      }
    }
  }
  return k;
}

FqMatrix block_diagonal(const std::vector<FqMatrix>& blocks) {
  if (blocks.empty()) throw DimensionError("no blocks");
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  FqMatrix m(blocks[0].field(), nr, nc);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

FqMatrix vstack(const std::vector<FqMatrix>& parts) {
  if (parts.empty()) throw DimensionError("nothing to stack");
  std::size_t nr = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts[0].cols()) throw DimensionError("vstack column mismatch");
    nr += p.rows();
  }
  FqMatrix m(parts[0].field(), nr, parts[0].cols());
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    std::copy(p.data().begin(), p.data().end(), m.data().begin() + static_cast<std::ptrdiff_t>(r0 * m.cols()));
    r0 += p.rows();
  }
  return m;
}

FqMatrix hstack(const std::vector<FqMatrix>& parts) {
  if (parts.empty()) throw DimensionError("nothing to stack");
  std::size_t nc = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts[0].rows()) throw DimensionError("hstack row mismatch");
    nc += p.cols();
  }
  FqMatrix m(parts[0].field(), parts[0].rows(), nc);
  std::size_t c0 = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r) {
      for (std::size_t c = 0; c < p.cols(); ++c) m(r, c0 + c) = p(r, c);
    }
    c0 += p.cols();
  }
  return m;
}

FqMatrix flatten(const FqMatrix& a) {
  FqMatrix v(a.field(), 1, a.rows() * a.cols());
  std::copy(a.data().begin(), a.data().end(), v.data().begin());
  return v;
}

Echelon row_echelon(const FqMatrix& a) {
  Echelon e{a, {}};
  if (a.rows() == 0 || a.cols() == 0) return e;
  const Field& f = *a.field();
  const std::size_t cols = a.cols();
  e.pivots = (a.rows() * a.cols() > (1u << 16))
                 ? kernels::omp::echelonize(f, e.reduced.data(), a.rows(), cols)
                 : kernels::serial::echelonize(f, e.reduced.data(), a.rows(), cols);
  // back substitution; pivots are already 1
  for (std::size_t r = e.pivots.size(); r-- > 0;) {
    std::size_t c = e.pivots[r];
    const Elem* prow = &e.reduced(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      Elem x = e.reduced(i, c);
      if (x == 0) continue;
      Elem* row = &e.reduced(i, 0);
      const Elem* mrow = f.mul_row(x);
      for (std::size_t j = c; j < cols; ++j) row[j] = f.sub(row[j], mrow[prow[j]]);
    }
  }
  return e;
}

std::size_t rank(const FqMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  FqMatrix tmp = a;
  auto piv = (a.rows() * a.cols() > (1u << 16))
                 ? kernels::omp::echelonize(*a.field(), tmp.data(), a.rows(), a.cols())
                 : kernels::serial::echelonize(*a.field(), tmp.data(), a.rows(), a.cols());
  return piv.size();
}

FqMatrix nullspace(const FqMatrix& a) {
  const Field& f = *a.field();
  Echelon e = row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::size_t nfree = a.cols() - e.rank();
  FqMatrix ns(a.field(), nfree, a.cols());
  std::size_t k = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    ns(k, c) = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) ns(k, e.pivots[r]) = f.neg(e.reduced(r, c));
    ++k;
  }
  return ns;
}

FqMatrix left_nullspace(const FqMatrix& a) { return nullspace(a.transpose()); }

FqMatrix solve(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("right-hand side row count mismatch");
  const std::size_t n = a.cols();
  Echelon e = row_echelon(hstack({a, b}));
  FqMatrix x(a.field(), n, b.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] >= n) throw InconsistentSystemError("linear system has no solution");
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[r], c) = e.reduced(r, n + c);
  }
  return x;
}

LinearAnalysis rank_nullspace_solve(const FqMatrix& a, const std::optional<FqMatrix>& b) {
  LinearAnalysis out;
  out.rank = rank(a);
  out.nullspace = nullspace(a);
  if (b) out.particular = solve(a, *b);
  return out;
}

FqMatrix row_space(const FqMatrix& a) {
  Echelon e = row_echelon(a);
  return e.reduced.submatrix(0, 0, e.rank(), a.cols());
}

std::string to_hex_block(const FqMatrix& a) {
  std::ostringstream os;
  os << std::hex;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) os << ' ';
      os << static_cast<unsigned>(a(r, c));
    }
    os << '\n';
  }
  return os.str();
}

FqMatrix from_hex_block(FieldPtr field, std::size_t rows, std::size_t cols,
                        const std::vector<std::string>& lines) {
  if (lines.size() != rows) throw DimensionError("matrix block has wrong number of rows");
  FqMatrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::istringstream is(lines[r]);
    for (std::size_t c = 0; c < cols; ++c) {
      unsigned v;
      if (!(is >> std::hex >> v)) throw std::invalid_argument("matrix row too short");
      if (v >= field->size()) throw std::invalid_argument("matrix entry outside field");
      m(r, c) = static_cast<Elem>(v);
    }
    std::string extra;
    if (is >> extra) throw std::invalid_argument("matrix row too long");
  }
  return m;
}

}  // namespace endotriv
