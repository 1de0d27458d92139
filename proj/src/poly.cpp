#include "endotriv/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace endotriv {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, std::size_t k, Elem c) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  const Elem* m = field_->mul_row(field_->inv(lead()));
  for (auto& x : r.c_) x = m[x];
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_, {});
  std::vector<Elem> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d[i - 1] = field_->mul(field_->from_int(static_cast<long long>(i)), c_[i]);
  }
  return Poly(field_, std::move(d));
}

Elem Poly::operator()(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

namespace {

const FieldPtr& common_field(const Poly& a, const Poly& b) {
  if (!a.field()) return b.field();
  if (b.field() && a.field() != b.field()) throw DimensionError("polynomials over different fields");
  return a.field();
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  const FieldPtr& f = common_field(a, b);
  std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f->add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  const FieldPtr& f = common_field(a, b);
  std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f->sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  const FieldPtr& f = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(f, {});
  std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    const Elem* m = f->mul_row(a.c_[i]);
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = f->add(r[i + j], m[b.c_[j]]);
  }
  return Poly(f, std::move(r));
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldPtr& f = common_field(a, b);
  std::vector<Elem> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(f, {}), a};
  std::vector<Elem> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  Elem inv_lead = f->inv(b.lead());
  for (int k = a.degree(); k >= db; --k) {
    Elem c = f->mul(r[k], inv_lead);
    if (c == 0) continue;
    q[k - db] = c;
    const Elem* m = f->mul_row(c);
    for (int j = 0; j <= db; ++j) r[k - db + j] = f->sub(r[k - db + j], m[b.coeffs()[j]]);
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(common_field(a, b), {});
  return (a / gcd(a, b) * b).monic();
}

Poly powmod(const Poly& base, const BigInt& k, const Poly& m) {
  Poly result = Poly::constant(m.field(), 1) % m;
  Poly b = base % m;
  unsigned bits = k == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(k)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    result = result * result % m;
    if (boost::multiprecision::bit_test(k, i)) result = result * b % m;
  }
  return result;
}

FqMatrix evaluate(const Poly& f, const FqMatrix& a) {
  if (!a.is_square()) throw DimensionError("polynomial of non-square matrix");
  FqMatrix acc(a.field(), a.rows(), a.cols());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < a.rows(); ++d) acc(d, d) = a.field()->add(acc(d, d), f.coeffs()[i]);
  }
  return acc;
}

namespace {

// Reduced Krylov basis with the polynomial that produces each vector.
struct KrylovBasis {
  std::vector<std::vector<Elem>> vecs;
  std::vector<std::size_t> pivots;
  std::vector<Poly> polys;

  // Reduces v (and its tracking polynomial) in place; returns true if v became zero.
  bool reduce(const Field& f, std::vector<Elem>& v, Poly* track) const {
    for (std::size_t s = 0; s < vecs.size(); ++s) {
      Elem c = v[pivots[s]];
      if (c == 0) continue;
      const Elem* m = f.mul_row(c);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], m[vecs[s][j]]);
      if (track) *track = *track - polys[s] * Poly::constant(track->field(), c);
    }
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
  }

  void insert(const Field& f, std::vector<Elem> v, Poly p) {
    std::size_t piv = 0;
    while (v[piv] == 0) ++piv;
    Elem inv = f.inv(v[piv]);
    const Elem* m = f.mul_row(inv);
    for (auto& x : v) x = m[x];
    if (!p.is_zero()) p = p * Poly::constant(p.field(), inv);
    vecs.push_back(std::move(v));
    pivots.push_back(piv);
    polys.push_back(std::move(p));
  }
};

std::vector<Elem> mat_vec(const FqMatrix& a, const std::vector<Elem>& v) {
  const Field& f = *a.field();
  std::vector<Elem> out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc = f.add(acc, f.mul(a(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

// Krylov sequence of v; appends its vectors to `span` and returns the local minimal polynomial.
Poly krylov(const FqMatrix& a, std::vector<Elem> v, KrylovBasis* span) {
  const Field& f = *a.field();
  const FieldPtr& fp = a.field();
  KrylovBasis local;
  std::vector<Elem> cur = std::move(v);
  for (std::size_t k = 0;; ++k) {
    std::vector<Elem> w = cur;
    Poly track = Poly::monomial(fp, k);
    if (local.reduce(f, w, &track)) return track.monic();
    if (span) {
      std::vector<Elem> w2 = cur;
      if (!span->reduce(f, w2, nullptr)) span->insert(f, std::move(w2), Poly());
    }
    local.insert(f, std::move(w), std::move(track));
    cur = mat_vec(a, cur);
  }
}

}  // namespace

Poly local_min_poly(const FqMatrix& a, const FqMatrix& v) {
  if (!a.is_square() || v.rows() != 1 || v.cols() != a.rows()) {
    throw DimensionError("local_min_poly shape mismatch");
  }
  std::vector<Elem> vec(v.data().begin(), v.data().end());
  return krylov(a, std::move(vec), nullptr);
}

Poly min_poly(const FqMatrix& a) {
  if (!a.is_square()) throw DimensionError("minimal polynomial of non-square matrix");
  const Field& f = *a.field();
  Poly result = Poly::constant(a.field(), 1);
  KrylovBasis span;
  std::size_t n = a.rows();
  for (std::size_t i = 0; i < n && span.vecs.size() < n; ++i) {
    std::vector<Elem> e(n, 0);
    e[i] = 1;
    std::vector<Elem> test = e;
    if (span.reduce(f, test, nullptr)) continue;
    result = lcm(result, krylov(a, std::move(e), &span));
  }
  return result;
}

Poly char_poly(const FqMatrix& a) {
  if (!a.is_square()) throw DimensionError("characteristic polynomial of non-square matrix");
  const Field& f = *a.field();
  const FieldPtr& fp = a.field();
  std::size_t n = a.rows();
  FqMatrix h = a;
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    Elem inv = f.inv(h(c + 1, c));
    for (std::size_t i = c + 2; i < n; ++i) {
      Elem u = f.mul(h(i, c), inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(u, h(c + 1, j)));
      for (std::size_t r = 0; r < n; ++r) h(r, c + 1) = f.add(h(r, c + 1), f.mul(u, h(r, i)));
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<Poly> p{Poly::constant(fp, 1)};
  Poly x = Poly::monomial(fp, 1);
  for (std::size_t m = 0; m < n; ++m) {
    Poly next = (x - Poly::constant(fp, h(m, m))) * p[m];
    Elem prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      Elem coef = f.mul(h(i, m), prod);
      if (coef != 0) next = next - p[i] * Poly::constant(fp, coef);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

namespace {

// Inverse Frobenius of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const Field& fld = *f.field();
  unsigned p = fld.characteristic();
  std::vector<Elem> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    r.push_back(fld.frobenius(f.coeffs()[i], fld.degree() - 1));
  }
  return Poly(f.field(), std::move(r));
}

void square_free(const Poly& f, unsigned mult, std::vector<PolyFactor>& out) {
  if (f.degree() <= 0) return;
  Poly d = f.derivative();
  if (d.is_zero()) {
    square_free(pth_root(f), mult * f.field()->characteristic(), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f.monic() / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * mult});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) square_free(pth_root(c), mult * f.field()->characteristic(), out);
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const FieldPtr& fp = f.field();
  BigInt q = fp->size();
  Poly x = Poly::monomial(fp, 1);
  Poly h = x;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
    h = powmod(h, q, f);
    Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

void equal_degree(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<unsigned>(g.degree()) == d) {
    out.push_back(g.monic());
    return;
  }
  const FieldPtr& fp = g.field();
  const Field& f = *fp;
  for (;;) {
    std::vector<Elem> coeffs(static_cast<std::size_t>(g.degree()));
    for (auto& c : coeffs) c = static_cast<Elem>(rng() % f.size());
    Poly a(fp, coeffs);
    if (a.degree() <= 0) continue;
    Poly b;
    if (f.characteristic() == 2) {
      // absolute trace to GF(2) of the residue ring
      Poly t = a % g, acc = a % g;
      for (unsigned i = 1; i < f.degree() * d; ++i) {
        t = t * t % g;
        acc = acc + t;
      }
      b = acc;
    } else {
      BigInt e = (boost::multiprecision::pow(BigInt(f.size()), d) - 1) / 2;
      b = powmod(a, e, g) - Poly::constant(fp, 1);
    }
    Poly s = gcd(b, g);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      equal_degree(s, d, rng, out);
      equal_degree(g / s, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyFactor> factor(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  std::vector<PolyFactor> sqf;
  square_free(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed);
  std::vector<PolyFactor> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [g, d] : distinct_degree(part)) {
      std::vector<Poly> pieces;
      equal_degree(g, d, rng, pieces);
      for (auto& p : pieces) out.push_back({std::move(p), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  // the same irreducible can arise from two square-free layers when p | multiplicity
  std::vector<PolyFactor> merged;
  for (auto& pf : out) {
    if (!merged.empty() && merged.back().factor == pf.factor) {
      merged.back().multiplicity += pf.multiplicity;
    } else {
      merged.push_back(std::move(pf));
    }
  }
  return merged;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace endotriv
