#include "endotriv/families.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "endotriv/errors.hpp"
#include "endotriv/grouptheory.hpp"

namespace endotriv {

namespace {

Perm perm_from_map(std::size_t degree, const std::function<Point(Point)>& f) {
  std::vector<Point> img(degree);
  for (Point x = 0; x < degree; ++x) img[x] = f(x);
  return Perm(std::move(img));
}

// 1-based cycles, as in published listings.
Perm from_one_based(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<std::vector<Point>> zero = cycles;
  for (auto& c : zero)
    for (auto& x : c) --x;
  return Perm::from_cycles(degree, zero);
}

bool is_odd_prime_power(unsigned q) {
  if (q < 3 || q % 2 == 0) return false;
  unsigned p = 3;
  while (q % p) p += 2;
  while (q % p == 0) q /= p;
  return q == 1;
}

unsigned extension_degree(const Field& f, unsigned q) {
  unsigned e = 0;
  for (unsigned x = 1; x < q; x *= f.characteristic()) ++e;
  return e;
}

FqMatrix elementary(const FieldPtr& f, std::size_t n, std::size_t i, std::size_t j, Elem c) {
  FqMatrix m = FqMatrix::identity(f, n);
  m(i, j) = c;
  return m;
}

FqMatrix diagonal(const FieldPtr& f, const std::vector<Elem>& d) {
  FqMatrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool is_unitary_type(Classical c) {
  return c == Classical::kGU || c == Classical::kSU || c == Classical::kSUpm;
}

// Entries -1, 0, 1 mapped into the field.
FqMatrix signed_matrix(const FieldPtr& f, const std::vector<std::vector<int>>& rows) {
  FqMatrix m(f, rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = f->from_int(rows[r][c]);
  return m;
}

}  // namespace

PermGroup semidihedral_group(unsigned m) {
  if (m < 4) throw std::invalid_argument("semidihedral group needs m >= 4");
  const Point n = 1u << (m - 1);
  const Point k = (1u << (m - 2)) - 1;
  Perm r = perm_from_map(n, [&](Point x) { return (x + 1) % n; });
  Perm s = perm_from_map(n, [&](Point x) { return (k * x) % n; });
  return PermGroup({r, s}, n);
}

PermGroup dihedral_group(unsigned m) {
  if (m < 2) throw std::invalid_argument("dihedral group needs m >= 2");
  const Point n = 1u << (m - 1);
  Perm r = perm_from_map(n, [&](Point x) { return (x + 1) % n; });
  Perm s = perm_from_map(n, [&](Point x) { return (n - x) % n; });
  return PermGroup({r, s}, n);
}

PermGroup quaternion_group(unsigned m) {
  if (m < 3) throw std::invalid_argument("quaternion group needs m >= 3");
  const Point n = 1u << (m - 1);  // order of r; element r^i s^j has index i + n j
  Perm r = perm_from_map(2 * n, [&](Point x) { return (x % n + 1) % n + n * (x / n); });
  Perm s = perm_from_map(2 * n, [&](Point x) {
    Point i = x % n, j = x / n;
    Point ni = (n - i) % n;
    return j == 0 ? ni + n : (ni + n / 2) % n;
  });
  return PermGroup({r, s}, 2 * n);
}

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  Perm r = perm_from_map(n, [&](Point x) { return static_cast<Point>((x + 1) % n); });
  return PermGroup({r}, n);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t na = a.degree(), nb = b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    gens.push_back(perm_from_map(na + nb, [&](Point x) { return x < na ? g(x) : x; }));
  }
  for (const auto& g : b.generators()) {
    gens.push_back(perm_from_map(
        na + nb, [&](Point x) { return x < na ? x : static_cast<Point>(g(x - na) + na); }));
  }
  return PermGroup(std::move(gens), na + nb);
}

std::string to_string(Classical family) {
  switch (family) {
    case Classical::kGL: return "GL";
    case Classical::kSL: return "SL";
    case Classical::kGU: return "GU";
    case Classical::kSU: return "SU";
    case Classical::kSLpm: return "SLpm";
    case Classical::kSUpm: return "SUpm";
  }
  return "?";
}

bool MatrixGroup::contains_matrix(const FqMatrix& g) const {
  if (g.rows() != n || g.cols() != n || g.field() != field) return false;
  Elem det = g.determinant();
  if (det == 0) return false;
  if (form) {
    FqMatrix star = g.frobenius(field->degree() / 2).transpose();
    if (!(star * *form * g == *form)) return false;
  }
  const Elem minus_one = field->neg(1);
  switch (family) {
    case Classical::kGL:
    case Classical::kGU: return true;
    case Classical::kSL:
    case Classical::kSU: return det == 1;
    case Classical::kSLpm:
    case Classical::kSUpm: return det == 1 || det == minus_one;
  }
  return false;
}

std::vector<Elem> MatrixGroup::scalar_subgroup() const {
  std::vector<Elem> out;
  for (unsigned c = 1; c < field->size(); ++c) {
    if (contains_matrix(FqMatrix::scalar(field, n, static_cast<Elem>(c)))) out.push_back(static_cast<Elem>(c));
  }
  return out;
}

BigInt classical_order(Classical family, std::size_t n, unsigned q) {
  BigInt bq = q;
  BigInt order = 1;
  if (is_unitary_type(family)) {
    order = boost::multiprecision::pow(bq, static_cast<unsigned>(n * (n - 1) / 2));
    for (std::size_t i = 1; i <= n; ++i) {
      BigInt qi = boost::multiprecision::pow(bq, static_cast<unsigned>(i));
      if (i % 2) order *= qi + 1; else order *= qi - 1;
    }
    if (family == Classical::kSU) order /= (q + 1);
    if (family == Classical::kSUpm) order = order / (q + 1) * 2;
  } else {
    BigInt qn = boost::multiprecision::pow(bq, static_cast<unsigned>(n));
    for (std::size_t i = 0; i < n; ++i) order *= qn - boost::multiprecision::pow(bq, static_cast<unsigned>(i));
    if (family == Classical::kSL) order /= (q - 1);
    if (family == Classical::kSLpm) order = order / (q - 1) * 2;
  }
  return order;
}

PermImage::PermImage(FieldPtr field, std::size_t n, std::uint64_t scalar_quotient)
    : field_(std::move(field)), n_(n), d_(scalar_quotient) {
  const std::uint64_t qq = field_->size();
  if ((qq - 1) % d_ != 0) throw std::invalid_argument("scalar quotient must divide q - 1");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= qq;
  if ((total - 1) / d_ > kDegreeCap) throw ScaleError("permutation degree exceeds cap");
  index_.assign(total, -1);
  const std::uint64_t m = (qq - 1) / d_;
  std::vector<Elem> v(n, 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t r = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<Elem>(r % qq);
      r /= qq;
    }
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (field_->log(v[lead]) >= m) continue;
    index_[code] = static_cast<std::int32_t>(points_.size());
    points_.push_back(v);
  }
}

std::size_t PermImage::locate(std::vector<Elem> v) const {
  const Field& f = *field_;
  const std::uint64_t m = (f.size() - 1) / d_;
  std::size_t lead = 0;
  while (lead < n_ && v[lead] == 0) ++lead;
  if (lead == n_) throw std::domain_error("zero vector has no point");
  unsigned l = f.log(v[lead]);
  Elem scale = f.exp(-static_cast<long long>(l - l % m));
  std::uint64_t code = 0;
  for (std::size_t i = n_; i-- > 0;) code = code * f.size() + f.mul(scale, v[i]);
  return static_cast<std::size_t>(index_[code]);
}

Perm PermImage::map(const FqMatrix& g) const {
  if (g.rows() != n_ || g.cols() != n_) throw DimensionError("matrix size does not match action");
  const Field& f = *field_;
  std::vector<Point> img(points_.size());
  std::vector<Elem> w(n_);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& v = points_[i];
    for (std::size_t r = 0; r < n_; ++r) {
      Elem acc = 0;
      for (std::size_t c = 0; c < n_; ++c) acc = f.add(acc, f.mul(g(r, c), v[c]));
      w[r] = acc;
    }
    img[i] = static_cast<Point>(locate(w));
  }
  return Perm(std::move(img));
}

namespace {

std::uint64_t scalar_quotient_for(const MatrixGroup& m, PermAction action) {
  const std::uint64_t qq1 = m.field->size() - 1;
  switch (action) {
    case PermAction::kProjective: return qq1;
    case PermAction::kVectors: return 1;
    case PermAction::kFaithful: {
      std::uint64_t z = m.scalar_subgroup().size();
      std::uint64_t best = 1;
      for (std::uint64_t d = 1; d <= qq1; ++d) {
        if (qq1 % d == 0 && std::gcd(d, z) == 1) best = d;
      }
      return best;
    }
  }
  return 1;
}

std::uint64_t trivially_acting_scalars(const MatrixGroup& m, std::uint64_t d) {
  std::uint64_t k = 0;
  for (Elem c : m.scalar_subgroup()) k += m.field->pow(c, static_cast<long long>(d)) == 1;
  return k;
}

}  // namespace

PermImage to_perm(const MatrixGroup& m, PermAction action) {
  std::uint64_t d = scalar_quotient_for(m, action);
  PermImage img(m.field, m.n, d);
  std::vector<Perm> gens;
  for (const auto& g : m.generators) gens.push_back(img.map(g));
  img.group = PermGroup(std::move(gens), img.degree());
  img.kernel_order = trivially_acting_scalars(m, d);
  return img;
}

MatrixGroup classical_group(Classical family, std::size_t n, unsigned q) {
  if (!is_odd_prime_power(q)) throw std::invalid_argument("q must be an odd prime power");
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  MatrixGroup m;
  m.family = family;
  m.n = n;
  m.q = q;
  const bool unitary = is_unitary_type(family);
  m.field = unitary ? Field::of_order(q * q) : Field::of_order(q);
  const FieldPtr& f = m.field;
  const Elem w = f->primitive();
  const Elem minus_one = f->neg(1);
  auto diag_first = [&](Elem c) {
    std::vector<Elem> d(n, 1);
    d[0] = c;
    return diagonal(f, d);
  };

  if (!unitary) {
    unsigned e = extension_degree(*f, q);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (unsigned k = 0; k < e; ++k) {
        m.generators.push_back(elementary(f, n, i, i + 1, f->exp(k)));
        m.generators.push_back(elementary(f, n, i + 1, i, f->exp(k)));
      }
    }
    if (family == Classical::kGL) m.generators.push_back(diag_first(w));
    if (family == Classical::kSLpm) m.generators.push_back(diag_first(minus_one));
    return m;
  }

  m.form = FqMatrix::identity(f, n);
  // SU_2 blocks [[a, b], [-b^q, a^q]] with N(a) + N(b) = 1 on adjacent coordinates,
  // added greedily until the special unitary group is reached
  MatrixGroup su = m;
  su.family = Classical::kSU;
  const unsigned fq = f->degree() / 2;
  auto norm = [&](Elem x) { return f->mul(x, f->frobenius(x, fq)); };
  PermImage img(f, n, scalar_quotient_for(su, PermAction::kFaithful));
  const BigInt target = classical_order(Classical::kSU, n, q);
  PermGroup g = PermGroup::trivial(img.degree());
  for (std::size_t i = 0; i + 1 < n && g.order() < target; ++i) {
    for (unsigned a = 0; a < f->size() && g.order() < target; ++a) {
      for (unsigned b = 0; b < f->size() && g.order() < target; ++b) {
        Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
        if (f->add(norm(ea), norm(eb)) != 1) continue;
        FqMatrix blk = FqMatrix::identity(f, n);
        blk(i, i) = ea;
        blk(i, i + 1) = eb;
        blk(i + 1, i) = f->neg(f->frobenius(eb, fq));
        blk(i + 1, i + 1) = f->frobenius(ea, fq);
        Perm p = img.map(blk);
        if (g.contains(p)) continue;
        g = g.with_generator(p);
        m.generators.push_back(blk);
      }
    }
  }
  if (g.order() != target) throw InconsistencyError("unitary generators do not reach SU");
  if (family == Classical::kGU) m.generators.push_back(diag_first(f->exp(q - 1)));
  if (family == Classical::kSUpm) m.generators.push_back(diag_first(minus_one));
  for (const auto& x : m.generators) {
    if (!m.contains_matrix(x)) throw InconsistencyError("generator violates the defining conditions");
  }
  return m;
}

namespace {

// Points 0..Q-1 are field elements, Q is infinity.
struct ProjectiveLine {
  FieldPtr f;
  Point inf;
  explicit ProjectiveLine(unsigned q) : f(Field::of_order(q * q)), inf(static_cast<Point>(q * q)) {}
  std::size_t degree() const { return inf + 1u; }

  Perm affine(Elem a, Elem b) const {  // z -> a z + b
    return perm_from_map(degree(), [&](Point z) {
      return z == inf ? inf : static_cast<Point>(f->add(f->mul(a, static_cast<Elem>(z)), b));
    });
  }
  Perm negative_inverse() const {  // z -> -1/z
    return perm_from_map(degree(), [&](Point z) {
      if (z == inf) return Point{0};
      if (z == 0) return inf;
      return static_cast<Point>(f->neg(f->inv(static_cast<Elem>(z))));
    });
  }
  Perm twisted_frobenius(Elem a, unsigned k) const {  // z -> a z^(p^k)
    return perm_from_map(degree(), [&](Point z) {
      return z == inf ? inf : static_cast<Point>(f->mul(a, f->frobenius(static_cast<Elem>(z), k)));
    });
  }
  std::vector<Perm> psl_generators() const {
    std::vector<Perm> gens;
    for (unsigned k = 0; k < f->degree(); ++k) gens.push_back(affine(1, f->exp(k)));
    gens.push_back(affine(f->exp(2), 0));
    gens.push_back(negative_inverse());
    return gens;
  }
};

}  // namespace

PermGroup psl2_square(unsigned q) {
  if (!is_odd_prime_power(q)) throw std::invalid_argument("q must be an odd prime power");
  ProjectiveLine line(q);
  PermGroup g(line.psl_generators(), line.degree());
  BigInt qq = BigInt(q) * q;
  if (g.order() != qq * (qq * qq - 1) / 2) throw InconsistencyError("PSL_2 generators have wrong order");
  return g;
}

PermGroup pgl2_square(unsigned q) {
  ProjectiveLine line(q);
  auto gens = line.psl_generators();
  gens.push_back(line.affine(line.f->primitive(), 0));
  return PermGroup(std::move(gens), line.degree());
}

PermGroup pgl_star(unsigned q) {
  PermGroup psl = psl2_square(q);
  ProjectiveLine line(q);
  const unsigned fq = line.f->degree() / 2;
  for (unsigned j = 1; j < line.f->size() - 1; j += 2) {
    auto gens = line.psl_generators();
    gens.push_back(line.twisted_frobenius(line.f->exp(j), fq));
    PermGroup g(std::move(gens), line.degree());
    if (g.order() != 2 * psl.order()) continue;
    if (classify_2group(sylow_2(g)).tag != TwoGroupType::Tag::kSemidihedral) continue;
    return g;
  }
  throw InconsistencyError("no twisted Frobenius extension with semidihedral Sylow subgroup");
}

ExplicitElements explicit_elements(int eps, unsigned q) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be 1 or -1");
  if (!is_odd_prime_power(q)) throw std::invalid_argument("q must be an odd prime power");
  if (((static_cast<int>(q) + eps) % 4 + 4) % 4 != 0) throw std::invalid_argument("need q = -eps mod 4");
  ExplicitElements pe;
  pe.eps = eps;
  pe.q = q;
  pe.field = eps == 1 ? Field::of_order(q) : Field::of_order(q * q);
  const FieldPtr& f = pe.field;
  std::uint64_t qe = eps == 1 ? q - 1 : q + 1;
  while (qe % 2 == 0) qe /= 2;
  pe.zeta_order = qe;
  pe.zeta = f->exp(static_cast<long long>((f->size() - 1) / qe));
  pe.u = signed_matrix(f, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  pe.v = signed_matrix(f, {{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  pe.t = signed_matrix(f, {{1, 0, 0}, {0, 0, 1}, {0, -1, 0}});
  pe.a = signed_matrix(f, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  Elem z = pe.zeta, zi = f->inv(z);
  pe.x = diagonal(f, {z, z, f->mul(zi, zi)});
  pe.y = diagonal(f, {z, 1, zi});
  return pe;
}

PermImage sl3_eps(int eps, unsigned q) {
  return to_perm(classical_group(eps == 1 ? Classical::kSL : Classical::kSU, 3, q), PermAction::kFaithful);
}

PermGroup psl3_eps(int eps, unsigned q) {
  return to_perm(classical_group(eps == 1 ? Classical::kSL : Classical::kSU, 3, q), PermAction::kProjective)
      .group;
}

PermGroup fixture_m11() {
  return PermGroup({from_one_based(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                    from_one_based(11, {{3, 7, 11, 8}, {4, 10, 5, 6}})},
                   11);
}

PermGroup fixture_3m10() {
  Perm x1 = from_one_based(36, {{1, 2, 4, 8, 20, 34, 31, 36, 22, 10, 9, 3},
                                {5, 13, 15, 6, 14, 28, 27, 35, 21, 18, 25, 11},
                                {7, 16, 24, 33, 30, 17},
                                {12, 26, 23, 29, 32, 19}});
  Perm x2 = from_one_based(36, {{1, 4, 5}, {2, 6, 7}, {9, 21, 22}, {10, 11, 24}, {12, 27, 16},
                                {13, 28, 18}, {14, 20, 31}, {15, 33, 23}, {17, 32, 25},
                                {19, 26, 29}, {30, 34, 35}});
  Perm x3 = from_one_based(36, {{2, 6, 8}, {3, 10, 11}, {4, 5, 12}, {7, 18, 19}, {9, 21, 23},
                                {13, 29, 30}, {14, 32, 31}, {15, 25, 27}, {16, 17, 33},
                                {24, 28, 26}, {34, 35, 36}});
  return PermGroup({x1, x2, x3}, 36);
}

}  // namespace endotriv
