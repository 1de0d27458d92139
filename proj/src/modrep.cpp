#include "endotriv/modrep.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "endotriv/errors.hpp"
#include "endotriv/grouptheory.hpp"
#include "endotriv/poly.hpp"

namespace endotriv {

namespace {

using Vec = std::vector<Elem>;

Vec mat_vec(const FqMatrix& a, const Vec& v) {
  const Field& f = *a.field();
  Vec out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Elem acc = 0;
    auto row = a.row(r);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (v[c] != 0 && row[c] != 0) acc = f.add(acc, f.mul(row[c], v[c]));
    }
    out[r] = acc;
  }
  return out;
}

Vec row_of(const FqMatrix& a, std::size_t r) {
  auto s = a.row(r);
  return Vec(s.begin(), s.end());
}

FqMatrix rows_to_matrix(const FieldPtr& f, const std::vector<Vec>& rows, std::size_t cols) {
  FqMatrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  return m;
}

FqMatrix columns_to_matrix(const FieldPtr& f, const std::vector<Vec>& cols, std::size_t rows) {
  FqMatrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

// Semi-echelon basis grown one vector at a time.
class EchelonBasis {
 public:
  explicit EchelonBasis(const Field& f) : f_(f) {}

  void reduce(Vec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Elem c = v[pivots_[i]];
      if (c == 0) continue;
      const Vec& r = rows_[i];
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (r[k] != 0) v[k] = f_.sub(v[k], f_.mul(c, r[k]));
      }
    }
  }

  // Adds v if it is independent; returns whether it was.
  bool add(Vec v) {
    reduce(v);
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    Elem s = f_.inv(v[p]);
    for (auto& x : v) x = f_.mul(x, s);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  const Field& f_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.generators() == b.generators();
}

void require_compatible(const GModule& a, const GModule& b) {
  if (!same_group(a.group(), b.group())) throw std::invalid_argument("modules over different groups");
  if (a.field() != b.field()) throw std::invalid_argument("modules over different fields");
}

std::vector<std::size_t> leading_positions(const FqMatrix& rref) {
  std::vector<std::size_t> piv;
  for (std::size_t r = 0; r < rref.rows(); ++r) {
    std::size_t c = 0;
    while (c < rref.cols() && rref(r, c) == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

Elem random_elem(const Field& f, std::mt19937_64& rng) {
  return static_cast<Elem>(std::uniform_int_distribution<unsigned>(0, f.size() - 1)(rng));
}

// rho_Ind(g) from the coset table: block (j, i) = rho_V(t_j^-1 g t_i).
FqMatrix induced_image(const Induction& ind, MatrixEvaluator& ev, const Perm& g) {
  const std::size_t dv = ind.source->dim(), n = ind.cosets->size();
  FqMatrix out(ind.source->field(), n * dv, n * dv);
  for (std::size_t i = 0; i < n; ++i) {
    auto [j, h] = ind.cosets->act(g, i);
    FqMatrix blk = ev(h);
    for (std::size_t r = 0; r < dv; ++r)
      for (std::size_t c = 0; c < dv; ++c) out(j * dv + r, i * dv + c) = blk(r, c);
  }
  return out;
}

bool commutes_with(const GModule& m, const FqMatrix& x) {
  for (const auto& g : m.generator_images()) {
    if (!(x * g == g * x)) return false;
  }
  return true;
}

}  // namespace

GModule::GModule(PermGroup group, FieldPtr field, std::vector<FqMatrix> generator_images,
                 std::optional<std::size_t> dim)
    : GModule(unchecked(std::move(group), std::move(field), std::move(generator_images), dim)) {
  for (const auto& g : gens_) {
    if (g.determinant() == 0) throw DimensionError("generator image is singular");
  }
}

GModule GModule::unchecked(PermGroup group, FieldPtr field, std::vector<FqMatrix> generator_images,
                           std::optional<std::size_t> dim) {
  if (generator_images.size() != group.num_generators()) {
    throw DimensionError("one matrix per group generator required");
  }
  GModule m;
  if (generator_images.empty() && !dim) throw DimensionError("dimension required for a group without generators");
  m.dim_ = dim ? *dim : generator_images[0].rows();
  for (const auto& g : generator_images) {
    if (g.rows() != m.dim_ || g.cols() != m.dim_) throw DimensionError("generator images must be square of equal size");
    if (g.field() != field) throw DimensionError("generator image over a different field");
  }
  m.group_ = std::move(group);
  m.field_ = std::move(field);
  m.gens_ = std::move(generator_images);
  return m;
}

MatrixEvaluator GModule::evaluator() const {
  return MatrixEvaluator(group_, gens_, MatrixOps{field_, dim_});
}

FqMatrix GModule::image(const Perm& g) const {
  if (induction_) {
    MatrixEvaluator ev = induction_->source->evaluator();
    return induced_image(*induction_, ev, g);
  }
  return evaluator()(g);
}

GModule trivial_module(const PermGroup& group, FieldPtr field) {
  std::vector<FqMatrix> gens(group.num_generators(), FqMatrix::identity(field, 1));
  return GModule::unchecked(group, std::move(field), std::move(gens), 1);
}

GModule tensor(const GModule& a, const GModule& b) {
  require_compatible(a, b);
  std::vector<FqMatrix> gens;
  for (std::size_t i = 0; i < a.generator_images().size(); ++i) {
    gens.push_back(kronecker(a.generator_images()[i], b.generator_images()[i]));
  }
  return GModule::unchecked(a.group(), a.field(), std::move(gens), a.dim() * b.dim());
}

GModule dual(const GModule& m) {
  std::vector<FqMatrix> gens;
  for (const auto& g : m.generator_images()) gens.push_back(g.inverse().transpose());
  return GModule::unchecked(m.group(), m.field(), std::move(gens), m.dim());
}

GModule direct_sum(const GModule& a, const GModule& b) { return direct_sum(std::vector<GModule>{a, b}); }

GModule direct_sum(const std::vector<GModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  for (const auto& p : parts) require_compatible(parts[0], p);
  std::vector<FqMatrix> gens;
  for (std::size_t i = 0; i < parts[0].generator_images().size(); ++i) {
    std::vector<FqMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.generator_images()[i]);
    gens.push_back(block_diagonal(blocks));
  }
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  return GModule::unchecked(parts[0].group(), parts[0].field(), std::move(gens), total);
}

GModule change_basis(const GModule& m, const FqMatrix& t) {
  if (t.rows() != m.dim() || t.cols() != m.dim()) throw DimensionError("basis change has wrong size");
  if (t.determinant() == 0) throw DimensionError("basis change is singular");
  FqMatrix ti = t.inverse();
  std::vector<FqMatrix> gens;
  for (const auto& g : m.generator_images()) gens.push_back(ti * g * t);
  return GModule::unchecked(m.group(), m.field(), std::move(gens), m.dim());
}

GModule restrict(const GModule& m, const PermGroup& h) {
  if (h.degree() != m.group().degree() || !h.is_subgroup_of(m.group())) {
    throw MembershipError("restriction to a non-subgroup");
  }
  std::vector<FqMatrix> gens;
  if (m.induction()) {
    MatrixEvaluator ev = m.induction()->source->evaluator();
    for (const auto& g : h.generators()) gens.push_back(induced_image(*m.induction(), ev, g));
  } else {
    MatrixEvaluator ev = m.evaluator();
    for (const auto& g : h.generators()) gens.push_back(ev(g));
  }
  return GModule::unchecked(h, m.field(), std::move(gens), m.dim());
}

GModule induce(const GModule& v, const PermGroup& g, std::size_t cap) {
  const PermGroup& h = v.group();
  if (h.degree() != g.degree() || !h.is_subgroup_of(g)) throw MembershipError("induction from a non-subgroup");
  BigInt index = g.order() / h.order();
  if (index * v.dim() > cap) throw ScaleError("induced module exceeds dimension cap");
  Induction ind{std::make_shared<GModule>(v), std::make_shared<LeftCosetTable>(g, h)};
  MatrixEvaluator ev = v.evaluator();
  std::vector<FqMatrix> gens;
  for (const auto& x : g.generators()) gens.push_back(induced_image(ind, ev, x));
  std::size_t dim = static_cast<std::size_t>(index) * v.dim();
  GModule out = GModule::unchecked(g, v.field(), std::move(gens), dim);
  out.induction_ = std::move(ind);
  return out;
}

bool verify_relations(const GModule& m, int trials, std::uint64_t seed) {
  const auto& gens = m.group().generators();
  if (gens.empty()) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 24);
  MatrixEvaluator ev = m.evaluator();
  for (int t = 0; t < trials; ++t) {
    Perm p(m.group().degree());
    FqMatrix x = FqMatrix::identity(m.field(), m.dim());
    for (int k = len(rng); k > 0; --k) {
      std::size_t i = pick(rng);
      p = p * gens[i];
      x = x * m.generator_images()[i];
    }
    if (!(ev(p) == x)) return false;
  }
  return true;
}

std::vector<FqMatrix> hom_space(const GModule& m, const GModule& n) {
  require_compatible(m, n);
  const FieldPtr& fp = m.field();
  const Field& f = *fp;
  const std::size_t d = m.dim(), e = n.dim();
  const auto& gm = m.generator_images();
  const auto& gn = n.generator_images();
  if (d == 0 || e == 0) return {};

  // Spin standard basis vectors of M, recording how each basis vector arose.
  struct Origin {
    std::int64_t parent = -1;  // -1 for a seed
    std::size_t gen = 0, seed = 0;
  };
  EchelonBasis eb(f);
  std::vector<Vec> basis;
  std::vector<Origin> origin;
  std::vector<std::vector<bool>> adopted;  // [basis index][generator]
  std::size_t seeds = 0;
  for (std::size_t i = 0; i < d && basis.size() < d; ++i) {
    Vec ei(d, 0);
    ei[i] = 1;
    if (!eb.add(ei)) continue;
    basis.push_back(ei);
    origin.push_back({-1, 0, seeds++});
    adopted.emplace_back(gm.size(), false);
    for (std::size_t j = basis.size() - 1; j < basis.size(); ++j) {
      for (std::size_t g = 0; g < gm.size(); ++g) {
        Vec w = mat_vec(gm[g], basis[j]);
        if (eb.add(w)) {
          basis.push_back(std::move(w));
          origin.push_back({static_cast<std::int64_t>(j), g, 0});
          adopted.emplace_back(gm.size(), false);
          adopted[j][g] = true;
        }
      }
    }
  }

  const std::size_t unknowns = seeds * e;
  FqMatrix b = columns_to_matrix(fp, basis, d);
  FqMatrix binv = b.inverse();

  // Phi(b_k) = L_k x for the unknown images x of the seeds.
  std::vector<FqMatrix> lmap;
  lmap.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (origin[k].parent < 0) {
      FqMatrix sel(fp, e, unknowns);
      for (std::size_t r = 0; r < e; ++r) sel(r, origin[k].seed * e + r) = 1;
      lmap.push_back(std::move(sel));
    } else {
      lmap.push_back(gn[origin[k].gen] * lmap[static_cast<std::size_t>(origin[k].parent)]);
    }
  }

  std::vector<FqMatrix> blocks;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t g = 0; g < gm.size(); ++g) {
      if (adopted[j][g]) continue;
      Vec c = mat_vec(binv, mat_vec(gm[g], basis[j]));
      FqMatrix eq = gn[g] * lmap[j];
      for (std::size_t l = 0; l < d; ++l) {
        if (c[l] == 0) continue;
        eq = eq - lmap[l].scaled(c[l]);
      }
      blocks.push_back(std::move(eq));
    }
  }

  FqMatrix sol;
  if (blocks.empty()) {
    sol = FqMatrix::identity(fp, unknowns);
  } else {
    sol = nullspace(row_space(vstack(blocks)));
  }
  std::vector<FqMatrix> out;
  for (std::size_t s = 0; s < sol.rows(); ++s) {
    Vec x = row_of(sol, s);
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < d; ++k) cols.push_back(mat_vec(lmap[k], x));
    out.push_back(columns_to_matrix(fp, cols, e) * binv);
  }
  return out;
}

MatrixSpan::MatrixSpan(std::vector<FqMatrix> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) return;
  const FieldPtr& f = basis_[0].field();
  std::vector<FqMatrix> flat;
  for (const auto& b : basis_) flat.push_back(flatten(b));
  FqMatrix fm = vstack(flat);
  Echelon ech = row_echelon(fm);
  if (ech.rank() != basis_.size()) throw DimensionError("matrices are linearly dependent");
  pivots_ = ech.pivots;
  FqMatrix sub(f, basis_.size(), basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < pivots_.size(); ++c) sub(r, c) = fm(r, pivots_[c]);
  solver_ = sub.inverse();
}

std::vector<Elem> MatrixSpan::coordinates(const FqMatrix& x) const {
  if (basis_.empty()) {
    if (!x.is_zero()) throw MembershipError("matrix not in span");
    return {};
  }
  const std::size_t cols = basis_[0].cols();
  FqMatrix xp(x.field(), 1, pivots_.size());
  for (std::size_t c = 0; c < pivots_.size(); ++c) xp(0, c) = x(pivots_[c] / cols, pivots_[c] % cols);
  FqMatrix coeff = xp * solver_;
  Vec out = row_of(coeff, 0);
  if (!(combination(out) == x)) throw MembershipError("matrix not in span");
  return out;
}

FqMatrix MatrixSpan::combination(const std::vector<Elem>& coeffs) const {
  if (coeffs.size() != basis_.size()) throw DimensionError("coefficient count mismatch");
  FqMatrix acc(basis_[0].field(), basis_[0].rows(), basis_[0].cols());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) acc = acc + basis_[i].scaled(coeffs[i]);
  }
  return acc;
}

std::vector<FqMatrix> EndAlgebra::left_regular() const {
  const std::size_t a = dim();
  std::vector<FqMatrix> out;
  for (std::size_t i = 0; i < a; ++i) {
    FqMatrix l(basis()[i].field(), a, a);
    for (std::size_t j = 0; j < a; ++j) {
      Vec c = span.coordinates(basis()[i] * basis()[j]);
      for (std::size_t k = 0; k < a; ++k) l(k, j) = c[k];
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::vector<std::vector<Elem>>> EndAlgebra::structure_constants() const {
  std::vector<std::vector<std::vector<Elem>>> out(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out[i].push_back(span.coordinates(basis()[i] * basis()[j]));
  return out;
}

EndAlgebra end_algebra_general(const GModule& m, std::size_t cap) {
  if (m.dim() > cap) throw ScaleError("module too large for the general endomorphism solver");
  return EndAlgebra{MatrixSpan(hom_space(m, m))};
}

EndAlgebra end_algebra_induced(const GModule& m) {
  if (!m.induction()) throw std::invalid_argument("module was not constructed by induction");
  const Induction& ind = *m.induction();
  const GModule& v = *ind.source;
  const std::size_t dv = v.dim(), n = ind.cosets->size();
  GModule res = restrict(m, v.group());
  MatrixEvaluator ev = v.evaluator();
  const auto& reps = ind.cosets->representatives();
  // act(t_i, j) is needed for every pair; the twist matrices are shared by all Y.
  std::vector<std::vector<std::pair<std::size_t, FqMatrix>>> twist(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto [k, h] = ind.cosets->act(reps[i], j);
      twist[i].emplace_back(k, ev(h));
    }
  }
  std::vector<FqMatrix> basis;
  for (const FqMatrix& y : hom_space(v, res)) {
    FqMatrix phi(m.field(), n * dv, n * dv);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& [k, rho] = twist[i][j];
        FqMatrix blk = rho * y.submatrix(j * dv, 0, dv, dv);
        for (std::size_t r = 0; r < dv; ++r)
          for (std::size_t c = 0; c < dv; ++c) phi(k * dv + r, i * dv + c) = blk(r, c);
      }
    }
    if (!commutes_with(m, phi)) throw InconsistencyError("transported homomorphism is not G-linear");
    basis.push_back(std::move(phi));
  }
  return EndAlgebra{MatrixSpan(std::move(basis))};
}

EndAlgebra end_algebra(const GModule& m, std::size_t cap) {
  if (m.induction() && m.dim() <= kInductionCap) return end_algebra_induced(m);
  return end_algebra_general(m, cap);
}

FqMatrix spin(const std::vector<FqMatrix>& action, const FqMatrix& seeds) {
  const FieldPtr& fp = seeds.field();
  EchelonBasis eb(*fp);
  std::vector<Vec> raw;
  for (std::size_t r = 0; r < seeds.rows(); ++r) {
    Vec v = row_of(seeds, r);
    if (eb.add(v)) raw.push_back(std::move(v));
  }
  const std::size_t n = seeds.cols();
  for (std::size_t j = 0; j < raw.size() && raw.size() < n; ++j) {
    for (const auto& x : action) {
      Vec w = mat_vec(x, raw[j]);
      if (eb.add(w)) raw.push_back(std::move(w));
    }
  }
  if (raw.empty()) return FqMatrix(fp, 0, n);
  return row_space(rows_to_matrix(fp, raw, n));
}

std::optional<FqMatrix> find_submodule(const std::vector<FqMatrix>& action, std::mt19937_64& rng,
                                       int attempts) {
  if (action.empty()) throw std::invalid_argument("empty action");
  const FieldPtr& fp = action[0].field();
  const std::size_t n = action[0].rows();
  if (n <= 1) return std::nullopt;
  std::vector<FqMatrix> transposed;
  for (const auto& x : action) transposed.push_back(x.transpose());
  std::uniform_int_distribution<std::size_t> pick(0, action.size() - 1);

  FqMatrix word = action[pick(rng)];
  for (int attempt = 0; attempt < attempts; ++attempt) {
    // Random element of the enveloping algebra: a random walk of products
    // plus a random combination of the generators.
    word = word * action[pick(rng)];
    FqMatrix theta = word.scaled(random_elem(*fp, rng));
    for (const auto& x : action) theta = theta + x.scaled(random_elem(*fp, rng));
    for (const PolyFactor& pf : factor(char_poly(theta))) {
      FqMatrix ft = evaluate(pf.factor, theta);
      FqMatrix ker = nullspace(ft);
      FqMatrix u = spin(action, ker.submatrix(0, 0, 1, n));
      if (u.rows() < n) return u;
      FqMatrix kert = nullspace(ft.transpose());
      FqMatrix ut = spin(transposed, kert.submatrix(0, 0, 1, n));
      if (ut.rows() < n) return row_space(nullspace(ut));
      if (ker.rows() == static_cast<std::size_t>(pf.factor.degree())) return std::nullopt;
    }
  }
  throw UndecidedError("irreducibility test exhausted its attempts");
}

bool is_irreducible(const GModule& m, std::uint64_t seed) {
  if (m.dim() <= 1) return m.dim() == 1;
  std::mt19937_64 rng(seed);
  std::vector<FqMatrix> action = m.generator_images();
  if (action.empty()) return false;
  return !find_submodule(action, rng).has_value();
}

std::vector<std::vector<FqMatrix>> composition_factors(const std::vector<FqMatrix>& action,
                                                       std::mt19937_64& rng) {
  if (action.empty() || action[0].rows() == 0) return {};
  auto sub = find_submodule(action, rng);
  if (!sub) return {action};
  const FqMatrix& w = *sub;
  const FieldPtr& fp = w.field();
  const Field& f = *fp;
  const std::size_t n = w.cols(), k = w.rows();
  std::vector<std::size_t> piv = leading_positions(w);
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_piv[c]) free.push_back(c);

  std::vector<FqMatrix> sub_action, quo_action;
  for (const auto& x : action) {
    FqMatrix s(fp, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      Vec y = mat_vec(x, row_of(w, i));
      for (std::size_t j = 0; j < k; ++j) s(j, i) = y[piv[j]];
    }
    sub_action.push_back(std::move(s));
    FqMatrix q(fp, n - k, n - k);
    for (std::size_t i = 0; i < free.size(); ++i) {
      Vec y(n);
      for (std::size_t r = 0; r < n; ++r) y[r] = x(r, free[i]);
      for (std::size_t j = 0; j < k; ++j) {
        Elem c = y[piv[j]];
        if (c == 0) continue;
        for (std::size_t r = 0; r < n; ++r) y[r] = f.sub(y[r], f.mul(c, w(j, r)));
      }
      for (std::size_t j = 0; j < free.size(); ++j) q(j, i) = y[free[j]];
    }
    quo_action.push_back(std::move(q));
  }
  auto out = composition_factors(sub_action, rng);
  auto rest = composition_factors(quo_action, rng);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool RadicalInfo::local() const {
  return std::find(simple_dims.begin(), simple_dims.end(), semisimple_dim) != simple_dims.end();
}

RadicalInfo radical(const EndAlgebra& a, std::uint64_t seed) {
  const std::size_t n = a.dim();
  if (n > kRadicalCap) throw ScaleError("algebra too large for the radical computation");
  RadicalInfo info;
  if (n == 0) return info;
  std::mt19937_64 rng(seed);
  std::vector<FqMatrix> reg = a.left_regular();
  auto factors = composition_factors(reg, rng);
  // x lies in J exactly when it acts as zero on every composition factor.
  std::vector<FqMatrix> parts;
  for (const auto& fac : factors) {
    info.simple_dims.push_back(fac[0].rows());
    std::vector<FqMatrix> cols;
    for (const auto& m : fac) cols.push_back(flatten(m).transpose());
    parts.push_back(hstack(cols));
  }
  FqMatrix sys = vstack(parts);
  FqMatrix null = nullspace(sys);
  for (std::size_t r = 0; r < null.rows(); ++r) info.basis.push_back(a.span.combination(row_of(null, r)));
  info.semisimple_dim = n - info.basis.size();
  return info;
}

namespace {

struct Piece {
  FqMatrix columns;  // basis of the summand in the coordinates of the parent
  GModule module;
  std::size_t residue = 1;
};

std::vector<Piece> split(const GModule& m, std::mt19937_64& rng) {
  const FieldPtr& fp = m.field();
  const std::size_t d = m.dim();
  auto whole = [&](std::size_t residue) {
    return std::vector<Piece>{{FqMatrix::identity(fp, d), m, residue}};
  };
  if (d <= 1) return whole(1);
  EndAlgebra end = end_algebra(m);
  if (end.dim() == 1) return whole(1);
  RadicalInfo rad = radical(end, rng());
  if (rad.local()) return whole(rad.semisimple_dim);

  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec coeffs(end.dim());
    for (auto& c : coeffs) c = random_elem(*fp, rng);
    FqMatrix theta = end.span.combination(coeffs);
    auto fs = factor(min_poly(theta));
    if (fs.size() < 2) continue;
    // Fitting decomposition along the coprime primary components.
    std::vector<FqMatrix> parts;
    for (const auto& pf : fs) {
      FqMatrix k = nullspace(evaluate(pf.factor, theta).pow(pf.multiplicity));
      parts.push_back(k.transpose());
    }
    FqMatrix t = hstack(parts);
    FqMatrix ti = t.inverse();
    std::vector<std::vector<FqMatrix>> images(parts.size());
    std::size_t off = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const std::size_t w = parts[p].cols();
      for (const auto& g : m.generator_images()) {
        FqMatrix conj = ti * g * t;
        if (!conj.submatrix(off, 0, w, off).is_zero() ||
            !conj.submatrix(off, off + w, w, d - off - w).is_zero()) {
          throw InconsistencyError("Fitting components are not invariant");
        }
        images[p].push_back(conj.submatrix(off, off, w, w));
      }
      off += w;
    }
    std::vector<Piece> out;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      GModule sub = GModule::unchecked(m.group(), fp, std::move(images[p]), parts[p].cols());
      for (Piece& child : split(sub, rng)) {
        child.columns = parts[p] * child.columns;
        out.push_back(std::move(child));
      }
    }
    return out;
  }
  throw UndecidedError("no splitting endomorphism found");
}

bool encoding_less(const GModule& a, const GModule& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.generator_images().size(); ++i) {
    auto x = a.generator_images()[i].data(), y = b.generator_images()[i].data();
    if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
  }
  return false;
}

}  // namespace

Decomposition decompose(const GModule& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Piece> pieces = split(m, rng);
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Piece& a, const Piece& b) { return encoding_less(a.module, b.module); });
  Decomposition out;
  std::vector<FqMatrix> cols;
  for (auto& p : pieces) {
    cols.push_back(p.columns);
    out.summands.push_back(std::move(p.module));
    out.residue_degrees.push_back(p.residue);
  }
  out.certificate = cols.empty() ? FqMatrix(m.field(), 0, 0) : hstack(cols);
  return out;
}

bool is_indecomposable(const GModule& m, std::uint64_t seed) {
  if (m.dim() == 0) return false;
  if (m.dim() == 1) return true;
  EndAlgebra end = end_algebra(m);
  if (end.dim() == 1) return true;
  return radical(end, seed).local();
}

namespace {

std::optional<FqMatrix> random_isomorphism(const GModule& a, const GModule& b, std::mt19937_64& rng,
                                           int tries) {
  auto hom = hom_space(a, b);
  if (hom.empty()) return std::nullopt;
  const Field& f = *a.field();
  for (int t = 0; t < tries; ++t) {
    FqMatrix x(a.field(), b.dim(), a.dim());
    for (const auto& h : hom) x = x + h.scaled(random_elem(f, rng));
    if (x.determinant() != 0) return x;
  }
  return std::nullopt;
}

}  // namespace

bool is_isomorphic(const GModule& a, const GModule& b, std::uint64_t seed) {
  require_compatible(a, b);
  if (a.dim() != b.dim()) return false;
  if (a.dim() == 0) return true;
  std::mt19937_64 rng(seed);
  if (random_isomorphism(a, b, rng, 16)) return true;
  // Compare Krull-Schmidt decompositions; for indecomposables the
  // non-isomorphisms in Hom form the proper subspace J, so 48 random
  // draws missing an isomorphism is decisive.
  Decomposition da = decompose(a, seed), db = decompose(b, seed);
  if (da.summands.size() != db.summands.size()) return false;
  std::vector<bool> used(db.summands.size(), false);
  for (const auto& x : da.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < db.summands.size() && !matched; ++j) {
      if (used[j] || db.summands[j].dim() != x.dim()) continue;
      if (random_isomorphism(x, db.summands[j], rng, 48)) matched = used[j] = true;
    }
    if (!matched) return false;
  }
  return true;
}

namespace {

void require_small_2group(const GModule& m) {
  if (m.field()->characteristic() != 2) throw std::invalid_argument("norm element needs characteristic 2");
  BigInt order = m.group().order();
  if (order > 256) throw ScaleError("norm element limited to groups of order at most 256");
  if ((order & (order - 1)) != 0) throw std::invalid_argument("norm element needs a 2-group");
}

}  // namespace

FqMatrix norm_matrix(const GModule& m) {
  require_small_2group(m);
  MatrixEvaluator ev = m.evaluator();
  FqMatrix acc(m.field(), m.dim(), m.dim());
  for (const Perm& g : elements(m.group())) acc = acc + ev(g);
  return acc;
}

std::size_t norm_rank(const GModule& m) { return rank(norm_matrix(m)); }

std::size_t norm_rank_tensor(const GModule& a, const GModule& b) {
  require_compatible(a, b);
  require_small_2group(a);
  MatrixEvaluator ea = a.evaluator(), eb = b.evaluator();
  FqMatrix acc(a.field(), a.dim() * b.dim(), a.dim() * b.dim());
  for (const Perm& g : elements(a.group())) acc = acc + kronecker(ea(g), eb(g));
  return rank(acc);
}

std::size_t projective_free_dim(const GModule& m) {
  std::size_t order = static_cast<std::size_t>(m.group().order());
  return m.dim() - order * norm_rank(m);
}

bool is_endotrivial(const GModule& m, const PermGroup& p) {
  if (p.order() != p_part(m.group().order(), 2) || !p.is_subgroup_of(m.group())) {
    throw std::invalid_argument("P must be a Sylow 2-subgroup of the module's group");
  }
  std::size_t order = static_cast<std::size_t>(p.order());
  std::size_t total = m.dim() * m.dim();
  // dim (M (x) M*) = 1 + |P| (free rank) is necessary
  if (total % order != 1 % order) return false;
  GModule r = restrict(m, p);
  return total - order * norm_rank_tensor(r, dual(r)) == 1;
}

bool restricts_to_trivial_plus_free(const GModule& m, const PermGroup& p) {
  if (p.order() != p_part(m.group().order(), 2) || !p.is_subgroup_of(m.group())) {
    throw std::invalid_argument("P must be a Sylow 2-subgroup of the module's group");
  }
  // a 1-dimensional kP-module is trivial, so the non-free part is k
  return projective_free_dim(restrict(m, p)) == 1;
}

unsigned minimal_field_exponent(const PermGroup& n) {
  auto inv = abelian_invariants_odd(n);
  std::uint64_t l = 1;
  for (auto d : inv.invariants) l = std::lcm(l, d);
  unsigned e = 1;
  std::uint64_t pw = 2 % l;
  while (l > 1 && pw != 1) {
    pw = pw * 2 % l;
    ++e;
  }
  return e;
}

std::vector<GModule> one_dim_modules(const PermGroup& n, unsigned e) {
  FieldPtr f = Field::get(2, e);
  auto inv = abelian_invariants_odd(n);
  const std::uint64_t qm1 = f->size() - 1;
  for (auto d : inv.invariants) {
    if (qm1 % d != 0) {
      throw std::invalid_argument("GF(2^" + std::to_string(e) + ") lacks a root of unity of order " +
                                  std::to_string(d) + "; minimal e = " +
                                  std::to_string(minimal_field_exponent(n)));
    }
  }
  std::vector<GModule> out;
  std::vector<std::uint64_t> c(inv.invariants.size(), 0);
  while (true) {
    std::vector<FqMatrix> gens;
    for (std::size_t g = 0; g < n.num_generators(); ++g) {
      std::uint64_t ex = 0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        ex = (ex + qm1 / inv.invariants[j] * c[j] % qm1 * inv.generator_coordinates[g][j]) % qm1;
      }
      gens.push_back(FqMatrix::scalar(f, 1, f->exp(static_cast<long long>(ex))));
    }
    out.push_back(GModule::unchecked(n, f, std::move(gens), 1));
    std::size_t j = c.size();
    while (j > 0 && ++c[j - 1] == inv.invariants[j - 1]) c[--j] = 0;
    if (j == 0) break;
  }
  return out;
}

}  // namespace endotriv
