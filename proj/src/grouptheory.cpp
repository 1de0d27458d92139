#include "endotriv/grouptheory.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "endotriv/kernels.hpp"

namespace endotriv {

namespace {

constexpr std::uint64_t kSeed = 0x2c0ffee5ULL;

// Sifts the element x -> c(x) through the chain of h using base-point images
// only. A false result proves c is not in h; true means c agrees with a
// member of h on every base point of h.
template <class F>
bool sift_base_points(const PermGroup& h, F&& c) {
  auto lv = h.levels();
  const Perm* invs[64];
  std::size_t depth = 0;
  for (std::size_t l = 0; l < lv.size(); ++l) {
    Point y = c(lv[l].base);
    for (std::size_t k = 0; k < depth; ++k) y = (*invs[k])(y);
    std::int32_t pos = lv[l].orbit_position[y];
    if (pos < 0) return false;
    if (depth == 64) return true;
    invs[depth++] = &lv[l].transversal_inverse[static_cast<std::size_t>(pos)];
  }
  return true;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_power_of(const BigInt& n, std::uint64_t p) {
  BigInt m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Builds a subgroup from scanned candidates, verifying each with `accept`.
PermGroup build_from_hits(const PermGroup& group, PermGroup start,
                          const std::vector<std::uint64_t>& hits,
                          const std::function<bool(const Perm&)>& accept) {
  PermGroup k = std::move(start);
  for (std::uint64_t idx : hits) {
    if (k.order() == BigInt(hits.size())) break;
    Perm g = group.element_at(idx);
    if (k.contains(g)) continue;
    if (accept && !accept(g)) continue;
    k = k.with_generator(g);
  }
  return k;
}

PermGroup conjugate_group(const PermGroup& h, const Perm& s) {
  std::vector<Perm> gens;
  Perm si = s.inverse();
  for (const auto& g : h.generators()) gens.push_back(si * g * s);
  return PermGroup(std::move(gens), h.degree());
}

bool odd_order(const Perm& g) { return g.order() % 2 == 1; }

}  // namespace

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0 && n > 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::uint64_t p_part(const BigInt& n, std::uint64_t p) {
  BigInt m = n;
  std::uint64_t r = 1;
  while (m > 0 && m % p == 0) {
    m /= p;
    r *= p;
  }
  return r;
}

PermGroup subgroup_generated(std::size_t degree, const std::vector<Perm>& elements) {
  PermGroup k = PermGroup::trivial(degree);
  for (const auto& g : elements) {
    if (!k.contains(g)) k = k.with_generator(g);
  }
  return k;
}

bool is_normal(const PermGroup& group, const PermGroup& subgroup) {
  if (!subgroup.is_subgroup_of(group)) return false;
  for (const auto& s : group.generators()) {
    Perm si = s.inverse();
    for (const auto& h : subgroup.generators()) {
      if (!subgroup.contains(si * h * s)) return false;
    }
  }
  return true;
}

bool is_p_group(const PermGroup& group, std::uint64_t p) { return is_power_of(group.order(), p); }

PermGroup normalizer(const PermGroup& group, const PermGroup& subgroup, std::uint64_t cap) {
  if (!subgroup.is_subgroup_of(group)) throw MembershipError("normalizer: not a subgroup");
  if (subgroup.is_trivial() || subgroup.order() == group.order()) return group;
  const auto& hgens = subgroup.generators();
  auto pred = [&](const kernels::LazyElement& e) {
    for (const auto& h : hgens) {
      auto c = [&](Point x) { return e.apply_inverse(h(e.apply(x))); };
      if (!sift_base_points(subgroup, c)) return false;
    }
    return true;
  };
  auto hits = kernels::omp::scan(group, pred, cap);
  return build_from_hits(group, subgroup, hits, [&](const Perm& g) {
    Perm gi = g.inverse();
    return std::all_of(hgens.begin(), hgens.end(),
                       [&](const Perm& h) { return subgroup.contains(gi * h * g); });
  });
}

PermGroup centralizer(const PermGroup& group, const PermGroup& subgroup, std::uint64_t cap) {
  if (!subgroup.is_subgroup_of(group)) throw MembershipError("centralizer: not a subgroup");
  if (subgroup.is_trivial()) return group;
  const auto& hgens = subgroup.generators();
  const Point n = static_cast<Point>(group.degree());
  auto pred = [&](const kernels::LazyElement& e) {
    for (const auto& h : hgens) {
      for (Point x = 0; x < n; ++x) {
        if (e.apply(h(x)) != h(e.apply(x))) return false;
      }
    }
    return true;
  };
  auto hits = kernels::omp::scan(group, pred, cap);
  return build_from_hits(group, PermGroup::trivial(group.degree()), hits, nullptr);
}

std::optional<PermGroup> normal_closure(const PermGroup& group, const std::vector<Perm>& generators,
                                        const std::function<bool(const PermGroup&)>& abort) {
  PermGroup n = subgroup_generated(group.degree(), generators);
  if (abort && abort(n)) return std::nullopt;
  std::vector<Perm> queue = n.generators();
  BigInt full = group.order();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (n.order() == full) break;
    for (const auto& s : group.generators()) {
      Perm c = s * queue[i] * s.inverse();
      if (n.contains(c)) continue;
      n = n.with_generator(c);
      if (abort && abort(n)) return std::nullopt;
      queue.push_back(std::move(c));
    }
  }
  return n;
}

PermGroup normal_closure(const PermGroup& group, const PermGroup& subgroup) {
  if (!subgroup.is_subgroup_of(group)) throw MembershipError("normal closure: not a subgroup");
  return *normal_closure(group, subgroup.generators());
}

PermGroup derived_subgroup(const PermGroup& group) {
  std::vector<Perm> comms;
  const auto& g = group.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) comms.push_back(commutator(g[i], g[j]));
  }
  return *normal_closure(group, comms);
}

PermGroup center(const PermGroup& group, std::uint64_t cap) { return centralizer(group, group, cap); }

PermGroup intersection(const PermGroup& a, const PermGroup& b, std::uint64_t cap) {
  if (a.degree() != b.degree()) throw DimensionError("intersection: degree mismatch");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& other = a.order() <= b.order() ? b : a;
  if (small.is_subgroup_of(other)) return small;
  auto pred = [&](const kernels::LazyElement& e) {
    return sift_base_points(other, [&](Point x) { return e.apply(x); });
  };
  auto hits = kernels::omp::scan(small, pred, cap);
  return build_from_hits(small, PermGroup::trivial(a.degree()), hits,
                         [&](const Perm& g) { return other.contains(g); });
}

PermGroup sylow(const PermGroup& group, std::uint64_t p, std::uint64_t cap) {
  const std::uint64_t target = p_part(group.order(), p);
  PermGroup s = PermGroup::trivial(group.degree());
  std::mt19937_64 rng(kSeed + p);
  auto p_element = [&](const Perm& x) -> std::optional<Perm> {
    std::uint64_t o = x.order();
    std::uint64_t pp = p_part(o, p);
    if (pp == 1) return std::nullopt;
    return x.pow(static_cast<long long>(o / pp));
  };
  // random words in the generators of <s, y> expose most non-p-groups cheaply
  auto plausibly_p_group = [&](const std::vector<Perm>& gens) {
    for (int t = 0; t < 24; ++t) {
      Perm w(group.degree());
      for (int k = 0; k < 12; ++k) w = w * gens[rng() % gens.size()];
      if (!is_power_of(w.order(), p)) return false;
    }
    return true;
  };
  while (s.order() < target) {
    bool grown = false;
    for (int t = 0; t < 64 && !grown; ++t) {
      auto y = p_element(group.random_element(rng));
      if (!y || s.contains(*y)) continue;
      auto gens = s.generators();
      gens.push_back(*y);
      if (!plausibly_p_group(gens)) continue;
      PermGroup cand = s.with_generator(*y);
      if (is_p_group(cand, p)) {
        s = cand;
        grown = true;
      }
    }
    if (grown) continue;
    PermGroup n = normalizer(group, s, cap);
    for (int t = 0; t < 20000 && !grown; ++t) {
      auto y = p_element(n.random_element(rng));
      if (!y || s.contains(*y)) continue;
      s = s.with_generator(*y);
      grown = true;
    }
    if (!grown) throw UndecidedError("sylow: no p-element found in the normalizer");
  }
  if (s.order() != target || !is_p_group(s, p)) throw InconsistencyError("sylow: postcondition failed");
  return s;
}

PermGroup o_lower_2(const PermGroup& group, std::uint64_t cap) {
  PermGroup core = sylow(group, 2, cap);
  bool changed = true;
  while (changed && !core.is_trivial()) {
    changed = false;
    for (const auto& s : group.generators()) {
      PermGroup meet = intersection(core, conjugate_group(core, s), cap);
      if (meet.order() < core.order()) {
        core = meet;
        changed = true;
      }
    }
  }
  return core;
}

PermGroup o_upper_pprime(const PermGroup& group, std::uint64_t p, std::uint64_t cap) {
  PermGroup result = normal_closure(group, sylow(group, p, cap));
  BigInt index = group.order() / result.order();
  if (index % p == 0) throw InconsistencyError("O^{p'}: index is divisible by p");
  return result;
}

PermGroup o_lower_odd(const PermGroup& group, std::uint64_t cap) {
  if (group.order() % 2 == 1) return group;
  std::mt19937_64 rng(kSeed);
  std::vector<Perm> probes = group.generators();
  for (int i = 0; i < 6; ++i) probes.push_back(group.random_element(rng));
  std::vector<Point> check_points = group.base();
  if (check_points.size() > 8) check_points.resize(8);

  // An element of an odd normal subgroup has odd order, and so do its
  // commutators with anything and its products with its conjugates.
  auto pred = [&](const kernels::LazyElement& e) {
    for (Point x : check_points) {
      std::size_t len = 1;
      for (Point y = e.apply(x); y != x; y = e.apply(y)) ++len;
      if (len % 2 == 0) return false;
    }
    return true;
  };
  auto hits = kernels::omp::scan(group, pred, cap);
  std::vector<Perm> candidates;
  for (auto idx : hits) {
    Perm g = group.element_at(idx);
    if (!odd_order(g)) continue;
    bool ok = std::all_of(probes.begin(), probes.end(), [&](const Perm& s) {
      Perm gs = s.inverse() * g * s;
      return odd_order(g.inverse() * gs) && odd_order(g * gs);
    });
    if (ok) candidates.push_back(std::move(g));
  }
  PermGroup o = PermGroup::trivial(group.degree());
  auto even = [](const PermGroup& h) { return h.order() % 2 == 0; };
  for (const auto& g : candidates) {
    if (o.contains(g)) continue;
    auto gens = o.generators();
    gens.push_back(g);
    if (auto closure = normal_closure(group, gens, even)) o = *closure;
  }
  return o;
}

namespace {

LeftCosetTable checked_table(const PermGroup& group, const PermGroup& normal, std::uint64_t cap) {
  if (!is_normal(group, normal)) throw MembershipError("quotient: subgroup is not normal");
  return LeftCosetTable(group, normal, cap);
}

}  // namespace

QuotientRep::QuotientRep(const PermGroup& group, const PermGroup& normal, std::uint64_t cap)
    : table_(checked_table(group, normal, cap)),
      image_(table_.generator_action(), table_.size()) {}

Perm QuotientRep::map(const Perm& g) const {
  std::vector<Point> img(table_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Point>(table_.act(g, i).first);
  return Perm(std::move(img));
}

namespace {

// Basis of an abelian permutation group, split by prime, with orders.
struct PrimaryBasis {
  std::vector<Perm> elems;
  std::vector<std::uint64_t> orders;
};

std::size_t generated_size(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Perm y = g * x;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

// Elements b_1..b_k of the given orders generating a direct product, by
// backtracking over the p-elements of an abelian group.
bool find_primary_basis(const std::vector<Perm>& candidates, const std::vector<std::uint64_t>& orders,
                        std::size_t degree, std::vector<Perm>& chosen, std::size_t expected) {
  if (chosen.size() == orders.size()) return true;
  std::uint64_t want = orders[chosen.size()];
  for (const auto& c : candidates) {
    if (c.order() != want) continue;
    chosen.push_back(c);
    if (generated_size(chosen, degree) == expected * want &&
        find_primary_basis(candidates, orders, degree, chosen, expected * want)) {
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

AbelianInvariants invariants_impl(const PermGroup& group, bool odd_only, std::uint64_t cap) {
  AbelianInvariants out;
  PermGroup derived = derived_subgroup(group);
  QuotientRep q(group, derived, cap);
  const PermGroup& a = q.image();
  const std::size_t deg = a.degree();
  std::uint64_t order = a.order_u64();
  auto elems = elements(a, cap);

  // primary components: exponents per prime, largest first
  std::map<std::uint64_t, PrimaryBasis> primary;
  for (std::uint64_t p : prime_factors(order)) {
    if (odd_only && p == 2) continue;
    std::vector<Perm> pelems;
    for (const auto& x : elems) {
      if (is_power_of(x.order(), p)) pelems.push_back(x);
    }
    std::vector<std::uint64_t> exps;  // log_p |{x : x^(p^k) = 1}| for k = 0, 1, ...
    for (std::uint64_t pk = 1;; pk *= p) {
      std::size_t count = 0;
      for (const auto& x : pelems) count += (pk % x.order() == 0);
      std::uint64_t s = 0;
      for (std::size_t c = count; c > 1; c /= p) ++s;
      exps.push_back(s);
      if (count == pelems.size()) break;
    }
    std::vector<std::uint64_t> orders;
    for (std::size_t k = exps.size() - 1; k >= 1; --k) {
      std::uint64_t at_least_k = exps[k] - exps[k - 1];
      std::uint64_t at_least_k1 = k + 1 < exps.size() ? exps[k + 1] - exps[k] : 0;
      std::uint64_t pk = 1;
      for (std::size_t i = 0; i < k; ++i) pk *= p;
      for (std::uint64_t t = 0; t < at_least_k - at_least_k1; ++t) orders.push_back(pk);
    }
    std::vector<Perm> chosen;
    if (!find_primary_basis(pelems, orders, deg, chosen, 1)) {
      throw InconsistencyError("abelian invariants: no basis found");
    }
    primary[p] = {std::move(chosen), std::move(orders)};
  }

  // merge primary parts into invariant factors, largest first
  std::size_t rank = 0;
  for (const auto& [p, b] : primary) rank = std::max(rank, b.orders.size());
  std::vector<Perm> basis;
  std::vector<std::uint64_t> inv;
  for (std::size_t i = 0; i < rank; ++i) {
    Perm g(deg);
    std::uint64_t d = 1;
    for (const auto& [p, b] : primary) {
      if (i < b.orders.size()) {
        g = g * b.elems[i];
        d *= b.orders[i];
      }
    }
    basis.push_back(g);
    inv.push_back(d);
  }
  std::reverse(basis.begin(), basis.end());
  std::reverse(inv.begin(), inv.end());

  // coordinates of every element of the basis span
  std::unordered_map<Perm, std::vector<std::uint64_t>, PermHash> coords;
  {
    std::vector<std::uint64_t> c(basis.size(), 0);
    for (;;) {
      Perm x(deg);
      for (std::size_t i = 0; i < basis.size(); ++i) x = x * basis[i].pow(static_cast<long long>(c[i]));
      coords.emplace(x, c);
      std::size_t i = 0;
      for (; i < c.size(); ++i) {
        if (++c[i] < inv[i]) break;
        c[i] = 0;
      }
      if (i == c.size()) break;
    }
  }
  // projection onto the selected part: x -> x^e with e = 1 mod |part|, 0 mod the rest
  std::uint64_t part = 1;
  for (auto d : inv) part *= d;
  std::uint64_t rest = order / part;
  std::uint64_t e = 0;
  for (std::uint64_t k = 0; k < part; ++k) {
    if ((rest * k) % part == 1 % part) {
      e = rest * k;
      break;
    }
  }
  if (part == 1) e = 0;
  for (const auto& s : a.generators()) {
    Perm proj = s.pow(static_cast<long long>(e));
    auto it = coords.find(proj);
    if (it == coords.end()) throw InconsistencyError("abelian invariants: coordinate lookup failed");
    out.generator_coordinates.push_back(it->second);
  }
  for (const auto& b : basis) out.basis_preimages.push_back(group.evaluate(a.factor(b)));
  out.invariants = std::move(inv);
  return out;
}

}  // namespace

AbelianInvariants abelian_invariants(const PermGroup& group, std::uint64_t cap) {
  return invariants_impl(group, false, cap);
}

AbelianInvariants abelian_invariants_odd(const PermGroup& group, std::uint64_t cap) {
  return invariants_impl(group, true, cap);
}

namespace {

constexpr std::size_t kMaxTwoGroup = 256;
using ElemSet = std::bitset<kMaxTwoGroup>;

struct TwoGroupTable {
  std::vector<Perm> elems;
  std::unordered_map<Perm, std::size_t, PermHash> index;
  std::vector<std::vector<std::uint16_t>> mul;

  explicit TwoGroupTable(const PermGroup& p) {
    if (p.order() > kMaxTwoGroup) throw ScaleError("2-group exceeds order cap 256");
    elems = elements(p);
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    mul.assign(elems.size(), std::vector<std::uint16_t>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j) {
        mul[i][j] = static_cast<std::uint16_t>(index.at(elems[i] * elems[j]));
      }
    }
  }

  ElemSet closure(const std::vector<std::size_t>& gens) const {
    ElemSet s;
    s.set(0);  // identity sorts first
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (auto x : frontier) {
        for (auto g : gens) {
          std::size_t y = mul[g][x];
          if (!s.test(y)) {
            s.set(y);
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    return s;
  }
};

std::string set_key(const ElemSet& s, std::size_t n) {
  std::string k(n, '0');
  for (std::size_t i = 0; i < n; ++i) k[i] = s.test(i) ? '1' : '0';
  return k;
}

std::vector<Perm> sorted_elements(const PermGroup& g) {
  auto e = elements(g);
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

std::vector<PermGroup> subgroups_of_2group(const PermGroup& p) {
  if (!is_p_group(p, 2)) throw std::invalid_argument("subgroups_of_2group: not a 2-group");
  TwoGroupTable t(p);
  const std::size_t n = t.elems.size();
  struct Entry {
    ElemSet set;
    std::vector<std::size_t> gens;
  };
  std::map<std::string, Entry> found;
  std::vector<std::size_t> cyclic_gens;
  auto add = [&](ElemSet s, std::vector<std::size_t> gens) {
    return found.emplace(set_key(s, n), Entry{s, std::move(gens)}).second;
  };
  add(t.closure({}), {});
  for (std::size_t i = 1; i < n; ++i) {
    if (add(t.closure({i}), {i})) cyclic_gens.push_back(i);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Entry> current;
    for (const auto& [k, e] : found) current.push_back(e);
    for (const auto& e : current) {
      for (auto c : cyclic_gens) {
        if (e.set.test(c)) continue;
        auto gens = e.gens;
        gens.push_back(c);
        if (add(t.closure(gens), gens)) grew = true;
      }
    }
  }
  std::vector<PermGroup> out;
  std::vector<std::pair<std::pair<std::size_t, std::vector<Perm>>, std::size_t>> order;
  std::vector<PermGroup> groups;
  for (const auto& [k, e] : found) {
    std::vector<Perm> gens, members;
    for (auto g : e.gens) gens.push_back(t.elems[g]);
    for (std::size_t i = 0; i < n; ++i) {
      if (e.set.test(i)) members.push_back(t.elems[i]);
    }
    order.push_back({{members.size(), members}, groups.size()});
    groups.emplace_back(std::move(gens), p.degree());
  }
  std::sort(order.begin(), order.end());
  for (const auto& [key, idx] : order) out.push_back(groups[idx]);
  return out;
}

std::vector<SubgroupClass> subgroup_classes_under(const std::vector<PermGroup>& subgroups,
                                                  const PermGroup& acting) {
  std::vector<std::vector<Perm>> sets;
  std::map<std::vector<Perm>, std::size_t> lookup;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    sets.push_back(sorted_elements(subgroups[i]));
    lookup.emplace(sets.back(), i);
  }
  std::vector<std::size_t> parent(subgroups.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  // conjugating by generators suffices: orbits under a group are generated by its generators
  for (const auto& a : acting.generators()) {
    Perm ai = a.inverse();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::vector<Perm> conj;
      conj.reserve(sets[i].size());
      for (const auto& x : sets[i]) conj.push_back(ai * x * a);
      std::sort(conj.begin(), conj.end());
      auto it = lookup.find(conj);
      if (it == lookup.end()) continue;  // conjugate not in the list
      std::size_t ra = find(i), rb = find(it->second);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < sets.size(); ++i) classes[find(i)].push_back(i);
  std::vector<std::pair<std::pair<std::size_t, std::vector<Perm>>, SubgroupClass>> keyed;
  for (auto& [root, members] : classes) {
    std::size_t best = members[0];
    for (auto m : members) {
      if (sets[m] < sets[best]) best = m;
    }
    keyed.push_back({{sets[best].size(), sets[best]}, SubgroupClass{subgroups[best], acting, members}});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<SubgroupClass> out;
  for (auto& [k, c] : keyed) out.push_back(std::move(c));
  return out;
}

std::string to_string(TwoGroupType::Tag tag) {
  switch (tag) {
    case TwoGroupType::Tag::kTrivial: return "trivial";
    case TwoGroupType::Tag::kCyclic: return "cyclic";
    case TwoGroupType::Tag::kAbelian: return "abelian";
    case TwoGroupType::Tag::kDihedral: return "dihedral";
    case TwoGroupType::Tag::kQuaternion: return "quaternion";
    case TwoGroupType::Tag::kSemidihedral: return "semidihedral";
    case TwoGroupType::Tag::kModular: return "modular";
    case TwoGroupType::Tag::kOther: return "other";
  }
  return "other";
}

TwoGroupType classify_2group(const PermGroup& p) {
  BigInt order = p.order();
  if (!is_power_of(order, 2)) throw std::invalid_argument("classify_2group: order is not a power of 2");
  TwoGroupType t;
  std::uint64_t n = p.order_u64();
  while ((1ULL << t.m) < n) ++t.m;
  if (n == 1) return t;
  auto elems = elements(p);
  std::sort(elems.begin(), elems.end());
  for (const auto& x : elems) {
    if (x.order() == n) {
      t.tag = TwoGroupType::Tag::kCyclic;
      t.r = x;
      return t;
    }
  }
  const auto& gens = p.generators();
  bool abelian = true;
  for (std::size_t i = 0; i < gens.size() && abelian; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && abelian; ++j) abelian = gens[i] * gens[j] == gens[j] * gens[i];
  }
  if (abelian) {
    t.tag = TwoGroupType::Tag::kAbelian;
    return t;
  }
  t.tag = TwoGroupType::Tag::kOther;
  const std::uint64_t half = n / 2;
  auto r_it = std::find_if(elems.begin(), elems.end(), [&](const Perm& x) { return x.order() == half; });
  if (r_it == elems.end()) return t;
  const Perm r = *r_it;
  std::set<Perm> cyc;
  for (std::uint64_t k = 0; k < half; ++k) cyc.insert(r.pow(static_cast<long long>(k)));
  std::optional<Perm> any_s, involution_s;
  for (const auto& x : elems) {
    if (cyc.contains(x)) continue;
    if (!any_s) any_s = x;
    if (!involution_s && (x * x).is_identity()) involution_s = x;
  }
  const Perm& s = *any_s;
  Perm conj = s * r * s.inverse();
  std::uint64_t k = 0;
  for (; k < half; ++k) {
    if (r.pow(static_cast<long long>(k)) == conj) break;
  }
  t.r = r;
  const std::uint64_t quarter = half / 2;
  if (k == half - 1) {
    t.tag = involution_s ? TwoGroupType::Tag::kDihedral : TwoGroupType::Tag::kQuaternion;
    t.s = involution_s ? *involution_s : s;
  } else if (t.m >= 4 && k == quarter - 1) {
    t.tag = TwoGroupType::Tag::kSemidihedral;
    t.s = involution_s ? *involution_s : s;
  } else if (t.m >= 4 && k == quarter + 1) {
    t.tag = TwoGroupType::Tag::kModular;
    t.s = s;
  }
  return t;
}

}  // namespace endotriv
