#include "endotriv/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace endotriv {

struct PermGroup::Impl {
  struct Strong {
    Perm perm;
    std::int32_t node;
    std::size_t level;  // fixes base points 0..level-1
  };

  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<ChainLevel> levels;
  std::vector<Strong> strong;
  std::vector<SlpNode> nodes;
  std::unordered_map<std::int32_t, std::int32_t> inverse_cache;
  // checked[level][orbit position][strong index]
  std::vector<std::vector<std::vector<char>>> checked;

  std::int32_t push_node(SlpNode n) {
    nodes.push_back(n);
    return static_cast<std::int32_t>(nodes.size() - 1);
  }

  std::int32_t inverse_node(std::int32_t id) {
    if (nodes[id].kind == SlpNode::Kind::kIdentity) return id;
    auto it = inverse_cache.find(id);
    if (it != inverse_cache.end()) return it->second;
    std::int32_t r = push_node({SlpNode::Kind::kInverse, id, -1});
    inverse_cache.emplace(id, r);
    inverse_cache.emplace(r, id);
    return r;
  }

  std::int32_t product_node(std::int32_t a, std::int32_t b) {
    if (nodes[a].kind == SlpNode::Kind::kIdentity) return b;
    if (nodes[b].kind == SlpNode::Kind::kIdentity) return a;
    return push_node({SlpNode::Kind::kProduct, a, b});
  }

  void new_level(Point base) {
    ChainLevel lv;
    lv.base = base;
    lv.orbit = {base};
    lv.orbit_position.assign(degree, -1);
    lv.orbit_position[base] = 0;
    lv.transversal = {Perm(degree)};
    lv.transversal_inverse = {Perm(degree)};
    lv.transversal_node = {0};
    levels.push_back(std::move(lv));
    checked.emplace_back();
  }

  // Returns the level of the new strong generator.
  std::size_t add_strong(const Perm& perm, std::int32_t node) {
    std::size_t level = levels.size();
    for (std::size_t l = 0; l < levels.size(); ++l) {
      if (perm(levels[l].base) != levels[l].base) {
        level = l;
        break;
      }
    }
    if (level == levels.size()) new_level(perm.smallest_moved_point());
    strong.push_back({perm, node, level});
    return level;
  }

  void extend_orbit(std::size_t i) {
    ChainLevel& lv = levels[i];
    for (std::size_t pos = 0; pos < lv.orbit.size(); ++pos) {
      Point p = lv.orbit[pos];
      for (const Strong& s : strong) {
        if (s.level < i) continue;
        Point q = s.perm(p);
        if (lv.orbit_position[q] >= 0) continue;
        lv.orbit_position[q] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(q);
        Perm u = s.perm * lv.transversal[pos];
        lv.transversal_inverse.push_back(u.inverse());
        lv.transversal.push_back(std::move(u));
        lv.transversal_node.push_back(product_node(s.node, lv.transversal_node[pos]));
      }
    }
  }

  struct Sifted {
    Perm residue;
    std::size_t level;  // first level the residue dropped out of, or levels.size()
    std::vector<std::pair<std::size_t, std::size_t>> path;
  };

  Sifted sift(Perm h, std::size_t from) const {
    Sifted out;
    for (std::size_t l = from; l < levels.size(); ++l) {
      const ChainLevel& lv = levels[l];
      std::int32_t pos = lv.orbit_position[h(lv.base)];
      if (pos < 0) {
        out.level = l;
        out.residue = std::move(h);
        return out;
      }
      if (pos != 0) h = lv.transversal_inverse[pos] * h;
      out.path.emplace_back(l, static_cast<std::size_t>(pos));
    }
    out.level = levels.size();
    out.residue = std::move(h);
    return out;
  }

  void schreier_sims() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
    while (i >= 0) {
      std::size_t li = static_cast<std::size_t>(i);
      extend_orbit(li);
      bool restarted = false;
      for (std::size_t pos = 0; pos < levels[li].orbit.size() && !restarted; ++pos) {
        auto& marks_for_level = checked[li];
        if (marks_for_level.size() <= pos) marks_for_level.resize(pos + 1);
        for (std::size_t j = 0; j < strong.size(); ++j) {
          if (strong[j].level < li) continue;
          auto& marks = checked[li][pos];
          if (marks.size() <= j) marks.resize(strong.size(), 0);
          if (marks[j]) continue;
          marks[j] = 1;

          const ChainLevel& lv = levels[li];
          Point p = lv.orbit[pos];
          Point q = strong[j].perm(p);
          std::size_t qpos = static_cast<std::size_t>(lv.orbit_position[q]);
          Perm sg = lv.transversal_inverse[qpos] * strong[j].perm * lv.transversal[pos];
          if (sg.is_identity()) continue;
          Sifted s = sift(std::move(sg), li + 1);
          if (s.residue.is_identity()) continue;

          std::int32_t node = product_node(
              product_node(inverse_node(lv.transversal_node[qpos]), strong[j].node),
              lv.transversal_node[pos]);
          for (auto [l, tp] : s.path) {
            node = product_node(inverse_node(levels[l].transversal_node[tp]), node);
          }
          std::size_t new_level = add_strong(s.residue, node);
          i = static_cast<std::ptrdiff_t>(new_level);
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }
  }
};

namespace {

void check_degree(const Perm& g, std::size_t degree) {
  if (g.degree() != degree) throw DimensionError("permutation degree does not match group degree");
}

}  // namespace

PermGroup::PermGroup() : PermGroup({}, 0) {}

PermGroup::PermGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

PermGroup::PermGroup(std::vector<Perm> generators, std::size_t degree) {
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->nodes.push_back({SlpNode::Kind::kIdentity, -1, -1});
  for (std::size_t k = 0; k < generators.size(); ++k) {
    check_degree(generators[k], degree);
    impl->nodes.push_back({SlpNode::Kind::kGenerator, static_cast<std::int32_t>(k), -1});
  }
  impl->generators = std::move(generators);
  for (std::size_t k = 0; k < impl->generators.size(); ++k) {
    if (!impl->generators[k].is_identity()) {
      impl->add_strong(impl->generators[k], static_cast<std::int32_t>(k + 1));
    }
  }
  impl->schreier_sims();
  impl->checked.clear();
  impl->checked.shrink_to_fit();
  impl_ = std::move(impl);
}

std::size_t PermGroup::degree() const { return impl_->degree; }
const std::vector<Perm>& PermGroup::generators() const { return impl_->generators; }
std::span<const ChainLevel> PermGroup::levels() const { return impl_->levels; }
std::span<const SlpNode> PermGroup::program() const { return impl_->nodes; }

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& lv : impl_->levels) b.push_back(lv.base);
  return b;
}

BigInt PermGroup::order() const {
  BigInt n = 1;
  for (const auto& lv : impl_->levels) n *= lv.orbit.size();
  return n;
}

std::uint64_t PermGroup::order_u64() const {
  BigInt n = order();
  if (n > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw ScaleError("group order does not fit in 63 bits");
  }
  return static_cast<std::uint64_t>(n);
}

bool PermGroup::contains(const Perm& g) const {
  check_degree(g, degree());
  return impl_->sift(g, 0).residue.is_identity();
}

std::vector<std::int32_t> PermGroup::factor_nodes(const Perm& g) const {
  check_degree(g, degree());
  auto s = impl_->sift(g, 0);
  if (!s.residue.is_identity()) throw MembershipError("element is not in the group");
  std::vector<std::int32_t> out;
  for (auto [l, pos] : s.path) {
    std::int32_t n = impl_->levels[l].transversal_node[pos];
    if (impl_->nodes[n].kind != SlpNode::Kind::kIdentity) out.push_back(n);
  }
  return out;
}

Word PermGroup::expand_node(std::int32_t node, std::size_t max_length) const {
  Word out;
  struct Frame {
    std::int32_t node;
    bool inverted;
  };
  std::vector<Frame> stack{{node, false}};
  const auto& nodes = impl_->nodes;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const SlpNode& n = nodes[f.node];
    switch (n.kind) {
      case SlpNode::Kind::kIdentity:
        break;
      case SlpNode::Kind::kGenerator:
        out.push_back(f.inverted ? -(n.a + 1) : (n.a + 1));
        if (out.size() > max_length) throw ScaleError("expanded word exceeds length cap");
        break;
      case SlpNode::Kind::kInverse:
        stack.push_back({n.a, !f.inverted});
        break;
      case SlpNode::Kind::kProduct:
        // (ab)^-1 = b^-1 a^-1; stack is LIFO so push the later factor first
        if (f.inverted) {
          stack.push_back({n.a, true});
          stack.push_back({n.b, true});
        } else {
          stack.push_back({n.b, false});
          stack.push_back({n.a, false});
        }
        break;
    }
  }
  return out;
}

Word PermGroup::factor(const Perm& g, std::size_t max_length) const {
  Word w;
  for (std::int32_t n : factor_nodes(g)) {
    Word part = expand_node(n, max_length);
    w.insert(w.end(), part.begin(), part.end());
    if (w.size() > max_length) throw ScaleError("expanded word exceeds length cap");
  }
  return w;
}

Perm PermGroup::evaluate(const Word& w) const {
  Perm acc(degree());
  const auto& gens = generators();
  for (int letter : w) {
    std::size_t k = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (letter == 0 || k >= gens.size()) throw std::out_of_range("word letter out of range");
    acc = acc * (letter > 0 ? gens[k] : gens[k].inverse());
  }
  return acc;
}

PermGroup PermGroup::with_generator(const Perm& g) const {
  auto gens = generators();
  gens.push_back(g);
  return PermGroup(std::move(gens), degree());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree() != degree()) return false;
  return std::all_of(generators().begin(), generators().end(),
                     [&](const Perm& g) { return other.contains(g); });
}

bool PermGroup::same_elements(const PermGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

Perm PermGroup::element_at(std::uint64_t index) const {
  const auto& lv = impl_->levels;
  std::vector<std::size_t> digits(lv.size());
  for (std::size_t l = lv.size(); l-- > 0;) {
    digits[l] = index % lv[l].orbit.size();
    index /= lv[l].orbit.size();
  }
  if (index != 0) throw std::out_of_range("element index out of range");
  Perm acc(degree());
  for (std::size_t l = 0; l < lv.size(); ++l) acc = acc * lv[l].transversal[digits[l]];
  return acc;
}

std::uint64_t PermGroup::index_of(const Perm& g) const {
  auto s = impl_->sift(g, 0);
  if (!s.residue.is_identity()) throw MembershipError("element is not in the group");
  std::uint64_t index = 0;
  for (auto [l, pos] : s.path) index = index * impl_->levels[l].orbit.size() + pos;
  return index;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm acc(degree());
  for (const auto& lv : impl_->levels) {
    std::uniform_int_distribution<std::size_t> d(0, lv.orbit.size() - 1);
    acc = acc * lv.transversal[d(rng)];
  }
  return acc;
}

namespace {

void dfs_elements(std::span<const ChainLevel> lv, std::size_t l, const Perm& prefix,
                  const std::function<void(const Perm&)>& fn) {
  if (l == lv.size()) {
    fn(prefix);
    return;
  }
  for (const Perm& u : lv[l].transversal) dfs_elements(lv, l + 1, prefix * u, fn);
}

}  // namespace

void for_each_element(const PermGroup& g, const std::function<void(const Perm&)>& fn,
                      std::uint64_t cap) {
  if (g.order() > cap) throw ScaleError("group order exceeds element enumeration cap");
  dfs_elements(g.levels(), 0, Perm(g.degree()), fn);
}

std::vector<Perm> elements(const PermGroup& g, std::uint64_t cap) {
  std::vector<Perm> out;
  for_each_element(g, [&](const Perm& p) { out.push_back(p); }, cap);
  return out;
}

LeftCosetTable::LeftCosetTable(const PermGroup& group, const PermGroup& subgroup,
                               std::uint64_t cap)
    : group_(group), subgroup_(subgroup) {
  if (!subgroup.is_subgroup_of(group)) throw MembershipError("subgroup is not contained in group");
  BigInt idx = group.order() / subgroup.order();
  if (idx > cap) throw ScaleError("index exceeds coset cap");
  std::size_t n = static_cast<std::size_t>(idx);
  reps_.push_back(Perm(group.degree()));
  index_.emplace(canonical(reps_[0]), 0);
  for (std::size_t i = 0; i < reps_.size() && reps_.size() < n; ++i) {
    for (const Perm& s : group.generators()) {
      Perm x = s * reps_[i];
      Perm key = canonical(x);
      if (index_.contains(key)) continue;
      index_.emplace(std::move(key), reps_.size());
      reps_.push_back(std::move(x));
    }
  }
  if (reps_.size() != n) throw InconsistencyError("coset enumeration did not close");
}

Perm LeftCosetTable::canonical(const Perm& x) const {
  Perm c = x;
  for (const ChainLevel& lv : subgroup_.levels()) {
    std::size_t best = 0;
    Point best_img = c(lv.orbit[0]);
    for (std::size_t k = 1; k < lv.orbit.size(); ++k) {
      Point img = c(lv.orbit[k]);
      if (img < best_img) {
        best_img = img;
        best = k;
      }
    }
    if (best != 0) c = c * lv.transversal[best];
  }
  return c;
}

std::size_t LeftCosetTable::locate(const Perm& x) const {
  auto it = index_.find(canonical(x));
  if (it == index_.end()) throw MembershipError("element is not in the ambient group");
  return it->second;
}

std::pair<std::size_t, Perm> LeftCosetTable::act(const Perm& g, std::size_t i) const {
  Perm x = g * reps_[i];
  std::size_t j = locate(x);
  return {j, reps_[j].inverse() * x};
}

std::vector<Perm> LeftCosetTable::generator_action() const {
  std::vector<Perm> out;
  for (const Perm& s : group_.generators()) {
    std::vector<Point> img(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) img[i] = static_cast<Point>(locate(s * reps_[i]));
    out.emplace_back(std::move(img));
  }
  return out;
}

std::vector<Perm> coset_transversal(const PermGroup& group, const PermGroup& subgroup,
                                    CosetSide side, std::uint64_t cap) {
  LeftCosetTable table(group, subgroup, cap);
  std::vector<Perm> reps = table.representatives();
  if (side == CosetSide::kRight) {
    for (Perm& r : reps) r = r.inverse();
  }
  return reps;
}

}  // namespace endotriv
