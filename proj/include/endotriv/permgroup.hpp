#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "endotriv/errors.hpp"
#include "endotriv/perm.hpp"

namespace endotriv {

using BigInt = boost::multiprecision::cpp_int;

/// A word in the generators of a group: +k is generator k-1, -k its inverse.
using Word = std::vector<int>;

/// Default cap for anything that enumerates group elements.
inline constexpr std::uint64_t kDefaultElementCap = 1ULL << 20;

/// Node of the straight-line program that records how every stored chain
/// element was built from the original generators.
struct SlpNode {
  enum class Kind : std::uint8_t { kIdentity, kGenerator, kInverse, kProduct };
  Kind kind = Kind::kIdentity;
  std::int32_t a = -1;  // generator index, or operand node
  std::int32_t b = -1;  // second operand of a product
};

/// One level of the stabilizer chain. transversal[i] maps `base` to orbit[i].
struct ChainLevel {
  Point base = 0;
  std::vector<Point> orbit;
  std::vector<std::int32_t> orbit_position;  // by point, -1 outside the orbit
  std::vector<Perm> transversal;
  std::vector<Perm> transversal_inverse;
  std::vector<std::int32_t> transversal_node;
};

/// A permutation group given by generators, with a deterministic stabilizer
/// chain. Every transversal element carries a straight-line program over the
/// original generators, so membership and factorization share one structure.
///
/// Immutable after construction; copies share the chain.
class PermGroup {
 public:
  PermGroup();
  /// Empty `generators` yields the trivial group. Throws DimensionError if a
  /// generator has the wrong degree.
  PermGroup(std::vector<Perm> generators, std::size_t degree);
  static PermGroup trivial(std::size_t degree) { return PermGroup({}, degree); }

  std::size_t degree() const;
  const std::vector<Perm>& generators() const;
  std::size_t num_generators() const { return generators().size(); }

  BigInt order() const;
  /// Throws ScaleError if the order does not fit in 63 bits.
  std::uint64_t order_u64() const;
  bool is_trivial() const { return levels().empty(); }

  bool contains(const Perm& g) const;
  /// Word over the generators evaluating to g. MembershipError if g is not
  /// in the group; ScaleError if the expanded word exceeds `max_length`.
  Word factor(const Perm& g, std::size_t max_length = 1u << 24) const;
  Perm evaluate(const Word& w) const;

  /// Straight-line program nodes whose left-to-right product is g.
  std::vector<std::int32_t> factor_nodes(const Perm& g) const;
  Word expand_node(std::int32_t node, std::size_t max_length = 1u << 24) const;

  std::span<const ChainLevel> levels() const;
  std::span<const SlpNode> program() const;
  std::vector<Point> base() const;

  /// Group generated by the current generators plus `g`.
  PermGroup with_generator(const Perm& g) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool same_elements(const PermGroup& other) const;

  /// Elements are indexed in mixed radix over the chain, level 0 most
  /// significant: index -> u_0[i_0] * u_1[i_1] * ...
  Perm element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Perm& g) const;
  Perm random_element(std::mt19937_64& rng) const;

 private:
  struct Impl;
  explicit PermGroup(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Evaluates group elements in another monoid (matrices, permutations, ...)
/// through the group's straight-line program, memoizing every node.
///
/// `Ops` provides `T identity() const`, `T mul(const T&, const T&) const`,
/// and `T inv(const T&) const`.
template <class T, class Ops>
class Evaluator {
 public:
  Evaluator(PermGroup group, std::vector<T> generator_images, Ops ops)
      : group_(std::move(group)),
        images_(std::move(generator_images)),
        ops_(std::move(ops)),
        memo_(group_.program().size()) {
    if (images_.size() != group_.num_generators()) {
      throw DimensionError("one image per generator required");
    }
  }

  T operator()(const Perm& g) {
    T acc = ops_.identity();
    for (std::int32_t id : group_.factor_nodes(g)) acc = ops_.mul(acc, node(id));
    return acc;
  }

  const T& node(std::int32_t id) {
    if (memo_[id]) return *memo_[id];
    std::vector<std::int32_t> stack{id};
    auto prog = group_.program();
    while (!stack.empty()) {
      std::int32_t cur = stack.back();
      if (memo_[cur]) {
        stack.pop_back();
        continue;
      }
      const SlpNode& n = prog[cur];
      switch (n.kind) {
        case SlpNode::Kind::kIdentity:
          memo_[cur] = ops_.identity();
          stack.pop_back();
          break;
        case SlpNode::Kind::kGenerator:
          memo_[cur] = images_[n.a];
          stack.pop_back();
          break;
        case SlpNode::Kind::kInverse:
          if (!memo_[n.a]) {
            stack.push_back(n.a);
          } else {
            memo_[cur] = ops_.inv(*memo_[n.a]);
            stack.pop_back();
          }
          break;
        case SlpNode::Kind::kProduct:
          if (!memo_[n.a]) {
            stack.push_back(n.a);
          } else if (!memo_[n.b]) {
            stack.push_back(n.b);
          } else {
            memo_[cur] = ops_.mul(*memo_[n.a], *memo_[n.b]);
            stack.pop_back();
          }
          break;
      }
    }
    return *memo_[id];
  }

 private:
  PermGroup group_;
  std::vector<T> images_;
  Ops ops_;
  std::vector<std::optional<T>> memo_;
};

/// Each element exactly once; ScaleError if |G| > cap.
std::vector<Perm> elements(const PermGroup& g, std::uint64_t cap = kDefaultElementCap);
void for_each_element(const PermGroup& g, const std::function<void(const Perm&)>& fn,
                      std::uint64_t cap = kDefaultElementCap);

/// Left cosets t_i H of H in G, with t_0 the identity and a canonical
/// representative used for lookup.
class LeftCosetTable {
 public:
  LeftCosetTable(const PermGroup& group, const PermGroup& subgroup,
                 std::uint64_t cap = kDefaultElementCap);

  std::size_t size() const { return reps_.size(); }
  const std::vector<Perm>& representatives() const { return reps_; }
  std::size_t locate(const Perm& x) const;
  /// g * t_i = t_j * h with h in H; returns (j, h).
  std::pair<std::size_t, Perm> act(const Perm& g, std::size_t i) const;
  /// Images of the group generators as permutations of the cosets.
  std::vector<Perm> generator_action() const;

 private:
  Perm canonical(const Perm& x) const;
  PermGroup group_;
  PermGroup subgroup_;
  std::vector<Perm> reps_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

enum class CosetSide { kLeft, kRight };

/// Exactly |G:H| representatives, identity first. MembershipError if H is not
/// a subgroup of G.
std::vector<Perm> coset_transversal(const PermGroup& group, const PermGroup& subgroup,
                                    CosetSide side, std::uint64_t cap = kDefaultElementCap);

}  // namespace endotriv
