#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "endotriv/permgroup.hpp"

namespace endotriv {

/// p-part of n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
std::uint64_t p_part(const BigInt& n, std::uint64_t p);

/// Subgroup generated by the given elements, adding only elements that are not
/// already members (so the generator list stays short).
PermGroup subgroup_generated(std::size_t degree, const std::vector<Perm>& elements);

bool is_normal(const PermGroup& group, const PermGroup& subgroup);
bool is_p_group(const PermGroup& group, std::uint64_t p);

/// A Sylow p-subgroup, grown from random p-elements of successive normalizers
/// with a fixed seed.
PermGroup sylow(const PermGroup& group, std::uint64_t p, std::uint64_t cap = kDefaultElementCap);
inline PermGroup sylow_2(const PermGroup& group, std::uint64_t cap = kDefaultElementCap) {
  return sylow(group, 2, cap);
}

/// Element-scan normalizer and centralizer. MembershipError if H is not a
/// subgroup of G, ScaleError if |G| exceeds the cap.
PermGroup normalizer(const PermGroup& group, const PermGroup& subgroup,
                     std::uint64_t cap = kDefaultElementCap);
PermGroup centralizer(const PermGroup& group, const PermGroup& subgroup,
                      std::uint64_t cap = kDefaultElementCap);

/// Smallest normal subgroup of G containing `generators`. If `abort` is given it
/// is consulted after every growth step and may stop the computation, in
/// which case std::nullopt is returned.
std::optional<PermGroup> normal_closure(
    const PermGroup& group, const std::vector<Perm>& generators,
    const std::function<bool(const PermGroup&)>& abort = nullptr);
PermGroup normal_closure(const PermGroup& group, const PermGroup& subgroup);
PermGroup derived_subgroup(const PermGroup& group);
PermGroup center(const PermGroup& group, std::uint64_t cap = kDefaultElementCap);
/// A ∩ B by scanning the smaller factor. DimensionError on degree mismatch.
PermGroup intersection(const PermGroup& a, const PermGroup& b,
                       std::uint64_t cap = kDefaultElementCap);

/// O_{2'}(G): largest normal subgroup of odd order.
PermGroup o_lower_odd(const PermGroup& group, std::uint64_t cap = kDefaultElementCap);
/// O_2(G): largest normal 2-subgroup, the core of a Sylow 2-subgroup.
PermGroup o_lower_2(const PermGroup& group, std::uint64_t cap = kDefaultElementCap);
/// O^{p'}(G): normal closure of a Sylow p-subgroup.
PermGroup o_upper_pprime(const PermGroup& group, std::uint64_t p,
                         std::uint64_t cap = kDefaultElementCap);

/// Action of G on the left cosets of a normal subgroup N; the kernel is N.
class QuotientRep {
 public:
  /// MembershipError if N is not a normal subgroup of G.
  QuotientRep(const PermGroup& group, const PermGroup& normal,
              std::uint64_t cap = kDefaultElementCap);
  const PermGroup& image() const { return image_; }
  /// Image of g; generator i maps to image().generators()[i].
  Perm map(const Perm& g) const;

 private:
  LeftCosetTable table_;
  PermGroup image_;
};

/// Invariant factors d_1 | d_2 | ... (all > 1) of an abelian quotient, with
/// preimages in G of a matching basis and the coordinates of every group
/// generator in that basis.
struct AbelianInvariants {
  std::vector<std::uint64_t> invariants;
  std::vector<Perm> basis_preimages;
  std::vector<std::vector<std::uint64_t>> generator_coordinates;  // [generator][basis index]
};

AbelianInvariants abelian_invariants(const PermGroup& group, std::uint64_t cap = kDefaultElementCap);
/// Same for the odd part of G/[G,G].
AbelianInvariants abelian_invariants_odd(const PermGroup& group,
                                         std::uint64_t cap = kDefaultElementCap);

/// Every subgroup of a 2-group of order at most 2^8, each exactly once, sorted
/// by order and then by element set.
std::vector<PermGroup> subgroups_of_2group(const PermGroup& p);

struct SubgroupClass {
  PermGroup representative;
  PermGroup context;                // the acting group
  std::vector<std::size_t> members; // indices into the input list
};

/// Partition of `subgroups` under conjugation by `acting`. The representative
/// of each class has the lexicographically least sorted element list.
std::vector<SubgroupClass> subgroup_classes_under(const std::vector<PermGroup>& subgroups,
                                                  const PermGroup& acting);

struct TwoGroupType {
  enum class Tag { kTrivial, kCyclic, kAbelian, kDihedral, kQuaternion, kSemidihedral, kModular, kOther };
  Tag tag = Tag::kTrivial;
  unsigned m = 0;  // log2 of the order
  std::optional<Perm> r, s;
};

std::string to_string(TwoGroupType::Tag tag);

/// std::invalid_argument if |P| is not a power of 2.
TwoGroupType classify_2group(const PermGroup& p);

}  // namespace endotriv
