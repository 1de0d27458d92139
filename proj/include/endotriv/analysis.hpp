#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endotriv/grouptheory.hpp"
#include "endotriv/modrep.hpp"

namespace endotriv {

inline constexpr int kReportSchemaVersion = 1;

/// Contribution of one N_G(P)-class of nontrivial subgroups Q <= P.
struct ClassContribution {
  std::uint64_t subgroup_order = 0;
  std::size_t class_size = 0;
  std::string subgroup_type;
  BigInt normalizer_order;         // |N_G(Q)|
  BigInt upper_order;              // |O^{2'}(N_G(Q))|
  BigInt contribution_order;       // |N_G(P) ∩ O^{2'}(N_G(Q))|
};

struct KGCircleResult {
  PermGroup normalizer;            // N_G(P)
  PermGroup kgc;                   // K_G°
  bool join_was_normal = false;    // the join of the contributions was already normal
  bool equals_normalizer = false;
  std::vector<std::uint64_t> ab_quotient_invariants;  // (N_G(P)/K_G°)^ab
  std::vector<ClassContribution> class_log;
};

/// K_G° from the N_G(P)-classes of 1 < Q <= P, sorted by order. `class_limit`
/// truncates the class list (for monotonicity checks); the result is then a
/// subgroup of the full K_G°.
KGCircleResult k_g_circle(const PermGroup& g, const PermGroup& p,
                          std::optional<std::size_t> class_limit = std::nullopt);
/// Invariants of (N_G(P)/K_G°)^ab, empty when K_G° = N_G(P).
std::vector<std::uint64_t> craven_bound(const KGCircleResult& r);
/// Odd abelian invariants of G.
std::vector<std::uint64_t> x_group(const PermGroup& g);

struct KGroupResult {
  PermGroup normalizer;
  unsigned field_exponent = 8;
  std::vector<GModule> characters;  // one_dim_modules(N, e), trivial first
  std::vector<std::vector<std::size_t>> correspondent_dims;  // summand dims of Ind_N^G λ
  std::vector<std::vector<bool>> endotrivial_flags;          // per summand
  std::vector<std::vector<std::size_t>> residue_degrees;     // per summand
  std::vector<bool> flagged;        // exactly one endo-trivial summand
  std::vector<std::uint64_t> group_structure;
  /// False when X(N_G(P)) is trivial: the only character is k, which is its
  /// own Green correspondent, and nothing is induced.
  bool decomposed = true;
};

/// Summands up to this dimension are also tested through the tensor square.
inline constexpr std::size_t kTensorCheckDim = 64;

/// Summands are tested with restricts_to_trivial_plus_free, cross-checked by
/// is_endotrivial up to kTensorCheckDim. ScaleError if |G : N_G(P)| exceeds `cap`. InconsistencyError if the
/// flagged characters do not form a subgroup containing the trivial one.
KGroupResult k_group_via_green(const PermGroup& g, const PermGroup& p, unsigned e = 8,
                               std::size_t cap = kInductionCap);

/// Index sets into a list of characters, with their group structure.
class CharacterTable {
 public:
  explicit CharacterTable(const std::vector<GModule>& characters);
  std::size_t size() const { return codes_.size(); }
  /// Index of a character given by its generator images, or nullopt.
  std::optional<std::size_t> find(const GModule& chi) const;
  std::size_t identity() const;
  std::size_t product(std::size_t a, std::size_t b) const;
  bool is_subgroup(const std::vector<std::size_t>& s) const;
  /// Invariants of S/T for subgroups T <= S (T empty means trivial).
  std::vector<std::uint64_t> quotient_invariants(const std::vector<std::size_t>& s,
                                                 const std::vector<std::size_t>& t = {}) const;

 private:
  FieldPtr field_;
  std::vector<std::vector<Elem>> codes_;
};

struct ReportOptions {
  unsigned field_exponent = 8;
  bool skip_green = false;
  /// Also run K_G° and Green routes when a shortcut already decides K(G).
  bool verify_shortcuts = true;
  std::size_t induction_cap = kInductionCap;
};

struct AnalysisReport {
  std::size_t degree = 0;
  BigInt group_order;
  TwoGroupType sylow_type;
  BigInt normalizer_order;
  std::uint64_t o2prime_order = 1;
  std::uint64_t o2_order = 1;
  std::string quotient_label;  // heuristic name of G/O_{2'}(G)
  std::vector<std::uint64_t> x_group_invariants;
  std::optional<KGCircleResult> kgc;
  std::vector<std::uint64_t> craven_invariants;
  std::optional<KGroupResult> kgroup;
  std::vector<std::string> shortcuts_applied;
  std::vector<std::uint64_t> k_group_invariants;
  std::vector<std::uint64_t> k_over_x_invariants;
  bool within_theorem_bound = true;  // K(G)/X(G) trivial or of order 3
  std::string conclusion;
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> notes;
};

/// std::invalid_argument unless the Sylow 2-subgroup is semidihedral of order
/// at least 16. InconsistencyError if two routes to K(G) disagree.
AnalysisReport theorem_a_report(const PermGroup& g, const ReportOptions& options = {});

/// One comparison against a stored expected value.
struct FixtureCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

/// End-to-end run on the 36-point triple cover of M10: orders, the splitting of
/// Ind_P^N k, the Green correspondents, the tensor-square strip, duality and
/// K(G) by both routes.
std::vector<FixtureCheck> reproduce_3m10();

/// "1" for the trivial group, else "ℤ/aℤ ⊕ ℤ/bℤ".
std::string format_invariants(const std::vector<std::uint64_t>& inv);
std::string to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

}  // namespace endotriv
