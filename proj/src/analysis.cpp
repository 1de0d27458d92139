#include "endotriv/analysis.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "endotriv/errors.hpp"
#include "endotriv/families.hpp"

namespace endotriv {

namespace {

std::string big(const BigInt& x) { return x.str(); }

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool is_prime_power(unsigned q) {
  if (q < 2) return false;
  unsigned p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

// Best-effort name of G/O_{2'}(G) from its order and the Sylow 2-subgroup.
std::string quotient_label(const BigInt& order, unsigned m) {
  if (order == (BigInt(1) << m)) return "SD_" + std::to_string(1u << m);
  if (order == 7920) return "M_11";
  struct Candidate {
    std::string name;
    BigInt base;
  };
  std::vector<Candidate> candidates;
  for (unsigned q = 3; q <= 81; q += 2) {
    if (!is_prime_power(q)) continue;
    BigInt b = q;
    std::string qs = std::to_string(q);
    candidates.push_back({"PGL*_2(" + std::to_string(q * q) + ")", b * b * (b * b * b * b - 1)});
    candidates.push_back({(q % 4 == 3 ? "SL^±_2(" : "SU^±_2(") + qs + ")", 2 * b * (b * b - 1)});
    for (int eps : {1, -1}) {
      if ((static_cast<int>(q % 4) + eps) % 4 != 0) continue;  // q = -eps mod 4
      BigInt qe = b - eps;
      BigInt g3 = (qe % 3 == 0) ? 3 : 1;
      candidates.push_back({(eps == 1 ? "PSL_3(" : "PSU_3(") + qs + ")",
                            b * b * b * (b * b - 1) * (b * b * b - eps) / g3});
    }
  }
  for (const auto& c : candidates) {
    if (order == c.base) return c.name;
  }
  // odd extensions by field automorphisms and diagonal automorphisms are small
  for (unsigned h = 3; h <= 27; h += 2) {
    for (const auto& c : candidates) {
      if (order == c.base * h) return c.name + ".C_" + std::to_string(h);
    }
  }
  return "unrecognized";
}

// Run `body(i)` for i < n across threads, rethrowing the first exception.
template <class F>
void parallel_for(std::size_t n, F body) {
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

KGCircleResult k_g_circle(const PermGroup& g, const PermGroup& p,
                          std::optional<std::size_t> class_limit) {
  KGCircleResult r;
  r.normalizer = normalizer(g, p);
  auto classes = subgroup_classes_under(subgroups_of_2group(p), r.normalizer);
  std::vector<SubgroupClass> nontrivial;
  for (auto& c : classes) {
    if (!c.representative.is_trivial()) nontrivial.push_back(std::move(c));
  }
  if (class_limit && *class_limit < nontrivial.size()) nontrivial.resize(*class_limit);

  std::vector<PermGroup> parts(nontrivial.size());
  r.class_log.resize(nontrivial.size());
  for (std::size_t i = 0; i < nontrivial.size(); ++i) {
    const PermGroup& q = nontrivial[i].representative;
    ClassContribution& log = r.class_log[i];
    log.subgroup_order = q.order_u64();
    log.class_size = nontrivial[i].members.size();
    auto type = classify_2group(q);
    log.subgroup_type = to_string(type.tag) + " of order " + std::to_string(log.subgroup_order);
    try {
      PermGroup nq = normalizer(g, q);
      PermGroup up = o_upper_pprime(nq, 2);
      parts[i] = intersection(r.normalizer, up);
      log.normalizer_order = nq.order();
      log.upper_order = up.order();
      log.contribution_order = parts[i].order();
    } catch (const ScaleError& e) {
      throw ScaleError("subgroup class " + std::to_string(i) + " (" + log.subgroup_type + "): " +
                       e.what());
    }
  }

  std::vector<Perm> gens;
  for (const auto& part : parts) {
    for (const auto& x : part.generators()) gens.push_back(x);
  }
  PermGroup join = subgroup_generated(g.degree(), gens);
  r.join_was_normal = is_normal(r.normalizer, join);
  r.kgc = r.join_was_normal ? join : normal_closure(r.normalizer, join);
  r.equals_normalizer = r.kgc.order() == r.normalizer.order();
  if (!r.equals_normalizer) {
    QuotientRep quo(r.normalizer, r.kgc);
    r.ab_quotient_invariants = sorted(abelian_invariants(quo.image()).invariants);
  }
  return r;
}

std::vector<std::uint64_t> craven_bound(const KGCircleResult& r) {
  if (r.equals_normalizer) return {};
  return r.ab_quotient_invariants;
}

std::vector<std::uint64_t> x_group(const PermGroup& g) {
  return sorted(abelian_invariants_odd(g).invariants);
}

CharacterTable::CharacterTable(const std::vector<GModule>& characters) {
  for (const auto& chi : characters) {
    if (chi.dim() != 1) throw DimensionError("character table needs 1-dimensional modules");
    std::vector<Elem> code;
    for (const auto& m : chi.generator_images()) code.push_back(m(0, 0));
    codes_.push_back(std::move(code));
  }
  if (!characters.empty()) field_ = characters.front().field();
}

std::optional<std::size_t> CharacterTable::find(const GModule& chi) const {
  std::vector<Elem> code;
  for (const auto& m : chi.generator_images()) code.push_back(m(0, 0));
  auto it = std::find(codes_.begin(), codes_.end(), code);
  if (it == codes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - codes_.begin());
}

std::size_t CharacterTable::product(std::size_t a, std::size_t b) const {
  std::vector<Elem> code(codes_[a].size());
  for (std::size_t i = 0; i < code.size(); ++i) code[i] = field_->mul(codes_[a][i], codes_[b][i]);
  auto it = std::find(codes_.begin(), codes_.end(), code);
  if (it == codes_.end()) throw InconsistencyError("character list is not closed under tensor");
  return static_cast<std::size_t>(it - codes_.begin());
}

std::size_t CharacterTable::identity() const {
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (std::all_of(codes_[i].begin(), codes_[i].end(), [](Elem x) { return x == 1; })) return i;
  }
  throw InconsistencyError("character list lacks the trivial character");
}

bool CharacterTable::is_subgroup(const std::vector<std::size_t>& s) const {
  std::set<std::size_t> set(s.begin(), s.end());
  if (!set.count(identity())) return false;
  for (auto a : set) {
    for (auto b : set) {
      if (!set.count(product(a, b))) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> CharacterTable::quotient_invariants(const std::vector<std::size_t>& s,
                                                               const std::vector<std::size_t>& t) const {
  std::vector<std::size_t> sub = t.empty() ? std::vector<std::size_t>{identity()} : t;
  if (!is_subgroup(s) || !is_subgroup(sub)) throw std::invalid_argument("not a subgroup");
  // coset of x is labelled by the least index in x*T
  auto coset = [&](std::size_t x) {
    std::size_t best = product(x, sub[0]);
    for (auto y : sub) best = std::min(best, product(x, y));
    return best;
  };
  std::vector<std::size_t> labels;
  for (auto x : s) labels.push_back(coset(x));
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() == 1) return {};
  std::map<std::size_t, Point> point;
  for (std::size_t i = 0; i < labels.size(); ++i) point[labels[i]] = static_cast<Point>(i);
  std::vector<Perm> gens;
  for (auto x : s) {
    std::vector<Point> images(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) images[i] = point.at(coset(product(x, labels[i])));
    gens.emplace_back(std::move(images));
  }
  return sorted(abelian_invariants(PermGroup(gens, labels.size())).invariants);
}

KGroupResult k_group_via_green(const PermGroup& g, const PermGroup& p, unsigned e, std::size_t cap) {
  KGroupResult r;
  r.normalizer = normalizer(g, p);
  r.field_exponent = e;
  BigInt index = g.order() / r.normalizer.order();
  if (index > cap) {
    throw ScaleError("|G : N_G(P)| = " + big(index) + " exceeds the induction cap " +
                     std::to_string(cap));
  }
  r.characters = one_dim_modules(r.normalizer, e);
  const std::size_t n = r.characters.size();
  if (n == 1) {
    r.decomposed = false;
    r.correspondent_dims.resize(1);
    r.endotrivial_flags.resize(1);
    r.residue_degrees.resize(1);
    r.flagged = {true};
    return r;
  }
  r.correspondent_dims.resize(n);
  r.endotrivial_flags.resize(n);
  r.residue_degrees.resize(n);
  r.flagged.assign(n, false);
  parallel_for(n, [&](std::size_t i) {
    Decomposition d = decompose(induce(r.characters[i], g, cap));
    std::size_t count = 0;
    for (const auto& s : d.summands) {
      bool et = restricts_to_trivial_plus_free(s, p);
      if (s.dim() <= kTensorCheckDim && is_endotrivial(s, p) != et) {
        throw InconsistencyError("restriction and tensor-square tests disagree on a summand of dimension " +
                                 std::to_string(s.dim()));
      }
      count += et;
      r.correspondent_dims[i].push_back(s.dim());
      r.endotrivial_flags[i].push_back(et);
    }
    r.residue_degrees[i] = d.residue_degrees;
    r.flagged[i] = count == 1;
  });
  CharacterTable table(r.characters);
  std::vector<std::size_t> flagged;
  for (std::size_t i = 0; i < n; ++i) {
    if (r.flagged[i]) flagged.push_back(i);
  }
  if (!table.is_subgroup(flagged)) {
    throw InconsistencyError("characters with endo-trivial Green correspondents do not form a subgroup");
  }
  r.group_structure = table.quotient_invariants(flagged);
  return r;
}

std::string format_invariants(const std::vector<std::uint64_t>& inv) {
  if (inv.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) out += " ⊕ ";
    out += "ℤ/" + std::to_string(inv[i]) + "ℤ";
  }
  return out;
}

AnalysisReport theorem_a_report(const PermGroup& g, const ReportOptions& options) {
  AnalysisReport rep;
  rep.degree = g.degree();
  rep.group_order = g.order();
  PermGroup p = sylow_2(g);
  rep.sylow_type = classify_2group(p);
  if (rep.sylow_type.tag != TwoGroupType::Tag::kSemidihedral || rep.sylow_type.m < 4) {
    throw std::invalid_argument("Sylow 2-subgroup is " + to_string(rep.sylow_type.tag) +
                                " of order " + big(p.order()) + "; a semidihedral Sylow 2-subgroup of "
                                "order at least 16 is required");
  }
  rep.provenance.push_back({"sylow_type", "computed: Sylow 2-subgroup and cyclic maximal subgroup"});
  PermGroup np = normalizer(g, p);
  rep.normalizer_order = np.order();
  rep.o2prime_order = o_lower_odd(g).order_u64();
  rep.o2_order = o_lower_2(g).order_u64();
  rep.provenance.push_back({"o2prime_order", "computed: largest normal subgroup of odd order"});
  rep.provenance.push_back({"o2_order", "computed: core of the Sylow 2-subgroup"});
  rep.quotient_label = "heuristic: " + quotient_label(rep.group_order / rep.o2prime_order, rep.sylow_type.m);
  rep.provenance.push_back({"quotient_label", "heuristic: order of G/O_{2'}(G) and Sylow type"});
  rep.x_group_invariants = x_group(g);
  rep.provenance.push_back({"x_group", "computed: odd part of G/[G,G]"});

  enum class Shortcut { kNone, kNormalTwo, kSelfNormalizing };
  Shortcut shortcut = Shortcut::kNone;
  if (rep.o2_order > 1) {
    shortcut = Shortcut::kNormalTwo;
    rep.shortcuts_applied.push_back("O_2(G) > 1 forces K(G) = X(G)");
  } else if (np.order() == p.order()) {
    shortcut = Shortcut::kSelfNormalizing;
    rep.shortcuts_applied.push_back("self-normalizing Sylow 2-subgroup forces K(G) = 1");
  }

  const bool run_routes = shortcut == Shortcut::kNone || options.verify_shortcuts;
  std::optional<std::vector<std::size_t>> k_set;
  std::vector<std::size_t> x_set;
  std::optional<CharacterTable> table;
  if (run_routes) {
    rep.kgc = k_g_circle(g, p);
    rep.craven_invariants = craven_bound(*rep.kgc);
    rep.provenance.push_back({"kgc", "computed: normal closure in N_G(P) of the intersections "
                                     "N_G(P) ∩ O^{2'}(N_G(Q)) over classes of 1 < Q <= P"});
    rep.provenance.push_back({"craven_invariants", "Grodal–Craven bound: (N_G(P)/K_G°)^ab"});
    BigInt index = g.order() / np.order();
    if (options.skip_green) {
      rep.notes.push_back("Green route skipped on request");
    } else if (index > options.induction_cap) {
      rep.notes.push_back("Green route skipped: |G : N_G(P)| = " + big(index) +
                          " exceeds the induction cap " + std::to_string(options.induction_cap));
    } else {
      rep.kgroup = k_group_via_green(g, p, options.field_exponent, options.induction_cap);
      rep.provenance.push_back({"kgroup", "direct: Green correspondents of the 1-dimensional "
                                          "kN_G(P)-modules tested for endo-triviality"});
      for (std::size_t i = 0; i < rep.kgroup->characters.size(); ++i) {
        for (std::size_t j = 0; j < rep.kgroup->residue_degrees[i].size(); ++j) {
          std::size_t r = rep.kgroup->residue_degrees[i][j];
          if (r > 1) {
            rep.notes.push_back("summand of dimension " +
                                std::to_string(rep.kgroup->correspondent_dims[i][j]) +
                                " has End/J of dimension " + std::to_string(r) +
                                ": indecomposable but not absolutely indecomposable");
          }
        }
      }
      if (rep.kgroup->group_structure != rep.craven_invariants) {
        throw InconsistencyError("Grodal–Craven bound " + format_invariants(rep.craven_invariants) +
                                 " disagrees with the Green route " +
                                 format_invariants(rep.kgroup->group_structure));
      }
    }

    std::vector<GModule> chars = rep.kgroup ? rep.kgroup->characters
                                            : one_dim_modules(np, options.field_exponent);
    table.emplace(chars);
    std::vector<std::size_t> craven_set;
    for (std::size_t i = 0; i < chars.size(); ++i) {
      bool kills = std::all_of(rep.kgc->kgc.generators().begin(), rep.kgc->kgc.generators().end(),
                               [&](const Perm& k) { return chars[i].image(k).is_identity(); });
      if (kills) craven_set.push_back(i);
    }
    if (rep.kgroup) {
      std::vector<std::size_t> green_set;
      for (std::size_t i = 0; i < chars.size(); ++i) {
        if (rep.kgroup->flagged[i]) green_set.push_back(i);
      }
      rep.notes.push_back(std::string("characters flagged by the Green route ") +
                          (green_set == craven_set ? "coincide with" : "differ from") +
                          " the characters trivial on K_G°");
      k_set = green_set;
    } else {
      k_set = craven_set;
    }
    for (const auto& chi : one_dim_modules(g, options.field_exponent)) {
      auto idx = table->find(restrict(chi, np));
      if (!idx) throw InconsistencyError("restriction of a character of G is not a character of N_G(P)");
      x_set.push_back(*idx);
    }
    std::sort(x_set.begin(), x_set.end());
    if (!std::includes(k_set->begin(), k_set->end(), x_set.begin(), x_set.end())) {
      throw InconsistencyError("X(G) does not embed in the computed K(G)");
    }
  }

  if (k_set) {
    rep.k_group_invariants = table->quotient_invariants(*k_set);
    rep.k_over_x_invariants = table->quotient_invariants(*k_set, x_set);
  }
  switch (shortcut) {
    case Shortcut::kNormalTwo:
      if (k_set && !rep.k_over_x_invariants.empty()) {
        throw InconsistencyError("O_2(G) > 1 but the computed K(G)/X(G) is " +
                                 format_invariants(rep.k_over_x_invariants));
      }
      rep.k_group_invariants = rep.x_group_invariants;
      rep.k_over_x_invariants = {};
      rep.provenance.push_back({"k_group", "shortcut: a nontrivial normal 2-subgroup forces K(G) = X(G)"});
      break;
    case Shortcut::kSelfNormalizing:
      if (k_set && !rep.k_group_invariants.empty()) {
        throw InconsistencyError("self-normalizing Sylow 2-subgroup but the computed K(G) is " +
                                 format_invariants(rep.k_group_invariants));
      }
      rep.k_group_invariants = {};
      rep.k_over_x_invariants = {};
      rep.provenance.push_back({"k_group", "shortcut: a self-normalizing Sylow 2-subgroup forces K(G) = 1"});
      break;
    case Shortcut::kNone:
      rep.provenance.push_back(
          {"k_group", rep.kgroup ? "direct: Green route, cross-checked with the Grodal–Craven bound"
                                 : "Grodal–Craven bound (Green route not run)"});
      break;
  }

  BigInt kx = 1;
  for (auto d : rep.k_over_x_invariants) kx *= d;
  rep.within_theorem_bound = kx == 1 || kx == 3;
  if (!rep.within_theorem_bound) {
    rep.notes.push_back("K(G)/X(G) has order " + big(kx) + ", outside the expected bound ℤ/3ℤ");
  }

  const std::string k = format_invariants(rep.k_group_invariants);
  if (rep.k_group_invariants.empty()) {
    rep.conclusion = "T(G) ≅ ℤ/2ℤ ⊕ ℤ, K(G) = X(G) = 1";
  } else if (rep.k_over_x_invariants.empty()) {
    rep.conclusion = "K(G) = X(G) ≅ " + k + ", T(G) ≅ X(G) ⊕ ℤ/2ℤ ⊕ ℤ";
  } else {
    rep.conclusion = "K(G) ≅ " + k + ", K(G)/X(G) ≅ " + format_invariants(rep.k_over_x_invariants) +
                     ", T(G) ≅ K(G) ⊕ ℤ/2ℤ ⊕ ℤ";
  }
  rep.provenance.push_back({"t_group", "symbolic: torsion-free rank one and the ℤ/2ℤ summand of a "
                                       "semidihedral Sylow 2-subgroup"});
  return rep;
}

std::vector<FixtureCheck> reproduce_3m10() {
  std::vector<FixtureCheck> out;
  auto check = [&](std::string name, std::string expected, std::string actual) {
    out.push_back({std::move(name), std::move(expected), std::move(actual)});
  };
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
  };
  auto dims = [](const Decomposition& d) {
    std::vector<std::size_t> v;
    for (const auto& s : d.summands) v.push_back(s.dim());
    return v;
  };

  PermGroup g = fixture_3m10();
  check("|G|", "2160", big(g.order()));
  PermGroup p = sylow_2(g);
  auto type = classify_2group(p);
  check("Sylow 2-subgroup", "semidihedral of order 16",
        to_string(type.tag) + " of order " + big(p.order()));
  PermGroup n = normalizer(g, p);
  check("|N_G(P)|", "48", big(n.order()));
  PermGroup c3 = o_lower_odd(n);
  bool direct = c3.order() == 3 && is_normal(n, p) && centralizer(n, c3).same_elements(n);
  check("N_G(P) = P x C_3", "true", direct ? "true" : "false");

  FieldPtr f = Field::get(2, 8);
  Decomposition dn = decompose(induce(trivial_module(p, f), n));
  check("Ind_P^N k summand dims", "{1, 1, 1}", list(dims(dn)));
  std::vector<bool> flags;
  for (const auto& s : dn.summands) flags.push_back(is_isomorphic(trivial_module(n, f), s));
  std::sort(flags.begin(), flags.end());
  std::string shown = "[";
  for (std::size_t i = 0; i < flags.size(); ++i) shown += std::string(i ? ", " : "") + (flags[i] ? "true" : "false");
  check("trivial-flags of Ind_P^N k summands, sorted", "[false, false, true]", shown + "]");

  auto chars = one_dim_modules(n, 8);
  check("1-dimensional kN-modules", "3", std::to_string(chars.size()));
  std::vector<GModule> x;
  for (std::size_t i = 1; i < chars.size(); ++i) {
    Decomposition d = decompose(induce(chars[i], g));
    check("Ind_N^G λ" + std::to_string(i) + " summand dims", "{12, 33}", list(dims(d)));
    for (const auto& s : d.summands) {
      if (s.dim() == 33) x.push_back(s);
    }
  }
  if (x.size() == 2) {
    GModule r = restrict(x[0], p);
    std::size_t nr = norm_rank_tensor(r, dual(r));
    check("norm rank of Res_P(X1 (x) X1*)", "68", std::to_string(nr));
    check("projective-free dim of Res_P(X1 (x) X1*)", "1", std::to_string(33 * 33 - 16 * nr));
    check("X1 endo-trivial", "true", is_endotrivial(x[0], p) ? "true" : "false");
    check("X2 = X1*", "true", is_isomorphic(x[1], dual(x[0])) ? "true" : "false");
  } else {
    check("33-dimensional correspondents", "2", std::to_string(x.size()));
  }

  auto kgc = k_g_circle(g, p);
  check("K(G) via Grodal–Craven bound", "ℤ/3ℤ", format_invariants(craven_bound(kgc)));
  auto green = k_group_via_green(g, p, 8);
  check("K(G) via Green correspondents", "ℤ/3ℤ", format_invariants(green.group_structure));
  auto rep = theorem_a_report(g);
  check("conclusion", "K(G) ≅ ℤ/3ℤ, K(G)/X(G) ≅ ℤ/3ℤ, T(G) ≅ K(G) ⊕ ℤ/2ℤ ⊕ ℤ", rep.conclusion);
  return out;
}

std::string to_json(const AnalysisReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["degree"] = r.degree;
  j["group_order"] = big(r.group_order);
  j["sylow"] = {{"type", to_string(r.sylow_type.tag)}, {"order", 1u << r.sylow_type.m}};
  j["normalizer_order"] = big(r.normalizer_order);
  j["o2prime_order"] = r.o2prime_order;
  j["o2_order"] = r.o2_order;
  j["quotient_label"] = r.quotient_label;
  j["x_group_invariants"] = sorted(r.x_group_invariants);
  if (r.kgc) {
    ordered_json classes = ordered_json::array();
    for (const auto& c : r.kgc->class_log) {
      classes.push_back({{"subgroup", c.subgroup_type},
                         {"class_size", c.class_size},
                         {"normalizer_order", big(c.normalizer_order)},
                         {"upper_order", big(c.upper_order)},
                         {"contribution_order", big(c.contribution_order)}});
    }
    j["kgc"] = {{"order", big(r.kgc->kgc.order())},
                {"join_was_normal", r.kgc->join_was_normal},
                {"equals_normalizer", r.kgc->equals_normalizer},
                {"ab_quotient_invariants", sorted(r.kgc->ab_quotient_invariants)},
                {"classes", classes}};
    j["craven_invariants"] = sorted(r.craven_invariants);
  } else {
    j["kgc"] = nullptr;
    j["craven_invariants"] = nullptr;
  }
  if (r.kgroup) {
    ordered_json chars = ordered_json::array();
    for (std::size_t i = 0; i < r.kgroup->characters.size(); ++i) {
      chars.push_back({{"correspondent_dims", r.kgroup->correspondent_dims[i]},
                       {"endotrivial", r.kgroup->endotrivial_flags[i]},
                       {"residue_degrees", r.kgroup->residue_degrees[i]},
                       {"flagged", static_cast<bool>(r.kgroup->flagged[i])}});
    }
    j["kgroup"] = {{"field", "GF(2^" + std::to_string(r.kgroup->field_exponent) + ")"},
                   {"decomposed", r.kgroup->decomposed},
                   {"characters", chars},
                   {"group_structure", sorted(r.kgroup->group_structure)}};
  } else {
    j["kgroup"] = nullptr;
  }
  j["shortcuts_applied"] = r.shortcuts_applied;
  j["k_group_invariants"] = sorted(r.k_group_invariants);
  j["k_over_x_invariants"] = sorted(r.k_over_x_invariants);
  j["within_theorem_bound"] = r.within_theorem_bound;
  j["conclusion"] = r.conclusion;
  ordered_json prov = ordered_json::object();
  for (const auto& [field, source] : r.provenance) prov[field] = source;
  j["provenance"] = prov;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "group: degree " << r.degree << ", order " << r.group_order << "\n";
  out << "Sylow 2-subgroup: " << to_string(r.sylow_type.tag) << " of order " << (1u << r.sylow_type.m)
      << ", |N_G(P)| = " << r.normalizer_order << "\n";
  out << "|O_{2'}(G)| = " << r.o2prime_order << ", |O_2(G)| = " << r.o2_order << "\n";
  out << "G/O_{2'}(G): " << r.quotient_label << "\n";
  out << "X(G) ≅ " << format_invariants(r.x_group_invariants) << "\n";
  for (const auto& s : r.shortcuts_applied) out << "shortcut: " << s << "\n";
  if (r.kgc) {
    out << "|K_G°| = " << r.kgc->kgc.order() << (r.kgc->equals_normalizer ? " = |N_G(P)|" : "")
        << ", Grodal–Craven bound " << format_invariants(r.craven_invariants) << "\n";
  }
  if (r.kgroup && !r.kgroup->decomposed) {
    out << "Green route: X(N_G(P)) is trivial, K(G) = 1\n";
  } else if (r.kgroup) {
    out << "Green route over GF(2^" << r.kgroup->field_exponent << "): ";
    for (std::size_t i = 0; i < r.kgroup->characters.size(); ++i) {
      if (i) out << "; ";
      out << "λ" << i << " -> {";
      for (std::size_t k = 0; k < r.kgroup->correspondent_dims[i].size(); ++k) {
        if (k) out << ", ";
        out << r.kgroup->correspondent_dims[i][k] << (r.kgroup->endotrivial_flags[i][k] ? "*" : "");
      }
      out << "}";
    }
    out << " (* endo-trivial), K(G) ≅ " << format_invariants(r.kgroup->group_structure) << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "conclusion: " << r.conclusion << "\n";
  for (const auto& [field, source] : r.provenance) out << "  " << field << ": " << source << "\n";
  return out.str();
}

}  // namespace endotriv
