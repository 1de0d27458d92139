// One PASS/FAIL line per acceptance criterion, with wall-clock time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "endotriv/analysis.hpp"
#include "endotriv/families.hpp"
#include "endotriv/grouptheory.hpp"
#include "endotriv/modrep.hpp"
#include "support.hpp"

using namespace endotriv;
using Tag = TwoGroupType::Tag;

namespace {

// Collects failed expectations; the first one is reported.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) failures.push_back(what);
  }
};

std::string str(const BigInt& x) { return x.str(); }

bool is_s3(const PermGroup& g) { return g.order() == 6 && derived_subgroup(g).order() == 3; }

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::string provenance_of(const AnalysisReport& r, const std::string& field) {
  for (const auto& [f, src] : r.provenance) {
    if (f == field) return src;
  }
  return "";
}

void sd_models(Outcome& o) {
  for (unsigned m = 4; m <= 6; ++m) {
    PermGroup g = semidihedral_group(m);
    o.expect_eq(g.order(), BigInt(1) << m, "order of SD_2^" + std::to_string(m));
    auto t = classify_2group(g);
    o.expect(t.tag == Tag::kSemidihedral && t.m == m, "SD_2^" + std::to_string(m) + " classified as " +
                                                          to_string(t.tag));
  }
  o.expect(classify_2group(dihedral_group(4)).tag == Tag::kDihedral, "D16 misclassified");
  o.expect(classify_2group(quaternion_group(4)).tag == Tag::kQuaternion, "Q16 misclassified");
  o.summary = "SD16, SD32, SD64 semidihedral; D16 dihedral; Q16 quaternion";
}

void local_structure(Outcome& o, int eps, unsigned q) {
  PermImage img = sl3_eps(eps, q);
  const PermGroup& g = img.group;
  PermGroup p = sylow_2(g);
  auto type = classify_2group(p);
  o.expect(p.order() == 16 && type.tag == Tag::kSemidihedral, "Sylow 2-subgroup not SD16");
  PermGroup np = normalizer(g, p);
  ExplicitElements e = explicit_elements(eps, q);
  PermGroup qv = subgroup_generated(g.degree(), {img.map(e.u), img.map(e.v)});
  o.expect_eq(qv.order(), 4, "|<u,v>| != 4");
  PermGroup nq = normalizer(g, qv);
  PermGroup cq = centralizer(g, qv);
  if (eps == 1) {
    o.expect_eq(np.order(), 16, "N_G(P) != P");
    o.expect_eq(nq.order(), 24, "|N_G(Q)| != 24");
    o.expect(is_s3(QuotientRep(nq, cq).image()), "N_G(Q)/C_G(Q) not S_3");
    o.expect(o_upper_pprime(nq, 2).same_elements(nq), "O^{2'}(N_G(Q)) != N_G(Q)");
  } else {
    o.expect_eq(np.order(), 48, "|N_G(P)| != 48");
    o.expect_eq(o_lower_odd(np).order(), 3, "odd part of N_G(P) not of order 3");
    o.expect_eq(nq.order(), 216, "|N_G(Q)| != 216");
    o.expect(is_s3(QuotientRep(nq, cq).image()), "N_G(Q)/C_G(Q) not S_3");
    auto cj = [](const FqMatrix& x, const FqMatrix& h) { return h.inverse() * x * h; };
    const FqMatrix &u = e.u, &v = e.v, &t = e.t, &a = e.a, &x = e.x, &y = e.y;
    bool rel = cj(x, a) == x * y.pow(-3) && cj(y, a) == x * y.pow(-2) && cj(x, t) == x.pow(-2) * y.pow(3) &&
               cj(y, t) == x.inverse() * y.pow(2) && cj(a, t) == a * a * u * v && cj(u, a) == v &&
               cj(v, a) == u * v && cj(u * v, a) == u && t * t == u;
    o.expect(rel, "matrix relations among u, v, t, a, x, y fail");
  }
  auto r = k_g_circle(g, p);
  o.expect(r.equals_normalizer, "K_G° != N_G(P)");
  o.expect(craven_bound(r).empty(), "Grodal–Craven bound nontrivial");
  o.summary = "|G| = " + str(g.order()) + ", |N_G(P)| = " + str(np.order()) + ", |N_G(Q)| = " +
              str(nq.order()) + ", K_G° = N_G(P)";
  if (eps == -1) {
    AnalysisReport rep = theorem_a_report(g);
    o.expect(rep.k_group_invariants.empty(), "K(G) nontrivial");
    o.summary += ", K(G) = 1";
  }
}

void self_normalizing(Outcome& o, const PermGroup& g, const BigInt& order) {
  o.expect_eq(g.order(), order, "wrong group order");
  PermGroup p = sylow_2(g);
  o.expect(classify_2group(p).tag == Tag::kSemidihedral && p.order() == 16, "Sylow 2-subgroup not SD16");
  o.expect_eq(normalizer(g, p).order(), 16, "Sylow 2-subgroup not self-normalizing");
  AnalysisReport rep = theorem_a_report(g);
  o.expect(rep.shortcuts_applied.size() == 1 &&
               rep.shortcuts_applied[0].find("self-normalizing") != std::string::npos,
           "self-normalizing shortcut did not fire");
  o.expect(rep.k_group_invariants.empty(), "K(G) nontrivial");
  o.expect(rep.kgc && rep.kgc->equals_normalizer, "K_G° route disagrees");
  o.summary = "|G| = " + str(g.order()) + ", N_G(P) = P = SD16, shortcut fired, K_G° = N_G(P), K(G) = 1";
}

void pgl_star_case(Outcome& o) {
  self_normalizing(o, pgl_star(3), 720);
  o.expect(classify_2group(sylow_2(pgl2_square(3))).tag == Tag::kDihedral, "PGL_2(9) Sylow not dihedral");
  o.summary += "; PGL_2(9) has dihedral Sylow";
}

void three_m10(Outcome& o) {
  std::size_t agree = 0;
  auto checks = reproduce_3m10();
  for (const auto& c : checks) {
    agree += c.ok();
    o.expect(c.ok(), c.name + ": got " + c.actual + ", expected " + c.expected);
  }
  o.summary = std::to_string(agree) + "/" + std::to_string(checks.size()) +
              " stored values agree (2160, 48, {1,1,1}, {12,33}, norm rank 68, strip 1, K ≅ ℤ/3ℤ both routes)";
}

void slpm_case(Outcome& o) {
  PermImage img = to_perm(classical_group(Classical::kSLpm, 2, 3), PermAction::kFaithful);
  const PermGroup& g = img.group;
  PermGroup p = sylow_2(g);
  o.expect(p.order() == 16 && classify_2group(p).tag == Tag::kSemidihedral, "Sylow 2-subgroup not SD16");
  PermGroup o2 = o_lower_2(g);
  const FieldPtr& f = Field::of_order(3);
  o.expect(o2.contains(img.map(FqMatrix::scalar(f, 2, f->neg(1)))), "-I not in O_2(G)");
  AnalysisReport rep = theorem_a_report(g);
  o.expect(!rep.shortcuts_applied.empty() && rep.shortcuts_applied[0].find("O_2(G) > 1") != std::string::npos,
           "O_2 shortcut did not fire");
  o.expect(starts_with(provenance_of(rep, "k_group"), "shortcut:"), "provenance does not mark the shortcut");
  o.expect(rep.k_group_invariants == rep.x_group_invariants && rep.k_over_x_invariants.empty(), "K != X");
  o.summary = "|O_2(G)| = " + std::to_string(o2.order_u64()) + " contains -I, shortcut provenance, K(G) = X(G)";
}

void properties(Outcome& o) {
  auto ks = support::krull_schmidt_stability(20, 10);
  o.expect(ks.ok, "Krull-Schmidt: " + ks.detail);
  auto fr = support::frobenius_reciprocity(20);
  o.expect(fr.ok, "Frobenius reciprocity: " + fr.detail);
  auto nr = support::planted_free_rank(50);
  o.expect(nr.ok, "planted free rank: " + nr.detail);

  PermGroup g = fixture_3m10();
  PermGroup p = sylow_2(g);
  PermGroup n = normalizer(g, p);
  auto chars = one_dim_modules(n, 8);
  std::vector<GModule> x;
  for (std::size_t i = 1; i < chars.size(); ++i) {
    GModule ind = induce(chars[i], g);
    Decomposition d = decompose(ind);
    o.expect(support::block_diagonal_under(ind, d), "3.M10 certificate not block diagonal");
    for (const auto& s : d.summands) {
      if (is_endotrivial(s, p)) x.push_back(s);
    }
  }
  o.expect_eq(x.size(), 2u, "expected two endo-trivial correspondents");
  if (x.size() == 2) {
    for (const auto& m : x) o.expect(is_endotrivial(dual(m), p), "dual of a correspondent not endo-trivial");
    o.expect_eq(projective_free_dim(restrict(tensor(x[0], x[1]), p)), 1u, "X1 (x) X2 not endo-trivial");
    o.expect_eq(projective_free_dim(restrict(tensor(x[0], x[0]), p)), 1u, "X1 (x) X1 not endo-trivial");
  }
  o.summary = "Krull-Schmidt " + std::to_string(ks.checks) + " checks, reciprocity " +
              std::to_string(fr.checks) + ", planted rank " + std::to_string(nr.checks) +
              ", dual/tensor closure on 3.M10 correspondents";
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "semidihedral models", 1, sd_models},
      {2, "SL_3(3) local structure", 30, [](Outcome& o) { local_structure(o, 1, 3); }},
      {3, "SU_3(5) local structure", 600, [](Outcome& o) { local_structure(o, -1, 5); }},
      {4, "M_11", 60, [](Outcome& o) { self_normalizing(o, fixture_m11(), 7920); }},
      {5, "PGL*_2(9)", 60, pgl_star_case},
      {6, "3.M_10 computation", 600, three_m10},
      {7, "SL^±_2(3) shortcut", 10, slpm_case},
      {8, "property suites", 300, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    bool pass = o.failures.empty();
    failed += !pass;
    std::printf("%s %d %s: %s (%.2f s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                pass ? o.summary.c_str() : o.failures.front().c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
