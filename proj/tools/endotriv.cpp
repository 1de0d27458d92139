#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "endotriv/analysis.hpp"
#include "endotriv/families.hpp"
#include "endotriv/io.hpp"

using namespace endotriv;

namespace {

PermGroup construct(const std::string& family, unsigned q, unsigned m) {
  if (family == "sd") return semidihedral_group(m);
  if (family == "sl") return sl3_eps(1, q).group;
  if (family == "su") return sl3_eps(-1, q).group;
  if (family == "slpm") return to_perm(classical_group(Classical::kSLpm, 2, q), PermAction::kFaithful).group;
  if (family == "supm") return to_perm(classical_group(Classical::kSUpm, 2, q), PermAction::kFaithful).group;
  if (family == "pglstar") return pgl_star(q);
  if (family == "psl3") return psl3_eps(1, q);
  if (family == "psu3") return psl3_eps(-1, q);
  if (family == "m11") return fixture_m11();
  if (family == "3m10") return fixture_3m10();
  throw std::invalid_argument("unknown family " + family);
}

int run_kgc(const std::string& path) {
  PermGroup g = read_grp(read_file(path));
  PermGroup p = sylow_2(g);
  auto r = k_g_circle(g, p);
  std::cout << "|N_G(P)| = " << r.normalizer.order() << "\n";
  for (const auto& c : r.class_log) {
    std::cout << "  Q " << c.subgroup_type << " (class size " << c.class_size << "): |N_G(Q)| = "
              << c.normalizer_order << ", |O^{2'}(N_G(Q))| = " << c.upper_order
              << ", contribution " << c.contribution_order << "\n";
  }
  std::cout << "join normal in N_G(P): " << (r.join_was_normal ? "yes" : "no") << "\n";
  std::cout << "|K_G°| = " << r.kgc.order() << ", equals N_G(P): " << (r.equals_normalizer ? "yes" : "no")
            << "\n";
  std::cout << "(N_G(P)/K_G°)^ab ≅ " << format_invariants(craven_bound(r)) << "\n";
  return 0;
}

int run_reproduce() {
  bool all = true;
  for (const auto& c : reproduce_3m10()) {
    all = all && c.ok();
    std::cout << (c.ok() ? "ok   " : "DIFF ") << c.name << ": " << c.actual;
    if (!c.ok()) std::cout << " (expected " << c.expected << ")";
    std::cout << "\n";
  }
  std::cout << (all ? "all values agree" : "disagreement found") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trivial source endo-trivial modules for semidihedral Sylow 2-subgroups"};
  app.require_subcommand(1);

  auto* cons = app.add_subcommand("construct", "Write a group of a given family as a .grp file");
  std::string family, out;
  unsigned q = 3, m = 4;
  cons->add_option("--family", family, "sd|sl|su|slpm|supm|pglstar|psl3|psu3|m11|3m10")->required();
  cons->add_option("--q", q, "odd prime power");
  cons->add_option("--m", m, "log2 of the order for sd");
  cons->add_option("--out", out, "output .grp file")->required();

  auto* analyze = app.add_subcommand("analyze", "Classify K(G) and T(G) for a .grp file");
  std::string grp, json;
  unsigned e = 8;
  bool skip_green = false;
  analyze->add_option("file", grp, ".grp file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--field-exp", e, "work over GF(2^e)")->check(CLI::Range(1, 8));
  analyze->add_flag("--skip-green", skip_green, "do not run the Green correspondence route");
  analyze->add_option("--json", json, "write the report as JSON");

  auto* kgc = app.add_subcommand("kgc", "Compute K_G° and (N_G(P)/K_G°)^ab");
  kgc->add_option("file", grp, ".grp file")->required()->check(CLI::ExistingFile);

  auto* reproduce = app.add_subcommand("reproduce-3m10", "Run the triple cover of M10 end to end");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cons) {
      PermGroup g = construct(family, q, m);
      write_file(out, write_grp(g));
      std::cout << "wrote " << out << ": degree " << g.degree() << ", order " << g.order() << "\n";
      return 0;
    }
    if (*analyze) {
      ReportOptions opt;
      opt.field_exponent = e;
      opt.skip_green = skip_green;
      AnalysisReport r = theorem_a_report(read_grp(read_file(grp)), opt);
      std::cout << to_text(r);
      if (!json.empty()) write_file(json, to_json(r));
      return 0;
    }
    if (*kgc) return run_kgc(grp);
    if (*reproduce) return run_reproduce();
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
