// Acceptance suite: one pass/fail line per criterion, exit code equal to the
// number of failures. Pass the CLI binary path as argv[1] so the determinism
// criterion can run the tool end to end.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aspectra/enumerate.hpp"
#include "aspectra/families.hpp"
#include "aspectra/harness.hpp"
#include "aspectra/spectral.hpp"
#include "aspectra/transforms.hpp"
#include "oracles.hpp"

using namespace aspectra;

namespace {

const std::vector<double> kAlphaGrid{0.0, 0.25, 0.5, 0.75};

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s: criterion %d — %s (%s)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Every supertree with k=3, m <= 6 solves at the default tolerance with
//    certified residual and gap below 1e-9, in under two minutes.
void criterion_solver_certification() {
  auto start = std::chrono::steady_clock::now();
  int solved = 0;
  double worst_residual = 0.0, worst_gap = 0.0;
  bool ok = true;
  for (int m = 1; m <= 6; ++m) {
    for (const auto& h : enumerate_supertrees(3, m)) {
      for (double alpha : kAlphaGrid) {
        SolverOptions so;
        so.alpha = alpha;
        auto r = spectral_radius(h, so);
        worst_residual = std::max(worst_residual, r.residual);
        worst_gap = std::max(worst_gap, r.cw_gap);
        ok = ok && r.residual <= 1e-9 && r.cw_gap <= 1e-9;
        ++solved;
      }
    }
  }
  auto secs = std::chrono::duration_cast<std::chrono::duration<double>>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  ok = ok && secs < 120.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%d solves, max residual %.2e, max gap %.2e, %.1f s", solved, worst_residual,
                worst_gap, secs);
  report(1, "solver certification", ok, detail);
}

// 2. rho_0 of a power hypergraph matches the 2-graph value to the 2/k power.
void criterion_power_oracle() {
  bool ok = true;
  double worst = 0.0;
  int checked = 0;
  auto check = [&](const std::vector<std::pair<int, int>>& tree) {
    double rho2 = oracles::two_graph_rho(tree);
    for (int k : {3, 4}) {
      double rho = spectral_radius(power_hypergraph(tree, k)).rho;
      double err = std::abs(rho - std::pow(rho2, 2.0 / k));
      worst = std::max(worst, err);
      ok = ok && err <= 1e-6;
      ++checked;
    }
  };
  for (int d = 1; d <= 8; ++d) {
    std::vector<std::pair<int, int>> tree;
    for (int i = 0; i < d; ++i) tree.emplace_back(i, i + 1);
    check(tree);
  }
  for (int m = 1; m <= 8; ++m) {
    std::vector<std::pair<int, int>> tree;
    for (int i = 0; i < m; ++i) tree.emplace_back(0, i + 1);
    check(tree);
  }
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; a + b <= 7; ++b) {
      std::vector<std::pair<int, int>> tree{{0, 1}};
      int next = 2;
      for (int i = 0; i < a; ++i) tree.emplace_back(0, next++);
      for (int j = 0; j < b; ++j) tree.emplace_back(1, next++);
      check(tree);
    }
  }
  double anchor = std::abs(spectral_radius(star(3, 4)).rho - std::cbrt(4.0));
  ok = ok && anchor <= 1e-6;
  char detail[160];
  std::snprintf(detail, sizeof detail, "%d pairs, max |err| %.2e, anchor |err| %.2e", checked,
                worst, anchor);
  report(2, "power-hypergraph oracle", ok, detail);
}

bool records_confirmed(const VerificationReport& rep, const std::string& needle, int* found) {
  bool ok = true;
  for (const auto& r : rep.instances) {
    if (r.description.find(needle) == std::string::npos) continue;
    ++*found;
    ok = ok && r.verdict == "confirmed";
  }
  return ok;
}

// 3 & 4. Full rankings: unique maximum and second place for m in {4,5,6};
//        the complete double-star chain for m-1 in {4,5,6}.
void criteria_extremal() {
  bool rank_ok = true, chain_ok = true;
  int rank_records = 0, chain_records = 0;
  for (int m : {4, 5, 6, 7}) {
    SuiteOptions opts;
    opts.m = m;
    opts.alphas = kAlphaGrid;
    auto rep = extremal_scan(opts);
    if (m <= 6) {
      rank_ok = rank_ok && records_confirmed(rep, "hyperstar-maximum", &rank_records);
      rank_ok = rank_ok && records_confirmed(rep, "second-place", &rank_records);
    }
    if (m >= 5) chain_ok = chain_ok && records_confirmed(rep, "double-star chain", &chain_records);
  }
  char d3[96], d4[96];
  std::snprintf(d3, sizeof d3, "%d records, margin 1e-8", rank_records);
  std::snprintf(d4, sizeof d4, "%d ordered pairs, margin 1e-8", chain_records);
  report(3, "hyperstar maximality and second place", rank_ok && rank_records == 4 * 2 * 3, d3);
  report(4, "double-star chain", chain_ok && chain_records > 0, d4);
}

// 5. Every standard grafting instance (bases with <= 3 edges, p+q <= 6)
//    reports confirmed on the alpha grid.
void criterion_grafting() {
  SuiteOptions opts;
  opts.alphas = kAlphaGrid;
  auto instances = standard_grafting_instances(opts);
  auto rep = verify_grafting(instances, opts);
  auto counts = rep.counts();
  int confirmed = counts.count("confirmed") ? counts.at("confirmed") : 0;
  bool ok = !instances.empty() && confirmed == static_cast<int>(rep.instances.size());
  char detail[120];
  std::snprintf(detail, sizeof detail, "%zu instances x %zu alphas, %d confirmed",
                instances.size(), kAlphaGrid.size(), confirmed);
  report(5, "grafting suites", ok, detail);
}

// 6. NC(m,d) maxima sit at H1/H2 for (6,4), (7,4), (7,5); the NC(7) global
//    maximum is at diameter 4; conjecture status is reported per alpha.
void criterion_nc() {
  bool ok = true;
  int max_records = 0, conjecture_records = 0, global_records = 0;
  {
    SuiteOptions opts;
    opts.m = 6;
    opts.d = 4;
    opts.alphas = kAlphaGrid;
    auto rep = nc_scan(opts);
    ok = ok && records_confirmed(rep, "nc-maximum", &max_records);
    for (const auto& r : rep.instances)
      if (r.description.find("conjecture") != std::string::npos) ++conjecture_records;
  }
  {
    SuiteOptions opts;
    opts.m = 7;
    opts.alphas = kAlphaGrid;
    auto rep = nc_scan(opts);  // d in {4,5} plus the global comparison
    ok = ok && records_confirmed(rep, "nc-maximum", &max_records);
    ok = ok && records_confirmed(rep, "nc-global-maximum", &global_records);
    for (const auto& r : rep.instances)
      if (r.description.find("conjecture") != std::string::npos) ++conjecture_records;
  }
  ok = ok && max_records == 4 * 3 && global_records == 4 && conjecture_records == 4 * 3;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%d maxima, %d global, %d conjecture status lines", max_records, global_records,
                conjecture_records);
  report(6, "NC extremal", ok, detail);
}

// 7. Structural property suites: degree preservation, handshake, supertree
//    size, canonical key vs brute force.
void criterion_structure() {
  bool ok = true;
  std::string why = "all held";
  // 2-switch preserves every degree on the sampled standard instances.
  SuiteOptions opts;
  opts.m = 5;
  opts.per_class_cap = 16;
  for (const auto& inst : standard_switch_instances(opts)) {
    auto [switched, rec] = two_switch(inst.g, inst.e, inst.f, inst.u1, inst.v1);
    if (switched.degrees() != inst.g.degrees()) {
      ok = false;
      why = "2-switch changed a degree";
    }
  }
  // Handshake and supertree size for every enumerated class.
  for (int m = 1; m <= 6 && ok; ++m) {
    for (const auto& h : enumerate_supertrees(3, m)) {
      long sum = 0;
      for (int d : h.degrees()) sum += d;
      if (sum != 3L * h.edge_count() || h.vertex_count() != 2 * m + 1 || !is_supertree(h)) {
        ok = false;
        why = "handshake or size failed at m=" + std::to_string(m);
      }
    }
  }
  // Canonical keys agree with the brute-force permutation oracle at m <= 4.
  for (int m = 1; m <= 4 && ok; ++m) {
    auto classes = enumerate_supertrees(3, m);
    auto brute = oracles::brute_enumerate_supertrees(3, m);
    if (classes.size() != brute.size()) {
      ok = false;
      why = "class count mismatch at m=" + std::to_string(m);
      break;
    }
    std::set<oracles::EdgeList> forms;
    for (const auto& h : classes) {
      oracles::EdgeList e{h.edges().begin(), h.edges().end()};
      forms.insert(oracles::brute_canonical_form(h.vertex_count(), e));
      std::vector<Edge> rev;
      for (const Edge& edge : h.edges()) {
        Edge r;
        for (Vertex v : edge) r.push_back(h.vertex_count() - 1 - v);
        rev.push_back(r);
      }
      if (canonical_key(Hypergraph::build(3, h.vertex_count(), rev)) != canonical_key(h)) {
        ok = false;
        why = "relabeled key mismatch";
      }
    }
    if (forms.size() != classes.size()) {
      ok = false;
      why = "brute-force form collision at m=" + std::to_string(m);
    }
  }
  report(7, "structure invariants", ok, why);
}

// 8. Two consecutive CLI runs of `verify --suite all` are byte-identical.
void criterion_determinism(const char* cli) {
  if (cli == nullptr) {
    report(8, "determinism", false, "CLI binary path not supplied");
    return;
  }
  auto dir = std::filesystem::temp_directory_path();
  auto rep1 = dir / "aspectra_rep1.json";
  auto rep2 = dir / "aspectra_rep2.json";
  auto out1 = dir / "aspectra_out1.txt";
  auto out2 = dir / "aspectra_out2.txt";
  std::string base = std::string("\"") + cli +
                     "\" verify --suite all --k 3 --m 6 --alphas 0,0.25,0.5,0.75 --json ";
  int rc1 = std::system((base + rep1.string() + " > " + out1.string()).c_str());
  int rc2 = std::system((base + rep2.string() + " > " + out2.string()).c_str());
  bool ok = rc1 == 0 && rc2 == 0;
  std::string detail = "exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2);
  if (ok) {
    std::string a = read_file(rep1), b = read_file(rep2);
    std::string sa = read_file(out1), sb = read_file(out2);
    ok = !a.empty() && a == b && sa == sb;
    detail = "report " + std::to_string(a.size()) + " bytes, stdout " +
             std::to_string(sa.size()) + " bytes, " + (ok ? "identical" : "DIFFER");
  }
  for (const auto& p : {rep1, rep2, out1, out2}) std::filesystem::remove(p);
  report(8, "determinism", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  criterion_solver_certification();
  criterion_power_oracle();
  criteria_extremal();
  criterion_grafting();
  criterion_nc();
  criterion_structure();
  criterion_determinism(argc > 1 ? argv[1] : nullptr);
  std::printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria passed"
                                    : "ACCEPTANCE: some criteria FAILED");
  return failures;
}
